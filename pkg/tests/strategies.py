"""Shared hypothesis strategies and small module zoos."""

from hypothesis import assume
from hypothesis import strategies as st

from quiverext.constructions import random_radical_cube_zero
from quiverext.homology import cosyzygy, syzygy
from quiverext.representations import injective, projective, simple

seeds = st.integers(0, 5_000)


def basic_modules(A):
    out = []
    for v in range(A.n):
        out += [simple(A, v), projective(A, v), injective(A, v)]
    return out


def module_zoo(A):
    """Simples, projectives, injectives and their first syzygies and cosyzygies."""
    base = basic_modules(A)
    extra = []
    for v in range(A.n):
        S = simple(A, v)
        extra += [syzygy(S), cosyzygy(S)]
    return [M for M in base + extra if not M.is_zero()]


# Syzygies grow like (out-degree)^k; these bounds keep property tests at desk scale.
MAX_MODULE_DIM = 10
MAX_OUT_DEGREE = 2


def tame_enough(A) -> bool:
    return all(len(A.quiver.out_arrows(v)) <= MAX_OUT_DEGREE for v in range(A.n))


@st.composite
def algebra_and_modules(draw, count=2, max_vertices=4, max_arrows=5):
    A = random_radical_cube_zero(draw(seeds), max_vertices=max_vertices, max_arrows=max_arrows)
    assume(tame_enough(A))
    zoo = [M for M in module_zoo(A) if M.dim <= MAX_MODULE_DIM] or [simple(A, 0)]
    picks = [zoo[draw(st.integers(0, len(zoo) - 1))] for _ in range(count)]
    return (A, *picks)
