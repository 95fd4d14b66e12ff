"""Subset algebras, combinatorial predicates on subsets, preprojective
algebras, packaged example algebras and seeded random algebras."""

from __future__ import annotations

import random
import string
from dataclasses import dataclass, field
from importlib import resources
from itertools import combinations, permutations

from .algebra import BoundQuiverAlgebra, Quiver, build_algebra
from .linalg import QQ, Field
from .textformat import parse_algebra


class ConstructionError(ValueError):
    pass


# -- subset algebras ----------------------------------------------------------

@dataclass(frozen=True)
class SubsetCollection:
    """(d+1)-subsets of {base, ..., base+n-1}; ``cyclic`` makes i+1 wrap around."""

    n: int
    d: int
    sets: tuple[tuple[int, ...], ...]
    cyclic: bool = False
    base: int = 1

    def __post_init__(self):
        seen = set()
        for s in self.sets:
            if len(s) != self.d + 1 or len(set(s)) != len(s):
                raise ConstructionError(f"subset {s} does not have {self.d + 1} distinct elements")
            if any(x < self.base or x >= self.base + self.n for x in s):
                raise ConstructionError(f"subset {s} leaves the ground set")
            if tuple(sorted(s)) in seen:
                raise ConstructionError(f"duplicate subset {s}")
            seen.add(tuple(sorted(s)))
        object.__setattr__(self, "sets", tuple(tuple(sorted(s)) for s in self.sets))

    def successor(self, i: int) -> int | None:
        j = i + 1
        if j < self.base + self.n:
            return j
        return self.base if self.cyclic else None

    def label(self, s: tuple[int, ...]) -> str:
        if self.base + self.n <= 10:
            return "".join(str(x) for x in s)
        return ".".join(str(x) for x in s)


def parse_sets(text: str, n: int | None = None, *, cyclic: bool = False) -> SubsetCollection:
    """``135,136,146`` (one digit per element) or ``1.3.5,1.3.6`` (dotted)."""
    sets = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        if "." in chunk:
            elems = tuple(int(x) for x in chunk.split("."))
        elif chunk.isdigit():
            elems = tuple(int(x) for x in chunk)
        else:
            raise ConstructionError(f"bad subset {chunk!r}")
        sets.append(elems)
    if not sets:
        raise ConstructionError("no subsets given")
    sizes = {len(s) for s in sets}
    if len(sizes) != 1:
        raise ConstructionError("subsets of different sizes")
    base = 0 if any(0 in s for s in sets) else 1
    top = max(max(s) for s in sets)
    n = n if n is not None else top - base + 1
    return SubsetCollection(n, sizes.pop() - 1, tuple(sets), cyclic, base)


def subset_algebra(c: SubsetCollection, field_: Field = QQ) -> BoundQuiverAlgebra:
    """Arrows X -> X - {i} + {i+1}; for each vertex and pair i != j the two
    ways of applying both moves commute, and a way through a missing
    vertex counts as zero."""
    present = set(c.sets)
    labels = {s: c.label(s) for s in c.sets}

    def move(s, i):
        j = c.successor(i)
        if j is None or i not in s or j in s:
            return None
        t = tuple(sorted((set(s) - {i}) | {j}))
        return t if t in present else None

    arrows = []
    arrow_of = {}
    for s in c.sets:
        for i in s:
            t = move(s, i)
            if t is not None:
                name = f"al{i}_{labels[s].replace('.', '_')}"
                arrow_of[(s, i)] = len(arrows)
                arrows.append((name, labels[s], labels[t]))
    quiver = Quiver([labels[s] for s in c.sets], arrows)
    rels = []
    for s in c.sets:
        for i, j in combinations(s, 2):
            terms = {}
            for first, second, sign in ((i, j, 1), (j, i, -1)):
                mid = move(s, first)
                if mid is None or move(mid, second) is None:
                    continue
                terms[(arrow_of[(s, first)], arrow_of[(mid, second)])] = field_(sign)
            if terms:
                rels.append(terms)
    return build_algebra(quiver, rels, field_)


def is_intertwining(I, J) -> bool:
    """i_1 < j_1 < i_2 < j_2 < ... < i_l < j_l."""
    I, J = sorted(I), sorted(J)
    if len(I) != len(J):
        raise ConstructionError("subsets of different sizes")
    chain = [x for pair in zip(I, J) for x in pair]
    return all(a < b for a, b in zip(chain, chain[1:]))


def _cyclically_ordered(seq) -> bool:
    descents = sum(1 for a, b in zip(seq, seq[1:] + seq[:1]) if a > b)
    return descents == 1


def is_crossing(I, J, n: int | None = None) -> bool:
    """Some s, u in I - J and t, v in J - I sit in cyclic order s < t < u < v."""
    only_i = sorted(set(I) - set(J))
    only_j = sorted(set(J) - set(I))
    for s, u in permutations(only_i, 2):
        for t, v in permutations(only_j, 2):
            if _cyclically_ordered([s, t, u, v]):
                return True
    return False


# -- preprojective algebras -----------------------------------------------

def _preprojective_names(rank: int) -> list[tuple[str, str]]:
    if rank - 1 <= 26:
        return [(string.ascii_lowercase[k], string.ascii_uppercase[k]) for k in range(rank - 1)]
    return [(f"x{k + 1}", f"y{k + 1}") for k in range(rank - 1)]


def preprojective_algebra_A(rank: int, field_: Field = QQ) -> BoundQuiverAlgebra:
    """Double of the linear quiver 1 -> ... -> rank with the mesh relation at each vertex."""
    if rank < 1:
        raise ConstructionError("rank must be positive")
    names = _preprojective_names(rank)
    arrows = []
    for k, (fwd, back) in enumerate(names):
        arrows.append((fwd, str(k + 1), str(k + 2)))
        arrows.append((back, str(k + 2), str(k + 1)))
    quiver = Quiver([str(v) for v in range(1, rank + 1)], arrows)
    rels = []
    for v in range(rank):
        rel = {}
        if v < rank - 1:
            # out along the forward arrow and back
            rel[(2 * v, 2 * v + 1)] = field_(-1)
        if v > 0:
            rel[(2 * (v - 1) + 1, 2 * (v - 1))] = field_(1)
        if rel:
            rels.append(rel)
    return build_algebra(quiver, rels, field_)


# -- packaged examples -------------------------------------------------------

@dataclass
class Fixture:
    name: str
    algebra: BoundQuiverAlgebra
    collections: dict[str, str] = field(default_factory=dict)
    idempotents: dict[str, tuple[str, ...]] = field(default_factory=dict)
    blocks: dict[str, list[tuple[str, ...]]] = field(default_factory=dict)


FIXTURE_NAMES = ("aus2", "pi3", "hnak", "boundary", "boundary_drawn")

_FIXTURE_DATA = {
    "aus2": {
        "collections": {"cluster": "S(1),S(3),P(*)"},
        "idempotents": {"middle": ("2",)},
    },
    "pi3": {
        "collections": {"precluster": "S(1),S(3),P(*)"},
        "idempotents": {"end": ("1",), "middle": ("2",)},
    },
    "hnak": {
        "idempotents": {"e04": ("04",)},
    },
    "boundary": {
        "idempotents": {"boundary": ("125", "236", "145", "367", "147")},
        "blocks": {"boundary": [("135", "136", "146"), ("256",), ("347",)]},
    },
    "boundary_drawn": {
        "idempotents": {"boundary": ("125", "236", "145", "367", "147")},
    },
}


def fixture_text(name: str) -> str:
    if name not in _FIXTURE_DATA:
        raise ConstructionError(f"unknown fixture {name!r}; known: {', '.join(FIXTURE_NAMES)}")
    return resources.files("quiverext.fixtures").joinpath(f"{name}.alg").read_text(encoding="utf-8")


_FIXTURE_CACHE: dict[tuple[str, Field], Fixture] = {}


def fixture(name: str, field_: Field | None = None) -> Fixture:
    key = (name, field_ or QQ)
    if key not in _FIXTURE_CACHE:
        A = parse_algebra(fixture_text(name), field=field_)
        data = _FIXTURE_DATA[name]
        _FIXTURE_CACHE[key] = Fixture(
            name,
            A,
            dict(data.get("collections", {})),
            dict(data.get("idempotents", {})),
            dict(data.get("blocks", {})),
        )
    return _FIXTURE_CACHE[key]


def quiver_blocks(A: BoundQuiverAlgebra) -> list[tuple[str, ...]]:
    """Connected components of the underlying graph, in vertex order."""
    parent = list(range(A.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a in A.quiver.arrows:
        parent[find(a.source)] = find(a.target)
    comps: dict[int, list[str]] = {}
    for v in range(A.n):
        comps.setdefault(find(v), []).append(A.quiver.vertices[v])
    return [tuple(c) for c in comps.values()]


# -- random algebras ---------------------------------------------------------

def random_radical_cube_zero(seed: int, *, max_vertices: int = 4, max_arrows: int = 6, field_: Field = QQ) -> BoundQuiverAlgebra:
    """A seeded random bound quiver algebra whose paths of length three vanish.

    Some length-two paths are killed or made to commute with a parallel one.
    """
    rng = random.Random(seed)
    n = rng.randint(1, max_vertices)
    m = rng.randint(0, max_arrows)
    verts = [str(v + 1) for v in range(n)]
    arrows = []
    for k in range(m):
        s, t = rng.randrange(n), rng.randrange(n)
        arrows.append((f"x{k + 1}", verts[s], verts[t]))
    quiver = Quiver(verts, arrows)
    paths2 = [(a, b) for a in range(m) for b in range(m) if quiver.arrows[a].target == quiver.arrows[b].source]
    rels: list[dict] = []
    used = set()
    for p in paths2:
        if p in used:
            continue
        roll = rng.random()
        if roll < 0.35:
            rels.append({p: field_(1)})
            used.add(p)
        elif roll < 0.55:
            s, t = quiver.arrows[p[0]].source, quiver.arrows[p[1]].target
            others = [q for q in paths2 if q != p and q not in used
                      and quiver.arrows[q[0]].source == s and quiver.arrows[q[1]].target == t]
            if others:
                q = rng.choice(others)
                rels.append({p: field_(1), q: field_(-rng.choice([1, 2]))})
                used.update({p, q})
    for a in range(m):
        for b in range(m):
            if quiver.arrows[a].target != quiver.arrows[b].source:
                continue
            for c in range(m):
                if quiver.arrows[b].target == quiver.arrows[c].source:
                    rels.append({(a, b, c): field_(1)})
    return build_algebra(quiver, rels, field_)
