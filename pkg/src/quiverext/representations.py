"""Finite-dimensional left modules as quiver representations.

A representation stores one vector space dimension per vertex and one matrix
per arrow (target x source).  Module maps are per-vertex matrices.  Objects
are treated as immutable; derived data is memoised on the instance.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import lcm
from typing import Iterable, Sequence

import sympy

from .algebra import BoundQuiverAlgebra, Path
from .linalg import (
    Field,
    Mat,
    SparseEchelon,
    block_diag,
    charpoly,
    column_space,
    hstack,
    is_invertible,
    kernel_basis,
    left_inverse,
    left_kernel,
    mat_power,
    poly_eval_matrix,
    rank,
    right_inverse,
    solve,
)

# Exhaustive search over End / Hom is used when |field|^dim stays below this.
ENUMERATION_LIMIT = 4096
ISO_SWEEP = 12
ISO_SWEEP_ESCALATED = 48
SPLIT_SWEEP = 24


class RepresentationError(ValueError):
    pass


class Representation:
    def __init__(
        self,
        algebra: BoundQuiverAlgebra,
        dims: Sequence[int],
        maps: Sequence[Mat],
        label: str | None = None,
        *,
        check: bool = True,
    ):
        Q = algebra.quiver
        if len(dims) != Q.n or len(maps) != len(Q.arrows):
            raise RepresentationError("dimension vector or map list has the wrong length")
        self.algebra = algebra
        self.dims = tuple(int(d) for d in dims)
        self.maps = tuple(maps)
        self.label = label
        self._cache: dict = {}
        for a, m in zip(Q.arrows, self.maps):
            if m.shape != (self.dims[a.target], self.dims[a.source]):
                raise RepresentationError(f"arrow {a.name}: matrix shape {m.shape} does not fit")
        if check and not self.satisfies_relations():
            raise RepresentationError("representation violates a relation of the algebra")

    @property
    def field(self) -> Field:
        return self.algebra.field

    @property
    def dim(self) -> int:
        return sum(self.dims)

    def is_zero(self) -> bool:
        return self.dim == 0

    def dimension_vector(self) -> dict[str, int]:
        return dict(zip(self.algebra.quiver.vertices, self.dims))

    def name(self) -> str:
        if self.label:
            return self.label
        return "M(" + ",".join(str(d) for d in self.dims) + ")"

    def __repr__(self):
        return f"<{self.name()} dims={self.dims}>"

    def word_matrix(self, arrows: tuple, start: int | None = None) -> Mat:
        """Action of a walk-order word: M_{a_k} ... M_{a_1}."""
        if not arrows:
            return Mat.identity(self.field, self.dims[start])
        wc = self._cache.setdefault("words", {})
        m = wc.get(arrows)
        if m is None:
            if len(arrows) == 1:
                m = self.maps[arrows[0]]
            else:
                m = self.maps[arrows[-1]] @ self.word_matrix(arrows[:-1])
            wc[arrows] = m
        return m

    def basis_action(self, b: int) -> Mat:
        p = self.algebra.basis[b]
        return self.word_matrix(p.arrows, p.start)

    def satisfies_relations(self) -> bool:
        for rel in self.algebra.relations:
            total = None
            for w, c in rel.items():
                term = self.word_matrix(w).scale(c)
                total = term if total is None else total + term
            if total is not None and not total.is_zero():
                return False
        return True


@dataclass
class ModuleMap:
    source: Representation
    target: Representation
    mats: tuple[Mat, ...]

    def __post_init__(self):
        self.mats = tuple(self.mats)

    def is_zero(self) -> bool:
        return all(m.is_zero() for m in self.mats)

    def commutes(self) -> bool:
        M, N = self.source, self.target
        for i, a in enumerate(M.algebra.quiver.arrows):
            if N.maps[i] @ self.mats[a.source] != self.mats[a.target] @ M.maps[i]:
                return False
        return True

    def __matmul__(self, other: "ModuleMap") -> "ModuleMap":
        return ModuleMap(other.source, self.target, [a @ b for a, b in zip(self.mats, other.mats)])

    def __add__(self, other: "ModuleMap") -> "ModuleMap":
        return ModuleMap(self.source, self.target, [a + b for a, b in zip(self.mats, other.mats)])

    def scale(self, c) -> "ModuleMap":
        return ModuleMap(self.source, self.target, [m.scale(c) for m in self.mats])

    def is_injective(self) -> bool:
        return all(rank(m) == m.ncols for m in self.mats)

    def is_surjective(self) -> bool:
        return all(rank(m) == m.nrows for m in self.mats)

    def is_isomorphism(self) -> bool:
        return all(is_invertible(m) for m in self.mats)

    def total(self) -> Mat:
        return block_diag(self.source.field, self.mats)


def identity_map(M: Representation) -> ModuleMap:
    return ModuleMap(M, M, [Mat.identity(M.field, d) for d in M.dims])


def zero_map(M: Representation, N: Representation) -> ModuleMap:
    return ModuleMap(M, N, [Mat.zeros(M.field, n, m) for m, n in zip(M.dims, N.dims)])


def linear_combination(maps: Sequence[ModuleMap], coeffs: Sequence) -> ModuleMap:
    out = None
    for f, c in zip(maps, coeffs):
        if not c:
            continue
        t = f.scale(c)
        out = t if out is None else out + t
    if out is None:
        return zero_map(maps[0].source, maps[0].target)
    return out


# -- standard modules ------------------------------------------------------

def zero_module(A: BoundQuiverAlgebra) -> Representation:
    F = A.field
    return Representation(
        A, [0] * A.n, [Mat.zeros(F, 0, 0) for _ in A.quiver.arrows], label="0", check=False
    )


def simple(A: BoundQuiverAlgebra, v: int) -> Representation:
    key = ("simple", v)
    cache = A.__dict__.setdefault("_modcache", {})
    if key not in cache:
        F = A.field
        dims = [1 if w == v else 0 for w in range(A.n)]
        maps = [Mat.zeros(F, dims[a.target], dims[a.source]) for a in A.quiver.arrows]
        cache[key] = Representation(A, dims, maps, label=f"S({A.quiver.vertices[v]})", check=False)
    return cache[key]


def _projective_data(A: BoundQuiverAlgebra, v: int):
    F = A.field
    Q = A.quiver
    spaces = [A.paths_between(v, w) for w in range(A.n)]
    pos = [{b: k for k, b in enumerate(sp)} for sp in spaces]
    maps = []
    for ai, a in enumerate(Q.arrows):
        rows = [[F.zero] * len(spaces[a.source]) for _ in spaces[a.target]]
        for col, b in enumerate(spaces[a.source]):
            p = A.basis[b]
            for tb, c in A.normal_form(p.arrows + (ai,)).items():
                rows[pos[a.target][tb]][col] = c
        maps.append(Mat(F, len(spaces[a.target]), len(spaces[a.source]), rows))
    return [len(sp) for sp in spaces], maps, spaces


def projective(A: BoundQuiverAlgebra, v: int) -> Representation:
    """P_v = A e_v; vertex-w space spanned by basis words from v to w."""
    key = ("proj", v)
    cache = A.__dict__.setdefault("_modcache", {})
    if key not in cache:
        dims, maps, _ = _projective_data(A, v)
        cache[key] = Representation(A, dims, maps, label=f"P({A.quiver.vertices[v]})", check=False)
    return cache[key]


def injective(A: BoundQuiverAlgebra, v: int) -> Representation:
    """I_v = D(e_v A), obtained as the dual of the projective P_v over A^op."""
    key = ("inj", v)
    cache = A.__dict__.setdefault("_modcache", {})
    if key not in cache:
        M = dualize(projective(A.opposite(), v))
        M.label = f"I({A.quiver.vertices[v]})"
        cache[key] = M
    return cache[key]


def dualize(M: Representation) -> Representation:
    """D = Hom_K(-, K): a module over the opposite algebra."""
    op = M.algebra.opposite()
    label = None
    if M.label:
        label = M.label[2:-1] if M.label.startswith("D(") and M.label.endswith(")") else f"D({M.label})"
    return Representation(op, M.dims, [m.T() for m in M.maps], label=label, check=False)


def dualize_map(f: ModuleMap, source: Representation | None = None, target: Representation | None = None) -> ModuleMap:
    """D f : D(target) -> D(source)."""
    src = source if source is not None else dualize(f.target)
    tgt = target if target is not None else dualize(f.source)
    return ModuleMap(src, tgt, [m.T() for m in f.mats])


def direct_sum(mods: Sequence[Representation], label: str | None = None) -> Representation:
    if not mods:
        raise RepresentationError("empty direct sum")
    A = mods[0].algebra
    F = A.field
    dims = [sum(M.dims[v] for M in mods) for v in range(A.n)]
    maps = [block_diag(F, [M.maps[i] for M in mods]) for i in range(len(A.quiver.arrows))]
    if label is None and all(M.label for M in mods):
        label = "+".join(M.label for M in mods)
    return Representation(A, dims, maps, label=label, check=False)


class FreeModule(Representation):
    """A direct sum of indecomposable projectives with recorded tops.

    ``coords[u]`` lists, for each coordinate of the vertex-u space, the pair
    (summand index, basis word index) it corresponds to.
    """

    def __init__(self, A: BoundQuiverAlgebra, tops: Sequence[int]):
        self.tops = tuple(tops)
        F = A.field
        if self.tops:
            S = direct_sum([projective(A, v) for v in self.tops])
            dims, maps = S.dims, S.maps
        else:
            dims = [0] * A.n
            maps = [Mat.zeros(F, 0, 0) for _ in A.quiver.arrows]
        self.coords = [
            [(k, b) for k, t in enumerate(self.tops) for b in A.paths_between(t, u)] for u in range(A.n)
        ]
        label = "+".join(f"P({A.quiver.vertices[t]})" for t in self.tops) or "0"
        super().__init__(A, dims, maps, label=label, check=False)

    def generator(self, k: int) -> tuple:
        """Coordinates of the k-th generator (trivial path) at its top vertex."""
        t = self.tops[k]
        F = self.field
        triv = self.algebra.basis_index[Path(t, t, ())]
        return tuple(F.one if c == (k, triv) else F.zero for c in self.coords[t])


def map_from_free(P: FreeModule, target: Representation, images: Sequence[Sequence]) -> ModuleMap:
    """The module map sending generator k of ``P`` to ``images[k]``."""
    A = P.algebra
    F = A.field
    mats = []
    for u in range(A.n):
        cols = []
        for k, b in P.coords[u]:
            cols.append(target.basis_action(b).apply(images[k]))
        mats.append(Mat.from_columns(F, cols, target.dims[u]))
    return ModuleMap(P, target, mats)


def free_map_data(f: ModuleMap) -> list[dict[tuple[int, int], object]]:
    """For a map between free modules: generator k of the source goes to
    sum of c * (basis word b acting on generator j); returns {(j, b): c} per k."""
    P, Q = f.source, f.target
    out = []
    for k, t in enumerate(P.tops):
        col = f.mats[t].apply(P.generator(k))
        out.append({Q.coords[t][i]: c for i, c in enumerate(col) if c})
    return out


# -- Hom -----------------------------------------------------------------

def hom_space(M: Representation, N: Representation) -> list[ModuleMap]:
    """A basis of Hom_A(M, N) as solutions of the intertwiner equations."""
    if M.algebra is not N.algebra:
        raise RepresentationError("modules over different algebras")
    key = ("hom", id(N))
    hit = M._cache.get(key)
    if hit is not None and hit[0] is N:
        return hit[1]
    A = M.algebra
    F = A.field
    offs = []
    o = 0
    for v in range(A.n):
        offs.append(o)
        o += M.dims[v] * N.dims[v]
    nvars = o
    E = SparseEchelon(F, nvars)
    for ai, a in enumerate(A.quiver.arrows):
        s, t = a.source, a.target
        ms, mt, ns, nt = M.dims[s], M.dims[t], N.dims[s], N.dims[t]
        if not ms or not nt:
            continue
        Na, Ma = N.maps[ai].rows, M.maps[ai].rows
        for i in range(nt):
            for j in range(ms):
                row: dict = {}
                for k in range(ns):
                    c = Na[i][k]
                    if c:
                        key = offs[s] + k * ms + j
                        row[key] = row.get(key, 0) + c
                for k in range(mt):
                    c = Ma[k][j]
                    if c:
                        key = offs[t] + i * mt + k
                        row[key] = row.get(key, 0) - c
                if row:
                    E.add(row)
    K = Mat.from_columns(F, E.kernel_columns(), nvars)
    basis = []
    for col in K.columns():
        mats = []
        for v in range(A.n):
            m, n = M.dims[v], N.dims[v]
            mats.append(Mat(F, n, m, [[col[offs[v] + i * m + j] for j in range(m)] for i in range(n)]))
        basis.append(ModuleMap(M, N, mats))
    M._cache[key] = (N, basis)
    return basis


def hom_dim(M: Representation, N: Representation) -> int:
    return len(hom_space(M, N))


def end_basis(M: Representation) -> list[ModuleMap]:
    return hom_space(M, M)


# -- sub, quotient, kernel, cokernel ------------------------------------------

def sub_representation(M: Representation, bases: Sequence[Mat], label: str | None = None) -> tuple[Representation, ModuleMap]:
    """The subrepresentation spanned by the columns of ``bases[v]``; must be arrow-stable."""
    A = M.algebra
    maps = []
    for ai, a in enumerate(A.quiver.arrows):
        Bs, Bt = bases[a.source], bases[a.target]
        img = M.maps[ai] @ Bs
        if Bt.ncols == 0:
            if not img.is_zero():
                raise RepresentationError("subspace is not a subrepresentation")
            maps.append(Mat.zeros(A.field, 0, Bs.ncols))
            continue
        x = left_inverse(Bt) @ img
        if Bt @ x != img:
            raise RepresentationError("subspace is not a subrepresentation")
        maps.append(x)
    S = Representation(A, [b.ncols for b in bases], maps, label=label, check=False)
    return S, ModuleMap(S, M, bases)


def quotient_representation(M: Representation, bases: Sequence[Mat], label: str | None = None) -> tuple[Representation, ModuleMap]:
    """M / U for the arrow-stable subspaces U spanned by ``bases``."""
    A = M.algebra
    projs, sects = [], []
    for v in range(A.n):
        q = left_kernel(bases[v]) if bases[v].ncols else Mat.identity(A.field, M.dims[v])
        projs.append(q)
        sects.append(right_inverse(q) if q.nrows else Mat.zeros(A.field, M.dims[v], 0))
    maps = []
    for ai, a in enumerate(A.quiver.arrows):
        maps.append(projs[a.target] @ M.maps[ai] @ sects[a.source])
    C = Representation(A, [q.nrows for q in projs], maps, label=label, check=False)
    return C, ModuleMap(M, C, projs)


def kernel(f: ModuleMap, label: str | None = None) -> tuple[Representation, ModuleMap]:
    return sub_representation(f.source, [kernel_basis(m) for m in f.mats], label=label)


def image_bases(f: ModuleMap) -> list[Mat]:
    return [column_space(m) for m in f.mats]


def cokernel(f: ModuleMap, label: str | None = None) -> tuple[Representation, ModuleMap]:
    return quotient_representation(f.target, image_bases(f), label=label)


# -- idempotent functors -----------------------------------------------------

def F_hom_bases(e: Iterable[int], M: Representation) -> list[Mat]:
    """Greatest arrow-stable subspace vanishing at the vertices of ``e``."""
    A = M.algebra
    F = A.field
    e = set(e)
    U = [Mat.zeros(F, M.dims[v], 0) if v in e else Mat.identity(F, M.dims[v]) for v in range(A.n)]
    changed = True
    while changed:
        changed = False
        for ai, a in enumerate(A.quiver.arrows):
            s, t = a.source, a.target
            if U[s].ncols == 0:
                continue
            img = M.maps[ai] @ U[s]
            if U[t].ncols == M.dims[t]:
                continue
            proj = left_kernel(U[t]) if U[t].ncols else Mat.identity(F, M.dims[t])
            cond = proj @ img
            if cond.is_zero():
                continue
            ker = kernel_basis(cond)
            U[s] = U[s] @ ker
            changed = True
    return U


def F_hom(e: Iterable[int], M: Representation) -> Representation:
    """Hom_A(A/<e>, M): the largest submodule of M killed by e."""
    e = list(e)
    bases = F_hom_bases(e, M)
    label = f"F({M.name()})" if M.label else None
    return sub_representation(M, bases, label=label)[0]


def tensor_quotient_bases(e: Iterable[int], M: Representation) -> list[Mat]:
    """Least arrow-stable subspace containing every vertex space at ``e``."""
    A = M.algebra
    F = A.field
    e = set(e)
    W = [Mat.identity(F, M.dims[v]) if v in e else Mat.zeros(F, M.dims[v], 0) for v in range(A.n)]
    changed = True
    while changed:
        changed = False
        for ai, a in enumerate(A.quiver.arrows):
            s, t = a.source, a.target
            if W[s].ncols == 0:
                continue
            img = M.maps[ai] @ W[s]
            both = hstack(F, M.dims[t], [W[t], img])
            r = rank(both)
            if r > W[t].ncols:
                W[t] = column_space(both)
                changed = True
    return W


def tensor_quotient(e: Iterable[int], M: Representation) -> Representation:
    """A/<e> (x)_A M = M / <e> M."""
    bases = tensor_quotient_bases(e, M)
    label = f"T({M.name()})" if M.label else None
    return quotient_representation(M, bases, label=label)[0]


def restrict(M: Representation, B: BoundQuiverAlgebra) -> Representation:
    """View a module over A killed by <e> as a module over B = A/<e>."""
    A = B.parent
    if A is None or M.algebra is not A:
        raise RepresentationError("restrict needs a module over the parent algebra")
    for v in B.removed:
        if M.dims[v]:
            raise RepresentationError("module is not annihilated by the idempotent ideal")
    vmap = [A.quiver.vertex_index[x] for x in B.quiver.vertices]
    amap = [A.quiver.arrow_index[a.name] for a in B.quiver.arrows]
    return Representation(B, [M.dims[v] for v in vmap], [M.maps[i] for i in amap], label=M.label, check=False)


def inflate(M: Representation, A: BoundQuiverAlgebra | None = None) -> Representation:
    """View a module over B = A/<e> as an A-module (zero at e)."""
    B = M.algebra
    A = A if A is not None else B.parent
    if A is None:
        return M
    if B is A:
        return M
    F = A.field
    dims = [0] * A.n
    for v, x in enumerate(B.quiver.vertices):
        dims[A.quiver.vertex_index[x]] = M.dims[v]
    maps = []
    for a in A.quiver.arrows:
        if a.name in B.quiver.arrow_index:
            maps.append(M.maps[B.quiver.arrow_index[a.name]])
        else:
            maps.append(Mat.zeros(F, dims[a.target], dims[a.source]))
    return Representation(A, dims, maps, label=M.label, check=False)


# -- decomposition and isomorphism ------------------------------------------------

def _total_charpoly(f: ModuleMap) -> list:
    F = f.source.field
    poly = [F.one]
    for m in f.mats:
        if m.nrows == 0:
            continue
        cp = charpoly(m)
        out = [F.zero] * (len(poly) + len(cp) - 1)
        for i, a in enumerate(poly):
            for j, b in enumerate(cp):
                out[i + j] += a * b
        if F.p is not None:
            out = [x % F.p for x in out]
        poly = out
    return poly


def _irreducible_factors(coeffs: list, F: Field) -> list[list]:
    x = sympy.Symbol("x")
    if F.p is None:
        poly = sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(coeffs)], x, domain="QQ")
        _, facs = poly.factor_list()
        out = []
        for g, _ in facs:
            lc = g.LC()
            out.append([F(sympy.Rational(c) / lc) for c in reversed(g.all_coeffs())])
        out.sort(key=lambda c: (len(c), [str(x) for x in c]))
        return out
    poly = sympy.Poly([int(c) for c in reversed(coeffs)], x, modulus=F.p)
    _, facs = poly.factor_list()
    out = []
    for g, _ in facs:
        cs = [int(c) % F.p for c in reversed(g.all_coeffs())]
        inv = pow(cs[-1], -1, F.p)
        out.append([(c * inv) % F.p for c in cs])
    out.sort()
    return out


def _fitting_split(M: Representation, f: ModuleMap) -> tuple[list[Mat], list[Mat]] | None:
    """Primary decomposition of M under the endomorphism f, if nontrivial."""
    cp = _total_charpoly(f)
    if len(cp) <= 2:
        return None
    factors = _irreducible_factors(cp, M.field)
    if len(factors) < 2:
        return None
    g = factors[0]
    N = M.dim
    kers, ims = [], []
    for m in f.mats:
        if m.nrows == 0:
            kers.append(m)
            ims.append(m)
            continue
        h = mat_power(poly_eval_matrix(g, m), N)
        kers.append(kernel_basis(h))
        ims.append(column_space(h))
    if all(k.ncols == 0 for k in kers) or all(i.ncols == 0 for i in ims):
        return None
    return kers, ims


def _trace_gram(M: Representation, E: list[ModuleMap]) -> list[list]:
    """tr(XY) over a basis of End(M); in characteristic zero its rank is dim End/rad End."""
    F = M.field
    # tr(XY) summed over vertices is a dot product of X flattened by rows with
    # Y flattened by columns; clear denominators so the products stay integral
    rows_of, cols_of, scale = [], [], []
    for f in E:
        by_row, by_col = {}, {}
        den = 1
        k = 0
        for m in f.mats:
            for i in range(m.nrows):
                for j, x in enumerate(m.rows[i]):
                    if x:
                        den = lcm(den, Fraction(x).denominator)
                        by_row[k + i * m.ncols + j] = x
                        by_col[k + j * m.ncols + i] = x
            k += m.nrows * m.ncols
        rows_of.append({key: int(x * den) for key, x in by_row.items()})
        cols_of.append({key: int(x * den) for key, x in by_col.items()})
        scale.append(den)
    n = len(E)
    gram = []
    for i in range(n):
        a = rows_of[i]
        row = []
        for j in range(n):
            b = cols_of[j]
            small, big = (a, b) if len(a) <= len(b) else (b, a)
            total = sum(x * big[key] for key, x in small.items() if key in big)
            row.append(F(Fraction(total, scale[i] * scale[j])))
        gram.append(row)
    return gram


def _candidates(E: list[ModuleMap], F: Field, seed: int, extra: int, useful: list[int]):
    """Basis elements, pairwise sums and differences, then random combinations.

    ``useful`` restricts the first two stages to basis elements known not to
    be nilpotent.
    """
    for i in useful:
        yield E[i]
    for a, i in enumerate(useful):
        for j in useful[a + 1:]:
            yield E[i] + E[j]
            yield E[i] + E[j].scale(-1)
    rng = random.Random(seed)
    bound = 3
    for _ in range(extra):
        yield linear_combination(E, [F(rng.randint(-bound, bound)) for _ in E])
        bound += 2


def _enumerate_elements(E: list[ModuleMap], F: Field):
    for coeffs in product(F.elements(), repeat=len(E)):
        if any(coeffs):
            yield linear_combination(E, coeffs)


def find_splitting(M: Representation, seed: int = 0) -> tuple[list[Mat], list[Mat]] | None:
    """Complementary arrow-stable subspaces (U, W) with M = U + W, or None."""
    if M.dim <= 1:
        return None
    E = end_basis(M)
    if len(E) == 1:
        return None
    F = M.field
    useful = list(range(len(E)))
    if F.p is None:
        gram = _trace_gram(M, E)
        if rank(Mat(F, len(E), len(E), gram)) == 1:
            return None
        # tr(f^2) != 0 rules out nilpotent f
        useful = [i for i in useful if gram[i][i]]
    if F.p is not None and F.p ** len(E) <= ENUMERATION_LIMIT:
        for f in _enumerate_elements(E, F):
            split = _fitting_split(M, f)
            if split:
                return split
        return None
    for f in _candidates(E, F, seed, SPLIT_SWEEP, useful):
        split = _fitting_split(M, f)
        if split:
            return split
    return None


def is_indecomposable(M: Representation, seed: int = 0) -> bool:
    return M.dim > 0 and find_splitting(M, seed) is None


def decompose(M: Representation, seed: int = 0) -> list[Representation]:
    """Indecomposable summands of M (empty for the zero module)."""
    hit = M._cache.get(("decompose", seed))
    if hit is not None:
        return hit
    if M.dim == 0:
        parts: list[Representation] = []
    else:
        split = find_splitting(M, seed)
        if split is None:
            parts = [M]
        else:
            kers, ims = split
            U, _ = sub_representation(M, kers)
            W, _ = sub_representation(M, ims)
            parts = decompose(U, seed) + decompose(W, seed)
            if len(parts) == 1:
                parts[0].label = parts[0].label or M.label
    M._cache[("decompose", seed)] = parts
    return parts


def is_isomorphic(M: Representation, N: Representation, seed: int = 0) -> bool:
    """True iff an invertible module map M -> N exists."""
    if M.algebra is not N.algebra:
        raise RepresentationError("modules over different algebras")
    if M.dims != N.dims:
        return False
    if M is N or M.dim == 0:
        return True
    H = hom_space(M, N)
    d = len(H)
    if d == 0 or d != hom_dim(N, M) or d != hom_dim(M, M) or d != hom_dim(N, N):
        return False
    F = M.field
    if F.p is not None and F.p**d <= ENUMERATION_LIMIT:
        return any(f.is_isomorphism() for f in _enumerate_elements(H, F))
    for f in H:
        if f.is_isomorphism():
            return True
    rng = random.Random(seed)
    for depth in (ISO_SWEEP, ISO_SWEEP_ESCALATED):
        bound = 8 * (M.dim + 1)
        for _ in range(depth):
            f = linear_combination(H, [F(rng.randint(-bound, bound)) for _ in H])
            if f.is_isomorphism():
                return True
    return False


def is_projective(M: Representation) -> bool:
    from .homology import syzygy

    return syzygy(M).is_zero()


def is_injective(M: Representation) -> bool:
    from .homology import cosyzygy

    return cosyzygy(M).is_zero()


@dataclass
class ModuleCollection:
    """Pairwise non-isomorphic indecomposables over one algebra."""

    algebra: BoundQuiverAlgebra
    members: list[Representation] = field(default_factory=list)
    partial: bool = False

    @classmethod
    def from_modules(cls, A: BoundQuiverAlgebra, mods: Iterable[Representation], seed: int = 0) -> "ModuleCollection":
        c = cls(A)
        for M in mods:
            for X in decompose(M, seed):
                c.add(X, seed)
        return c

    def add(self, X: Representation, seed: int = 0) -> bool:
        if X.algebra is not self.algebra:
            raise RepresentationError("module over a different algebra")
        if self.index_of(X, seed) is not None:
            return False
        self.members.append(X)
        return True

    def index_of(self, X: Representation, seed: int = 0) -> int | None:
        for i, Y in enumerate(self.members):
            if Y.dims == X.dims and is_isomorphic(X, Y, seed):
                return i
        return None

    def contains_indecomposable(self, X: Representation, seed: int = 0) -> bool:
        return self.index_of(X, seed) is not None

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def names(self) -> list[str]:
        return [m.name() for m in self.members]


def add_membership(X: Representation, coll: ModuleCollection | Sequence[Representation], seed: int = 0) -> bool:
    """X in add(coll): every indecomposable summand of X is isomorphic to a member."""
    members = coll.members if isinstance(coll, ModuleCollection) else list(coll)
    for part in decompose(X, seed):
        if not any(Y.dims == part.dims and is_isomorphic(part, Y, seed) for Y in members):
            return False
    return True


def missing_summand(X: Representation, coll: ModuleCollection | Sequence[Representation], seed: int = 0) -> Representation | None:
    members = coll.members if isinstance(coll, ModuleCollection) else list(coll)
    for part in decompose(X, seed):
        if not any(Y.dims == part.dims and is_isomorphic(part, Y, seed) for Y in members):
            return part
    return None
