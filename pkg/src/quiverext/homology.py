"""Minimal resolutions, Ext, syzygies, transpose and Auslander-Reiten translates."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .algebra import BoundQuiverAlgebra
from .linalg import Mat, column_space, hstack, left_inverse, rank, rref, solve, kernel_basis
from .representations import (
    FreeModule,
    ModuleMap,
    Representation,
    F_hom_bases,
    direct_sum,
    dualize,
    free_map_data,
    hom_space,
    injective,
    is_injective,
    kernel,
    map_from_free,
    projective,
    restrict,
    tensor_quotient,
    zero_module,
    cokernel,
)


class InternalConsistencyError(RuntimeError):
    """The two independent Ext computations disagreed."""


class PreconditionError(ValueError):
    pass


@dataclass(frozen=True)
class AtLeast:
    """A homological dimension known only to exceed a cap."""

    bound: int

    def __str__(self):
        return f">={self.bound}"


@dataclass
class Resolution:
    """P_k -> ... -> P_0 (-> M)   or   (N ->) I^0 -> ... -> I^k.

    ``maps[i]`` is the differential between stage i+1 and stage i, in the
    direction of the complex: P_{i+1} -> P_i, or I^i -> I^{i+1}.
    """

    kind: str
    module: Representation
    modules: list[Representation] = field(default_factory=list)
    maps: list[ModuleMap] = field(default_factory=list)
    augmentation: ModuleMap | None = None
    minimal: bool = True
    complete: bool = False
    # projective side: syzygies[i] is the kernel of the map out of stage i
    syzygies: list[Representation] = field(default_factory=list)

    @property
    def length(self) -> int:
        return len(self.modules) - 1

    def stage(self, i: int) -> Representation | None:
        return self.modules[i] if i < len(self.modules) else None

    def tops(self, i: int) -> tuple[int, ...]:
        M = self.stage(i)
        return M.tops if M is not None else ()

    def is_exact(self) -> bool:
        """Exactness at every interior stage and at the module (ranks only)."""
        A = self.module.algebra
        seq: list[ModuleMap] = []
        if self.kind == "projective":
            seq = list(reversed(self.maps))
            if self.augmentation is not None:
                seq.append(self.augmentation)
        else:
            if self.augmentation is not None:
                seq.append(self.augmentation)
            seq.extend(self.maps)
        for f, g in zip(seq, seq[1:]):
            for v in range(A.n):
                if not (g.mats[v] @ f.mats[v]).is_zero():
                    return False
                dimY = f.target.dims[v]
                if dimY - rank(g.mats[v]) != rank(f.mats[v]):
                    return False
        if self.kind == "projective" and self.augmentation is not None:
            if not self.augmentation.is_surjective():
                return False
        if self.kind == "injective" and self.augmentation is not None:
            if not self.augmentation.is_injective():
                return False
        return True


# -- covers ----------------------------------------------------------------

def _complement_vectors(B: Mat, d: int) -> list[tuple]:
    """Standard basis vectors completing the column span of B to K^d."""
    F = B.field
    ident = Mat.identity(F, d)
    both = hstack(F, d, [B, ident]) if B.ncols else ident
    _, piv = rref(both)
    return [ident.column(c - B.ncols) for c in piv if c >= B.ncols]


def top_generators(M: Representation) -> list[tuple[int, tuple]]:
    """(vertex, vector) pairs whose images span top(M) = M / rad M."""
    A = M.algebra
    F = A.field
    gens = []
    for v in range(A.n):
        if not M.dims[v]:
            continue
        imgs = [M.maps[a] for a in A.quiver.in_arrows(v) if M.maps[a].ncols]
        rad = column_space(hstack(F, M.dims[v], imgs)) if imgs else Mat.zeros(F, M.dims[v], 0)
        for vec in _complement_vectors(rad, M.dims[v]):
            gens.append((v, vec))
    return gens


def projective_cover(M: Representation) -> tuple[FreeModule, ModuleMap]:
    gens = top_generators(M)
    P = FreeModule(M.algebra, [v for v, _ in gens])
    return P, map_from_free(P, M, [vec for _, vec in gens])


def projective_resolution(M: Representation, length: int) -> Resolution:
    """Minimal projective resolution through stage ``length`` (memoised)."""
    R: Resolution | None = M._cache.get("projres")
    if R is None:
        P0, p0 = projective_cover(M)
        R = Resolution("projective", M, [P0], [], p0)
        K, inc = kernel(p0)
        R.syzygies.append(K)
        R._inclusion = inc
        R.complete = K.is_zero()
        M._cache["projres"] = R
    while not R.complete and R.length < length:
        K, inc = R.syzygies[-1], R._inclusion
        Pn, pn = projective_cover(K)
        R.modules.append(Pn)
        R.maps.append(inc @ pn)
        K2, inc2 = kernel(pn)
        R.syzygies.append(K2)
        R._inclusion = inc2
        R.complete = K2.is_zero()
    return R


def injective_coresolution(N: Representation, length: int) -> Resolution:
    """Minimal injective coresolution, as the dual of a projective resolution over A^op."""
    R: Resolution | None = N._cache.get("injres")
    if R is not None and (R.complete or R.length >= length):
        return R
    P = projective_resolution(_dual(N), length)
    mods = [dualize(Pi) for Pi in P.modules]
    for Ii, Pi in zip(mods, P.modules):
        Ii.socles = Pi.tops
        Ii.label = "+".join(f"I({N.algebra.quiver.vertices[t]})" for t in Pi.tops) or "0"
    maps = [ModuleMap(mods[i], mods[i + 1], [m.T() for m in d.mats]) for i, d in enumerate(P.maps)]
    aug = ModuleMap(N, mods[0], [m.T() for m in P.augmentation.mats])
    R = Resolution("injective", N, mods, maps, aug, complete=P.complete)
    N._cache["injres"] = R
    return R


def syzygy(M: Representation) -> Representation:
    K = projective_resolution(M, 0).syzygies[0]
    if K.label is None and M.label:
            K.label = f"omega({M.name()})"
    return K


def cosyzygy(M: Representation) -> Representation:
    key = "cosyzygy"
    if key in M._cache:
        return M._cache[key]
    C = dualize(syzygy(_dual(M)))
    M._cache[key] = C
    C.label = f"coomega({M.name()})" if M.label else None
    return C


def syzygy_power(M: Representation, k: int) -> Representation:
    for _ in range(k):
        M = syzygy(M)
    return M


def cosyzygy_power(M: Representation, k: int) -> Representation:
    for _ in range(k):
        M = cosyzygy(M)
    return M


# -- Ext ------------------------------------------------------------------

def _hom_free_dim(P: FreeModule, N: Representation) -> int:
    return sum(N.dims[t] for t in P.tops)


def _delta(R: Resolution, j: int, N: Representation) -> Mat:
    """Hom(P_{j-1}, N) -> Hom(P_j, N), both identified with sums of N-vertex spaces."""
    src, tgt = R.modules[j - 1], R.modules[j]
    F = N.field
    roff, o = [], 0
    for t in tgt.tops:
        roff.append(o)
        o += N.dims[t]
    nrows = o
    coff, o = [], 0
    for t in src.tops:
        coff.append(o)
        o += N.dims[t]
    ncols = o
    rows = [[F.zero] * ncols for _ in range(nrows)]
    data = free_map_data(R.maps[j - 1])
    p = F.p
    for k, terms in enumerate(data):
        for (l, b), c in terms.items():
            act = N.basis_action(b)
            for i in range(act.nrows):
                r = rows[roff[k] + i]
                for jj in range(act.ncols):
                    x = act.rows[i][jj]
                    if x:
                        r[coff[l] + jj] += c * x
    if p is not None:
        rows = [[x % p for x in r] for r in rows]
    return Mat(F, nrows, ncols, rows)


def ext_dim_projective(i: int, M: Representation, N: Representation) -> int:
    """dim Ext^i(M, N) from the minimal projective resolution of M."""
    if i < 0:
        raise ValueError("negative Ext degree")
    if M.is_zero() or N.is_zero():
        return 0
    R = projective_resolution(M, i + 1)
    if i > R.length:
        return 0
    total = _hom_free_dim(R.modules[i], N)
    out_rank = rank(_delta(R, i + 1, N)) if i + 1 <= R.length else 0
    in_rank = rank(_delta(R, i, N)) if i >= 1 else 0
    return total - out_rank - in_rank


def ext_dim_injective(i: int, M: Representation, N: Representation) -> int:
    """dim Ext^i(M, N) from the minimal injective coresolution of N.

    Hom(M, D P) = Hom_{A^op}(P, D M), so this is the projective-side
    computation over the opposite algebra applied to (D N, D M).
    """
    if M.is_zero() or N.is_zero():
        return 0
    return ext_dim_projective(i, _dual(N), _dual(M))


def _dual(M: Representation) -> Representation:
    D = M._cache.get("dual")
    if D is None:
        D = dualize(M)
        M._cache["dual"] = D
    return D


def ext_dim(i: int, M: Representation, N: Representation, *, oracle: bool = True) -> int:
    """dim Ext^i_A(M, N); with ``oracle`` both resolutions are used and compared."""
    if M.algebra is not N.algebra:
        raise ValueError("modules over different algebras")
    a = ext_dim_projective(i, M, N)
    if not oracle:
        return a
    b = ext_dim_injective(i, M, N)
    if a != b:
        raise InternalConsistencyError(
            f"Ext^{i}({M.name()}, {N.name()}): projective side {a} != injective side {b}"
        )
    return a


def proj_dim(M: Representation, cap: int | None = None) -> int | AtLeast:
    cap = 2 * M.algebra.n if cap is None else cap
    if M.is_zero():
        return 0
    R = projective_resolution(M, cap)
    if R.complete and R.length <= cap:
        return R.length
    return AtLeast(cap + 1)


def inj_dim(M: Representation, cap: int | None = None) -> int | AtLeast:
    cap = 2 * M.algebra.n if cap is None else cap
    return proj_dim(_dual(M), cap)


# -- transpose and translates -------------------------------------------

def transpose(M: Representation) -> Representation:
    """Tr M over A^op: cokernel of Hom(P_0, A) -> Hom(P_1, A)."""
    A = M.algebra
    op = A.opposite()
    R = projective_resolution(M, 1)
    P0 = R.modules[0]
    if R.length < 1:
        return zero_module(op)
    P1 = R.modules[1]
    Q0, Q1 = FreeModule(op, P0.tops), FreeModule(op, P1.tops)
    F = A.field
    pos = [{c: i for i, c in enumerate(Q1.coords[u])} for u in range(A.n)]
    images = [[F.zero] * Q1.dims[t] for t in P0.tops]
    for k, terms in enumerate(free_map_data(R.maps[0])):
        for (j, b), c in terms.items():
            images[j][pos[P0.tops[j]][(k, b)]] += c
    f = map_from_free(Q0, Q1, [tuple(v) for v in images])
    C, _ = cokernel(f)
    C.label = f"Tr({M.name()})" if M.label else None
    return C


def ar_translate(M: Representation) -> Representation:
    """tau M = D Tr M."""
    T = dualize(transpose(M))
    T.label = f"tau({M.name()})" if M.label else None
    return T


def ar_translate_inv(M: Representation) -> Representation:
    """tau^- M = Tr D M."""
    T = transpose(_dual(M))
    T.label = f"taum({M.name()})" if M.label else None
    return T


def tau_d(d: int, M: Representation) -> Representation:
    if d < 1:
        raise ValueError("d must be >= 1")
    key = ("tau_d", d)
    if key not in M._cache:
        T = ar_translate(syzygy_power(M, d - 1))
        T.label = f"tau{d}({M.name()})" if M.label else None
        M._cache[key] = T
    return M._cache[key]


def tau_d_inv(d: int, M: Representation) -> Representation:
    if d < 1:
        raise ValueError("d must be >= 1")
    key = ("tau_d_inv", d)
    if key not in M._cache:
        T = ar_translate_inv(cosyzygy_power(M, d - 1))
        T.label = f"taum{d}({M.name()})" if M.label else None
        M._cache[key] = T
    return M._cache[key]


def _flatten(f: ModuleMap) -> list:
    return [x for m in f.mats for r in m.rows for x in r]


def nakayama(M: Representation) -> Representation:
    """nu M = D Hom_A(M, A), with Hom_A(M, A) e_v = Hom_A(M, P_v)."""
    A = M.algebra
    F = A.field
    op = A.opposite()
    frees = [FreeModule(A, [v]) for v in range(A.n)]
    bases = [hom_space(M, P) for P in frees]
    maps = []
    for ai, a in enumerate(A.quiver.arrows):
        s, t = a.source, a.target
        Ps, Pt = frees[s], frees[t]
        # right multiplication by the arrow: P_t -> P_s
        img = [F.zero] * Ps.dims[t]
        for idx, (_, b) in enumerate(Ps.coords[t]):
            if A.basis[b].arrows == (ai,):
                img[idx] = F.one
        rho = map_from_free(Pt, Ps, [tuple(img)])
        Bs = bases[s]
        ncols = len(bases[t])
        if not Bs:
            maps.append(Mat.zeros(F, 0, ncols))
            continue
        basis_mat = Mat.from_columns(F, [_flatten(g) for g in Bs], len(_flatten(Bs[0])))
        cols = []
        for g in bases[t]:
            x = solve(basis_mat, Mat.from_columns(F, [_flatten(rho @ g)], basis_mat.nrows))
            if x is None:
                raise InternalConsistencyError("composite with an arrow left Hom(M, P_s)")
            cols.append(x.column(0))
        maps.append(Mat.from_columns(F, cols, len(Bs)))
    H = Representation(op, [len(b) for b in bases], maps, check=False)
    nu = dualize(H)
    nu.label = f"nu({M.name()})" if M.label else None
    return nu


# -- idempotent quotient helpers ------------------------------------------

def quotient_as_module(A: BoundQuiverAlgebra, e: Iterable[int]) -> Representation:
    """A/<e> as a left A-module: the sum of tensor_quotient(e, P_w) over w not in e."""
    e = frozenset(e)
    key = ("quotient_module", e)
    cache = A.__dict__.setdefault("_modcache", {})
    if key not in cache:
        parts = [tensor_quotient(e, projective(A, w)) for w in range(A.n) if w not in e]
        parts = [p for p in parts if not p.is_zero()]
        M = direct_sum(parts) if parts else zero_module(A)
        names = ",".join(A.quiver.vertices[v] for v in sorted(e))
        M.label = f"A/<{names}>"
        cache[key] = M
    return cache[key]


def _restrict_map(f: ModuleMap, Ux: list[Mat], Uy: list[Mat], X: Representation, Y: Representation) -> ModuleMap:
    mats = []
    for v, m in enumerate(f.mats):
        if Uy[v].ncols == 0:
            mats.append(Mat.zeros(m.field, 0, Ux[v].ncols))
        else:
            mats.append(left_inverse(Uy[v]) @ m @ Ux[v])
    return ModuleMap(X, Y, mats)


def coresolve_under_F(e: Iterable[int], N: Representation, length: int) -> Resolution:
    """Apply F = Hom_A(A/<e>, -) to the minimal injective coresolution of N.

    Requires Ext^i_A(A/<e>, N) = 0 for 0 < i < length.  The result lives over
    A/<e> and is generally not minimal.
    """
    from .representations import sub_representation

    A = N.algebra
    e = frozenset(e)
    Q = quotient_as_module(A, e)
    for i in range(1, length):
        dim = ext_dim(i, Q, N)
        if dim:
            raise PreconditionError(f"Ext^{i}_A(A/<e>, N) has dimension {dim}; hypothesis fails at i={i}")
    B = A.quotient(e)
    R = injective_coresolution(N, length)
    stages = [N] + R.modules[: length + 1]
    arrows = [R.augmentation] + R.maps[:length]
    subs, bases = [], []
    for X in stages:
        U = F_hom_bases(e, X)
        S, _ = sub_representation(X, U)
        subs.append(S)
        bases.append(U)
    fmaps = [
        _restrict_map(f, bases[i], bases[i + 1], subs[i], subs[i + 1]) for i, f in enumerate(arrows)
    ]
    if B is A:
        rsubs = subs
        rmaps = fmaps
    else:
        rsubs = [restrict(S, B) for S in subs]
        rmaps = [ModuleMap(rsubs[i], rsubs[i + 1], _restrict_mats(f, B)) for i, f in enumerate(fmaps)]
    out = Resolution("injective", rsubs[0], rsubs[1:], rmaps[1:], rmaps[0], minimal=False, complete=R.complete)
    return out


def _restrict_mats(f: ModuleMap, B: BoundQuiverAlgebra) -> list[Mat]:
    A = B.parent
    return [f.mats[A.quiver.vertex_index[x]] for x in B.quiver.vertices]


def coresolution_is_injective(R: Resolution, upto: int) -> bool:
    return all(is_injective(R.modules[j]) for j in range(min(upto + 1, len(R.modules))))


def exact_through(R: Resolution, upto: int) -> bool:
    """Injective-kind complex N -> X^0 -> ... : exact at N and at X^0..X^{upto}."""
    A = R.module.algebra
    seq = [R.augmentation] + R.maps
    if not R.augmentation.is_injective():
        return False
    for j in range(min(upto, len(R.maps)) + 1):
        if j >= len(seq) - 1:
            # a finished coresolution ends in zero, so its last map must be onto
            if R.complete and not seq[j].is_surjective():
                return False
            break
        f, g = seq[j], seq[j + 1]
        for v in range(A.n):
            if not (g.mats[v] @ f.mats[v]).is_zero():
                return False
            if f.target.dims[v] - rank(g.mats[v]) != rank(f.mats[v]):
                return False
    return True
