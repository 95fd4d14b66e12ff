"""Decision procedures for rigidity, (pre)cluster tilting, idempotent ideals
and the idempotent-reduction theorems, each returning a CheckReport."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Sequence

from .algebra import BoundQuiverAlgebra
from .homology import (
    PreconditionError,
    coresolve_under_F,
    exact_through,
    ext_dim,
    injective_coresolution,
    quotient_as_module,
    tau_d,
    tau_d_inv,
)
from .linalg import Mat
from .representations import (
    ModuleCollection,
    Representation,
    RepresentationError,
    F_hom,
    decompose,
    inflate,
    injective,
    is_indecomposable,
    is_injective,
    is_isomorphic,
    is_projective,
    missing_summand,
    projective,
    restrict,
    simple,
    tensor_quotient,
)

# Exhaustive module enumeration gives up on a dimension vector beyond this many matrix tuples.
ENUMERATION_CAP = 200_000
DEFAULT_DIM_BOUND = 8


@dataclass
class Condition:
    id: str
    status: str  # pass | fail | skip | info
    witness: str | None = None
    detail: str | None = None

    def as_dict(self) -> dict:
        return {"id": self.id, "status": self.status, "witness": self.witness, "detail": self.detail}


@dataclass
class CheckReport:
    command: str
    inputs: dict = field(default_factory=dict)
    conditions: list[Condition] = field(default_factory=list)
    hypotheses: str | None = None
    conclusion: str | None = None
    faults: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    verdict_override: str | None = None

    def add(self, cid: str, ok: bool | None, witness: str | None = None, detail: str | None = None) -> Condition:
        status = "skip" if ok is None else ("pass" if ok else "fail")
        c = Condition(cid, status, witness if ok is False else None, detail)
        self.conditions.append(c)
        return c

    def info(self, cid: str, detail: str) -> None:
        self.conditions.append(Condition(cid, "info", None, detail))

    def status(self, cid: str) -> str | None:
        for c in self.conditions:
            if c.id == cid:
                return c.status
        return None

    def group_ok(self, prefix_ids: Iterable[str]) -> bool:
        ids = set(prefix_ids)
        return all(c.status != "fail" for c in self.conditions if c.id in ids)

    @property
    def verdict(self) -> str:
        if self.verdict_override is not None:
            return self.verdict_override
        if self.faults:
            return "fail"
        if self.hypotheses is not None or self.conclusion is not None:
            return "pass" if self.hypotheses != "fail" and self.conclusion != "fail" else "fail"
        return "fail" if any(c.status == "fail" for c in self.conditions) else "pass"

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def as_dict(self, timings: dict | None = None) -> dict:
        out = {
            "command": self.command,
            "inputs": self.inputs,
            "verdict": self.verdict,
            "conditions": [c.as_dict() for c in self.conditions],
        }
        if self.hypotheses is not None:
            out["hypotheses"] = self.hypotheses
            out["conclusion"] = self.conclusion
        out["faults"] = list(self.faults)
        out["notes"] = list(self.notes)
        out["timings"] = timings
        return out

    def to_json(self, timings: dict | None = None) -> str:
        return json.dumps(self.as_dict(timings), indent=2, sort_keys=False)

    def to_text(self) -> str:
        lines = [f"{self.command}: {self.verdict.upper()}"]
        for k, v in self.inputs.items():
            lines.append(f"  {k}: {v}")
        if self.hypotheses is not None:
            lines.append(f"  hypotheses: {self.hypotheses}   conclusion: {self.conclusion}")
        width = max((len(c.id) for c in self.conditions), default=4)
        for c in self.conditions:
            row = f"  {c.id.ljust(width)}  {c.status:<4}"
            if c.detail:
                row += f"  {c.detail}"
            if c.witness:
                row += f"  witness: {c.witness}"
            lines.append(row)
        for f in self.faults:
            lines.append(f"  FAULT: {f}")
        for n in self.notes:
            lines.append(f"  note: {n}")
        return "\n".join(lines) + "\n"


# -- naming ---------------------------------------------------------------

def describe(X: Representation, seed: int = 0) -> str:
    """A readable name: S(v), P(v) or I(v) when X is one of those, else its label or dimensions."""
    A = X.algebra
    if X.is_zero():
        return "0"
    if X.dim == 1:
        return f"S({A.quiver.vertices[X.dims.index(1)]})"
    names = []
    for v in range(A.n):
        P = projective(A, v)
        if P.dims == X.dims and is_isomorphic(P, X, seed):
            names.append(f"P({A.quiver.vertices[v]})")
    for v in range(A.n):
        I = injective(A, v)
        if I.dims == X.dims and is_isomorphic(I, X, seed):
            names.append(f"I({A.quiver.vertices[v]})")
    if names:
        return "=".join(names)
    return "M(" + ",".join(str(d) for d in X.dims) + ")"


def _vertices(A: BoundQuiverAlgebra, e: Iterable[int]) -> str:
    return "{" + ",".join(A.quiver.vertices[v] for v in sorted(e)) + "}"


def _as_collection(A: BoundQuiverAlgebra, coll, seed: int) -> ModuleCollection:
    if isinstance(coll, ModuleCollection):
        return coll
    return ModuleCollection.from_modules(A, coll, seed)


def _regular(A: BoundQuiverAlgebra) -> list[Representation]:
    return [projective(A, v) for v in range(A.n)]


def _coregular(A: BoundQuiverAlgebra) -> list[Representation]:
    return [injective(A, v) for v in range(A.n)]


# -- precluster and cluster tilting ---------------------------------------------

def is_precluster_tilting(d: int, coll, *, algebra: BoundQuiverAlgebra | None = None, seed: int = 0) -> CheckReport:
    """(P1) generator-cogenerator, (P2) closed under tau_d and tau_d^-, (P3) d-rigid."""
    mods = list(coll)
    A = algebra if algebra is not None else (coll.algebra if isinstance(coll, ModuleCollection) else mods[0].algebra)
    C = _as_collection(A, mods, seed)
    rep = CheckReport("precluster", {"d": d, "members": len(C)})
    missing = None
    for M in _regular(A) + _coregular(A):
        if not C.contains_indecomposable(M, seed):
            missing = describe(M, seed)
            break
    rep.add("P1", missing is None, f"{missing} is not in add(C)", "projectives and injectives in add(C)")
    bad = None
    for X in C:
        for name, T in ((f"tau{d}", tau_d(d, X)), (f"taum{d}", tau_d_inv(d, X))):
            part = missing_summand(T, C, seed)
            if part is not None:
                bad = f"{name}({describe(X, seed)}) has summand {describe(part, seed)} outside add(C)"
                break
        if bad:
            break
    rep.add("P2", bad is None, bad, f"tau{d} and taum{d} of every member in add(C)")
    bad = None
    for i in range(1, d):
        for X, Y in product(C, C):
            dim = ext_dim(i, X, Y)
            if dim:
                bad = f"Ext^{i}({describe(X, seed)}, {describe(Y, seed)}) = {dim}"
                break
        if bad:
            break
    rep.add("P3", bad is None, bad, f"Ext^i(C, C) = 0 for 0 < i < {d}")
    return rep


def is_cluster_tilting(d: int, coll, indecs, *, algebra: BoundQuiverAlgebra | None = None, seed: int = 0) -> CheckReport:
    """add(C) = {X | Ext^i(C, X) = 0} = {X | Ext^i(X, C) = 0} over a complete list of indecomposables."""
    mods = list(coll)
    A = algebra if algebra is not None else mods[0].algebra
    C = _as_collection(A, mods, seed)
    indecs = list(indecs)
    for X in indecs:
        if X.algebra is not A:
            raise RepresentationError("indecomposable list over a different algebra")
    rep = CheckReport("cluster", {"d": d, "members": len(C), "indecomposables": len(indecs)})
    if isinstance(indecs, ModuleCollection) and indecs.partial:
        rep.notes.append("indecomposable list is partial")
    bad_right = bad_left = None
    excluded = []
    for X in indecs:
        inside = C.contains_indecomposable(X, seed)
        right = left = None
        for i in range(1, d):
            for Y in C:
                if right is None:
                    k = ext_dim(i, Y, X)
                    if k:
                        right = f"Ext^{i}({describe(Y, seed)}, {describe(X, seed)}) = {k}"
                if left is None:
                    k = ext_dim(i, X, Y)
                    if k:
                        left = f"Ext^{i}({describe(X, seed)}, {describe(Y, seed)}) = {k}"
        if inside != (right is None) and bad_right is None:
            bad_right = f"{describe(X, seed)}: in add(C) = {inside}, " + (right or "Ext^i(C, X) = 0")
        if inside != (left is None) and bad_left is None:
            bad_left = f"{describe(X, seed)}: in add(C) = {inside}, " + (left or "Ext^i(X, C) = 0")
        if not inside:
            excluded.append(f"{describe(X, seed)} [{right or left or 'no Ext witness'}]")
    rep.add("CT-1", bad_right is None, bad_right, "add(C) = {X | Ext^i(C, X) = 0, 0<i<d}")
    rep.add("CT-2", bad_left is None, bad_left, "add(C) = {X | Ext^i(X, C) = 0, 0<i<d}")
    rep.info("excluded", "; ".join(excluded) if excluded else "none")
    return rep


def enumerate_indecomposables(A: BoundQuiverAlgebra, dim_bound: int = DEFAULT_DIM_BOUND, *, seed: int = 0) -> ModuleCollection:
    """All indecomposables of total dimension at most ``dim_bound`` over a prime field."""
    F = A.field
    if F.p is None:
        raise RepresentationError("enumeration needs a finite field")
    out = ModuleCollection(A)
    Q = A.quiver
    elems = list(F.elements())

    def dim_vectors(total):
        def rec(v, left):
            if v == A.n:
                if left == 0:
                    yield ()
                return
            for k in range(left + 1):
                for rest in rec(v + 1, left - k):
                    yield (k,) + rest
        yield from rec(0, total)

    for total in range(1, dim_bound + 1):
        for dims in dim_vectors(total):
            support = {v for v in range(A.n) if dims[v]}
            if not _connected(A, support):
                continue
            shapes = [(dims[a.target], dims[a.source]) for a in Q.arrows]
            nentries = sum(r * c for r, c in shapes)
            if len(elems) ** nentries > ENUMERATION_CAP:
                out.partial = True
                continue
            for entries in product(elems, repeat=nentries):
                maps, k = [], 0
                for r, c in shapes:
                    rows = [list(entries[k + i * c: k + (i + 1) * c]) for i in range(r)]
                    k += r * c
                    maps.append(Mat(F, r, c, rows))
                try:
                    M = Representation(A, dims, maps)
                except RepresentationError:
                    continue
                if is_indecomposable(M, seed):
                    out.add(M, seed)
    return out


def _connected(A: BoundQuiverAlgebra, support: set[int]) -> bool:
    if not support:
        return False
    seen = {min(support)}
    stack = [min(support)]
    while stack:
        v = stack.pop()
        for a in A.quiver.arrows:
            for x, y in ((a.source, a.target), (a.target, a.source)):
                if x == v and y in support and y not in seen:
                    seen.add(y)
                    stack.append(y)
    return seen == support


def precluster_closure(A: BoundQuiverAlgebra, d: int = 2, *, start: Sequence[Representation] = (), cap: int = 200, seed: int = 0) -> ModuleCollection:
    """Projectives, injectives and ``start``, closed under summands of tau_d and tau_d^-."""
    C = ModuleCollection(A)
    queue = []
    for M in list(start) + _regular(A) + _coregular(A):
        for X in decompose(M, seed):
            if C.add(X, seed):
                queue.append(X)
    while queue:
        X = queue.pop(0)
        for T in (tau_d(d, X), tau_d_inv(d, X)):
            for Y in decompose(T, seed):
                if len(C) >= cap:
                    C.partial = True
                    return C
                if C.add(Y, seed):
                    queue.append(Y)
    return C


# -- idempotent ideals ------------------------------------------------------

def _quotient_parts(A: BoundQuiverAlgebra, e: frozenset[int]):
    B = A.quotient(e)
    return B, quotient_as_module(A, e)


def _b_vertex(B: BoundQuiverAlgebra, A: BoundQuiverAlgebra, w: int) -> int:
    return B.quiver.vertex_index[A.quiver.vertices[w]]


def is_projective_injective_bimodule_condition(A: BoundQuiverAlgebra, e: Iterable[int]) -> bool:
    """Ae and D(eA) are both projective and injective."""
    return _pi_witness(A, frozenset(e)) is None


def _pi_witness(A: BoundQuiverAlgebra, e: frozenset[int]) -> str | None:
    for v in sorted(e):
        if not is_injective(projective(A, v)):
            return f"Ae: P({A.quiver.vertices[v]}) is not injective"
        if not is_projective(injective(A, v)):
            return f"D(eA): I({A.quiver.vertices[v]}) is not projective"
    return None


def is_k_idempotent_ideal(A: BoundQuiverAlgebra, e: Iterable[int], k: int) -> CheckReport:
    """Ext^i_A(A/<e>, I) = 0 for every injective I over A/<e> and 0 < i <= k.

    Also compares Ext over A/<e> and over A on the projectives, injectives
    and simples of A/<e>, which must agree exactly when the ideal is
    k-idempotent.
    """
    e = frozenset(e)
    rep = CheckReport("idempotent", {"e": _vertices(A, e), "k": k})
    B, Qm = _quotient_parts(A, e)
    if B.n == 0:
        rep.add("IDEM-inj", True, detail="zero quotient")
        rep.add("IDEM-agree", True, detail="zero quotient")
        return rep
    bad = None
    for w in range(B.n):
        J = inflate(injective(B, w), A)
        for i in range(1, k + 1):
            dim = ext_dim(i, Qm, J)
            if dim:
                bad = f"Ext^{i}_A(A/<e>, I({B.quiver.vertices[w]})) = {dim}"
                break
        if bad:
            break
    rep.add("IDEM-inj", bad is None, bad, f"Ext^i_A(A/<e>, inj(A/<e>)) = 0 for 0 < i <= {k}")
    tests = _quotient_test_modules(B)
    lifted = {id(M): inflate(M, A) for M in tests}
    mismatch = None
    for M, N in product(tests, tests):
        for i in range(0, k + 1):
            a, b = ext_dim(i, M, N), ext_dim(i, lifted[id(M)], lifted[id(N)])
            if a != b:
                mismatch = f"Ext^{i}({M.name()}, {N.name()}): {a} over A/<e>, {b} over A"
                break
        if mismatch:
            break
    rep.add("IDEM-agree", mismatch is None, mismatch, "Ext agrees over A/<e> and A on test modules")
    if (bad is None) != (mismatch is None):
        rep.faults.append("injective vanishing and Ext agreement disagree")
    rep.verdict_override = "pass" if bad is None and not rep.faults else "fail"
    return rep


def _quotient_test_modules(B: BoundQuiverAlgebra) -> list[Representation]:
    return [projective(B, w) for w in range(B.n)] + [injective(B, w) for w in range(B.n)] + [
        simple(B, w) for w in range(B.n)
    ]


def check_apt_equivalence(A: BoundQuiverAlgebra, e: Iterable[int], N: Representation, d: int) -> CheckReport:
    """(i) Ext^i_A(A/<e>, N) = 0 for 0<i<d  versus  (ii) Ext^i_{A/<e>}(M, FN) = Ext^i_A(M, N)."""
    e = frozenset(e)
    rep = CheckReport("apt-equivalence", {"e": _vertices(A, e), "N": N.name(), "d": d})
    B, Qm = _quotient_parts(A, e)
    first_bad = None
    dims = []
    for i in range(1, d):
        k = ext_dim(i, Qm, N)
        dims.append(f"{i}:{k}")
        if k and first_bad is None:
            first_bad = f"Ext^{i}_A(A/<e>, {N.name()}) = {k}"
    rep.add("EXT-vanish", first_bad is None, first_bad, "Ext^i_A(A/<e>, N) dims " + (" ".join(dims) or "none"))
    if B.n == 0:
        rep.add("EXT-agree", True, detail="zero quotient")
        return rep
    FN = restrict(F_hom(e, N), B) if B is not A else N
    mismatch = None
    for M in [projective(B, w) for w in range(B.n)] + [simple(B, w) for w in range(B.n)]:
        lifted = inflate(M, A)
        for i in range(1, d):
            a, b = ext_dim(i, M, FN), ext_dim(i, lifted, N)
            if a != b:
                mismatch = f"Ext^{i}({M.name()}, FN) = {a} over A/<e> but Ext^{i}_A = {b}"
                break
        if mismatch:
            break
    rep.add("EXT-agree", mismatch is None, mismatch, "Ext^i_{A/<e>}(M, FN) = Ext^i_A(M, N)")
    if (first_bad is None) != (mismatch is None):
        rep.faults.append("Ext vanishing and Ext agreement disagree")
    return rep


def check_coresolution_exactness(A: BoundQuiverAlgebra, e: Iterable[int], N: Representation, d: int) -> CheckReport:
    """F applied to the minimal injective coresolution of N, when Ext^i_A(A/<e>, N) = 0 for 0<i<d."""
    e = frozenset(e)
    rep = CheckReport("apt-corollary", {"e": _vertices(A, e), "N": N.name(), "d": d})
    try:
        R = coresolve_under_F(e, N, d)
    except PreconditionError as exc:
        rep.add("COR-pre", False, str(exc), "hypothesis of the corollary")
        rep.verdict_override = "skip"
        return rep
    rep.add("COR-pre", True, detail="Ext^i_A(A/<e>, N) = 0 for 0 < i < d")
    if R.module.algebra.n == 0:
        rep.add("COR-exact", True, detail="zero quotient")
        rep.add("COR-injective", True, detail="zero quotient")
        return rep
    ok = exact_through(R, d - 1)
    rep.add("COR-exact", ok, "F-applied complex is not exact", f"exact at FN and FI_0..FI_{d - 1}")
    inj_ok = all(is_injective(R.modules[j]) for j in range(min(d + 1, len(R.modules))))
    rep.add("COR-injective", inj_ok, "some FI_j is not injective over A/<e>", f"FI_0..FI_{d} injective")
    if not (ok and inj_ok):
        rep.faults.append("corollary conclusion failed although its hypothesis holds")
    return rep


def _coresolution_socles(N: Representation, upto: int) -> list[tuple[int, ...]]:
    R = injective_coresolution(N, upto)
    return [R.modules[j].socles if j < len(R.modules) else () for j in range(upto + 1)]


def in_I_d(A: BoundQuiverAlgebra, e: Iterable[int], N: Representation, d: int) -> CheckReport:
    """Membership in I_d, decided by Ext^i_A(A/<e>, N) = 0 for 0 <= i < d.

    The coresolution side uses injectives at the vertices of e and the
    terms I_0 .. I_{d-1}; this is the form in which the two conditions are
    equivalent.  The reading with injectives off e and terms up to I_d is
    evaluated too and reported as ``ID-alt``.
    """
    if d < 1:
        raise ValueError("d must be >= 1")
    e = frozenset(e)
    rep = CheckReport("in-I_d", {"e": _vertices(A, e), "N": N.name(), "d": d})
    _, Qm = _quotient_parts(A, e)
    bad = None
    for i in range(0, d):
        k = ext_dim(i, Qm, N) if not Qm.is_zero() else 0
        if k:
            bad = f"Ext^{i}_A(A/<e>, {N.name()}) = {k}"
            break
    member = bad is None
    rep.add("ID-ext", member, bad, f"Ext^i_A(A/<e>, N) = 0 for 0 <= i < {d}")
    socles = _coresolution_socles(N, d)
    off = None
    for j in range(d):
        outside = [v for v in socles[j] if v not in e]
        if outside:
            off = f"I_{j} has summand I({A.quiver.vertices[outside[0]]})"
            break
    rep.add("ID-coresolution", off is None, off, f"I_0..I_{d - 1} in add(D(eA))")
    if (off is None) != member:
        rep.faults.append("Ext vanishing and coresolution shape disagree")
    alt = all(v not in e for j in range(d + 1) for v in socles[j])
    rep.info("ID-alt", f"I_0..I_{d} in add(D((1-e)A)): {alt}; agrees with (iii): {alt == member}")
    rep.verdict_override = ("pass" if member else "fail") if not rep.faults else "fail"
    return rep


def check_boundary_lemma(A: BoundQuiverAlgebra, e: Iterable[int], M: Representation, *, reading: str = "literal") -> CheckReport:
    """I_2 in add(D(eA))  <=>  Ext^2_A(A/<1-e>, M) = 0, for Ae and D(eA) projective-injective.

    ``reading="swapped"`` uses add(D((1-e)A)) on the left instead; both
    readings are always evaluated and reported.
    """
    e = frozenset(e)
    wit = _pi_witness(A, e)
    if wit is not None:
        raise PreconditionError(wit)
    comp = frozenset(range(A.n)) - e
    rep = CheckReport("boundary-lemma", {"e": _vertices(A, e), "M": M.name(), "reading": reading})
    socles = _coresolution_socles(M, 2)[2]
    in_e = all(v in e for v in socles)
    in_comp = all(v in comp for v in socles)
    Qc = quotient_as_module(A, comp)
    k = ext_dim(2, Qc, M) if not Qc.is_zero() else 0
    names = ",".join(A.quiver.vertices[v] for v in socles) or "-"
    rep.info("LEMMA-I2", f"socle vertices of I_2: {names}")
    rep.info("LEMMA-ext", f"dim Ext^2_A(A/<1-e>, M) = {k}")
    lit = in_e == (k == 0)
    swp = in_comp == (k == 0)
    rep.add("LEMMA-literal", lit, f"I_2 in add(D(eA)) is {in_e} but Ext^2 = {k}", "I_2 in add(D(eA)) <=> Ext^2 = 0")
    rep.add("LEMMA-swapped", swp, f"I_2 in add(D((1-e)A)) is {in_comp} but Ext^2 = {k}", "I_2 in add(D((1-e)A)) <=> Ext^2 = 0")
    rep.verdict_override = "pass" if (lit if reading == "literal" else swp) else "fail"
    return rep


# -- the reduction theorems -----------------------------------------------------

def _supported_off(X: Representation, e: frozenset[int]) -> bool:
    return all(X.dims[v] == 0 for v in e)


def check_theorem1(A: BoundQuiverAlgebra, e: Iterable[int], coll_tilde, *, seed: int = 0, d: int = 2) -> CheckReport:
    """Hom(A/<e>, C~) and A/<e> (x) C~ inside add(C~)  =>  C~ restricted to A/<e> is precluster tilting."""
    e = frozenset(e)
    Ct = _as_collection(A, list(coll_tilde), seed)
    rep = CheckReport("theorem1", {"e": _vertices(A, e), "members": len(Ct), "d": d})
    if d != 2:
        rep.notes.append("d != 2 lies outside the proven range of the statement")
    pre = is_precluster_tilting(d, Ct, algebra=A, seed=seed)
    for c in pre.conditions:
        rep.conditions.append(Condition("pre-" + c.id, c.status, c.witness, c.detail))
    if not pre.passed:
        raise PreconditionError(_first_witness(pre) or "collection is not precluster tilting over A")
    bad_f = bad_t = None
    for X in Ct:
        if bad_f is None:
            part = missing_summand(F_hom(e, X), Ct, seed)
            if part is not None:
                bad_f = f"F({describe(X, seed)}) has summand {describe(part, seed)}"
        if bad_t is None:
            part = missing_summand(tensor_quotient(e, X), Ct, seed)
            if part is not None:
                bad_t = f"T({describe(X, seed)}) has summand {describe(part, seed)}"
    rep.add("T1-i", bad_f is None, bad_f, "Hom_A(A/<e>, C~) in add(C~)")
    rep.add("T1-ii", bad_t is None, bad_t, "A/<e> (x)_A C~ in add(C~)")
    rep.hypotheses = "pass" if bad_f is None and bad_t is None else "fail"
    B = A.quotient(e)
    kept = [X for X in Ct if _supported_off(X, e)]
    rep.info("T1-C", "C = " + (", ".join(describe(X, seed) for X in kept) or "empty"))
    if B.n == 0:
        rep.add("T1-concl", True, detail="zero quotient")
        rep.conclusion = "pass"
        return rep
    C = [restrict(X, B) if B is not A else X for X in kept]
    concl = is_precluster_tilting(d, C, algebra=B, seed=seed) if C else _empty_collection_report(B, d)
    for c in concl.conditions:
        rep.conditions.append(Condition("T1-concl-" + c.id, c.status, c.witness, c.detail))
    rep.conclusion = concl.verdict
    if rep.hypotheses == "pass" and rep.conclusion == "fail":
        rep.faults.append("theorem1: hypotheses hold but the conclusion fails")
    return rep


def _empty_collection_report(B: BoundQuiverAlgebra, d: int) -> CheckReport:
    rep = CheckReport("precluster", {"d": d, "members": 0})
    rep.add("P1", B.n == 0, "empty collection over a nonzero algebra", "projectives and injectives in add(C)")
    return rep


def _first_witness(rep: CheckReport) -> str | None:
    for c in rep.conditions:
        if c.status == "fail":
            return f"{c.id}: {c.witness}"
    return None


def _same_sets(left: list[Representation], right: list[Representation], seed: int) -> str | None:
    """None when both lists agree up to isomorphism (as sets); otherwise a witness."""
    for X in left:
        if not any(X.dims == Y.dims and is_isomorphic(X, Y, seed) for Y in right):
            return f"{describe(X, seed)} only on the left"
    for Y in right:
        if not any(X.dims == Y.dims and is_isomorphic(X, Y, seed) for X in left):
            return f"{describe(Y, seed)} only on the right"
    return None


def _outside_quotient(A: BoundQuiverAlgebra, B: BoundQuiverAlgebra, e: frozenset[int], kind: str, reading: str, seed: int) -> list[int]:
    """Vertices v whose P_v (or I_v) is not isomorphic to a projective (injective) A/<e>-module."""
    if reading == "e-vertices":
        return sorted(e)
    make = projective if kind == "proj" else injective
    own = [inflate(make(B, w), A) for w in range(B.n)]
    out = []
    for v in range(A.n):
        M = make(A, v)
        if not any(M.dims == Q.dims and is_isomorphic(M, Q, seed) for Q in own):
            out.append(v)
    return out


def check_theorem2(
    A: BoundQuiverAlgebra,
    e: Iterable[int],
    coll,
    *,
    quantifier: str = "exists",
    proj_reading: str = "difference",
    seed: int = 0,
    d: int = 2,
) -> CheckReport:
    """Conditions (i)-(iv) on A and e  =>  C + proj(A) + inj(A) is precluster tilting over A.

    ``coll`` lives over A/<e>.  Condition (iii) compares the members X with
    Ext^2_A(X, J) != 0 for some (``quantifier="exists"``) or every
    (``"forall"``) injective J over A/<1-e> against the translates taum2 P.
    P runs over the indecomposable projectives of A not isomorphic to a
    projective A/<e>-module (``proj_reading="difference"``) or over P_v with
    v in e (``"e-vertices"``); (iv) is dual.  Every reading is evaluated and
    the ones not selected are reported as information.
    """
    e = frozenset(e)
    if quantifier not in ("forall", "exists"):
        raise ValueError("quantifier must be 'forall' or 'exists'")
    if proj_reading not in ("difference", "e-vertices"):
        raise ValueError("proj_reading must be 'difference' or 'e-vertices'")
    B = A.quotient(e)
    mods = list(coll)
    rep = CheckReport(
        "theorem2",
        {"e": _vertices(A, e), "members": len(mods), "d": d, "quantifier": quantifier, "proj_reading": proj_reading},
    )
    if d != 2:
        rep.notes.append("d != 2 lies outside the proven range of the statement")
    if B.n:
        C = _as_collection(B, mods, seed)
        pre = is_precluster_tilting(d, C, algebra=B, seed=seed) if len(C) else _empty_collection_report(B, d)
        for c in pre.conditions:
            rep.conditions.append(Condition("pre-" + c.id, c.status, c.witness, c.detail))
        if not pre.passed:
            raise PreconditionError(_first_witness(pre) or "collection is not precluster tilting over A/<e>")
        members = [inflate(X, A) for X in C]
    else:
        members = []
    comp = frozenset(range(A.n)) - e
    regular, coregular = _regular(A), _coregular(A)

    bad = None
    for I, P in product(coregular, regular):
        k = ext_dim(1, I, P)
        if k:
            bad = f"Ext^1({describe(I, seed)}, {describe(P, seed)}) = {k}"
            break
    rep.add("T2-i", bad is None, bad, "Ext^1_A(DA, A) = 0")
    wit = _pi_witness(A, e)
    rep.add("T2-ii", wit is None, wit, "Ae and D(eA) projective-injective")

    Bc = A.quotient(comp)
    js = [inflate(injective(Bc, w), A) for w in range(Bc.n)] if Bc.n else []
    nonzero = {id(X): [ext_dim(2, X, J) != 0 for J in js] for X in members}
    left3 = {
        "forall": [X for X in members if js and all(nonzero[id(X)])],
        "exists": [X for X in members if any(nonzero[id(X)])],
    }
    Qc = quotient_as_module(A, comp)
    left4 = [X for X in members if not Qc.is_zero() and ext_dim(2, Qc, X) != 0]
    right3, right4 = {}, {}
    for reading in ("difference", "e-vertices"):
        right3[reading] = [
            Y for v in _outside_quotient(A, B, e, "proj", reading, seed) for Y in decompose(tau_d_inv(d, projective(A, v)), seed)
        ]
        right4[reading] = [
            Y for v in _outside_quotient(A, B, e, "inj", reading, seed) for Y in decompose(tau_d(d, injective(A, v)), seed)
        ]
    w3 = _same_sets(left3[quantifier], right3[proj_reading], seed)
    rep.add("T2-iii", w3 is None, w3, f"{{X | Ext^2(X, J) != 0, {quantifier} J}} = {{taum2 P}}")
    w4 = _same_sets(left4, right4[proj_reading], seed)
    rep.add("T2-iv", w4 is None, w4, "{X | Ext^2(A/<1-e>, X) != 0} = {tau2 I}")
    for q, r in product(("exists", "forall"), ("difference", "e-vertices")):
        if (q, r) == (quantifier, proj_reading):
            continue
        w = _same_sets(left3[q], right3[r], seed)
        rep.info(f"T2-iii[{q},{r}]", "holds" if w is None else f"fails: {w}")
    for r in ("difference", "e-vertices"):
        if r == proj_reading:
            continue
        w = _same_sets(left4, right4[r], seed)
        rep.info(f"T2-iv[{r}]", "holds" if w is None else f"fails: {w}")
    rep.hypotheses = "pass" if all(rep.status(c) == "pass" for c in ("T2-i", "T2-ii", "T2-iii", "T2-iv")) else "fail"

    tilde = ModuleCollection(A)
    for X in members + regular + coregular:
        for Y in decompose(X, seed):
            tilde.add(Y, seed)
    rep.info("T2-C~", f"{len(tilde)} indecomposables after removing isomorphic copies")
    concl = is_precluster_tilting(d, tilde, algebra=A, seed=seed)
    for c in concl.conditions:
        rep.conditions.append(Condition("T2-concl-" + c.id, c.status, c.witness, c.detail))
    rep.conclusion = concl.verdict
    if rep.hypotheses == "pass" and rep.conclusion == "fail":
        rep.faults.append("theorem2: hypotheses hold but the conclusion fails")
    return rep


def check_jk_criterion(
    A: BoundQuiverAlgebra,
    d: int,
    e: Iterable[int],
    coll_tilde,
    *,
    quotient_indecs=None,
    dim_bound: int = DEFAULT_DIM_BOUND,
    seed: int = 0,
) -> CheckReport:
    """Projectives and injectives of A/<e> in C, and members off mod(A/<e>) projective-injective
    => <e> is (d-1)-idempotent and C is d-cluster tilting over A/<e>."""
    e = frozenset(e)
    Ct = _as_collection(A, list(coll_tilde), seed)
    B = A.quotient(e)
    rep = CheckReport("jk", {"e": _vertices(A, e), "members": len(Ct), "d": d})
    kept = [X for X in Ct if _supported_off(X, e)]
    bad = None
    for w in range(B.n):
        for M in (projective(B, w), injective(B, w)):
            if not any(Y.dims == inflate(M, A).dims and is_isomorphic(inflate(M, A), Y, seed) for Y in kept):
                bad = f"{M.name()} over A/<e> is not in C"
                break
        if bad:
            break
    rep.add("JK-1", bad is None, bad, "proj and inj of A/<e> belong to C")
    bad = None
    for X in Ct:
        if not _supported_off(X, e) and not (is_projective(X) and is_injective(X)):
            bad = f"{describe(X, seed)} lies outside mod(A/<e>) and is not projective-injective"
            break
    rep.add("JK-2", bad is None, bad, "members outside mod(A/<e>) are projective-injective")
    rep.hypotheses = "pass" if rep.status("JK-1") == "pass" and rep.status("JK-2") == "pass" else "fail"
    idem = is_k_idempotent_ideal(A, e, d - 1)
    rep.add("JK-concl-idempotent", idem.passed, _first_witness(idem), f"<e> is {d - 1}-idempotent")
    C = [restrict(X, B) if B is not A else X for X in kept]
    if B.n == 0:
        ct_ok = True
        rep.add("JK-concl-cluster", True, detail="zero quotient")
    else:
        indecs = quotient_indecs
        if indecs is None and B.field.p is not None:
            indecs = enumerate_indecomposables(B, dim_bound, seed=seed)
        if indecs is None:
            pc = is_precluster_tilting(d, C, algebra=B, seed=seed) if C else _empty_collection_report(B, d)
            ct_ok = pc.passed
            rep.add("JK-concl-cluster", None, detail="no indecomposable list over the rationals")
            rep.add("JK-concl-precluster", ct_ok, _first_witness(pc), "C precluster tilting over A/<e>")
        else:
            ct = is_cluster_tilting(d, C, indecs, algebra=B, seed=seed) if C else _empty_collection_report(B, d)
            ct_ok = ct.passed
            rep.add("JK-concl-cluster", ct_ok, _first_witness(ct), "C cluster tilting over A/<e>")
    rep.conclusion = "pass" if idem.passed and ct_ok else "fail"
    if rep.hypotheses == "pass" and rep.conclusion == "fail":
        rep.faults.append("jk: hypotheses hold but the conclusion fails")
    return rep


def check_iyama_duality(d: int, coll, *, algebra: BoundQuiverAlgebra | None = None, seed: int = 0) -> CheckReport:
    """dim Ext^i(M, N) = dim Ext^{d-i}(N, tau_d M) when Ext^i(M, A) = 0, and the dual identity."""
    mods = list(coll)
    A = algebra if algebra is not None else mods[0].algebra
    rep = CheckReport("iyama-duality", {"d": d, "members": len(mods)})
    regular, coregular = _regular(A), _coregular(A)
    tested = bad = None
    count = 0
    for M in mods:
        if any(ext_dim(i, M, P) for i in range(1, d) for P in regular):
            continue
        T = tau_d(d, M)
        for N in mods:
            for i in range(1, d):
                a, b = ext_dim(i, M, N), ext_dim(d - i, N, T)
                count += 1
                if a != b and bad is None:
                    bad = f"Ext^{i}({describe(M, seed)}, {describe(N, seed)}) = {a} but Ext^{d - i}(N, tau{d} M) = {b}"
    rep.add("DUALITY-tau", bad is None, bad, f"{count} identities checked")
    bad = None
    count = 0
    for N in mods:
        if any(ext_dim(i, I, N) for i in range(1, d) for I in coregular):
            continue
        T = tau_d_inv(d, N)
        for M in mods:
            for i in range(1, d):
                a, b = ext_dim(i, M, N), ext_dim(d - i, T, M)
                count += 1
                if a != b and bad is None:
                    bad = f"Ext^{i}({describe(M, seed)}, {describe(N, seed)}) = {a} but Ext^{d - i}(taum{d} N, M) = {b}"
    rep.add("DUALITY-taum", bad is None, bad, f"{count} identities checked")
    if rep.verdict == "fail":
        rep.faults.append("duality identity violated")
    return rep
