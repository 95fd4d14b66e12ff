"""Acceptance criteria 1-10.

Each test records one ``criterion N: PASS|FAIL|XFAIL ...`` line; the lines
are printed together in the terminal summary (see conftest.py).  Run alone
with ``pytest tests/test_acceptance.py`` or ``python tests/test_acceptance.py``.
"""

import json
import subprocess
import sys
import time
from itertools import product

import pytest

from quiverext.checkers import (
    check_apt_equivalence,
    check_boundary_lemma,
    check_coresolution_exactness,
    check_iyama_duality,
    check_jk_criterion,
    check_theorem1,
    check_theorem2,
    enumerate_indecomposables,
    in_I_d,
    is_cluster_tilting,
    is_k_idempotent_ideal,
    is_precluster_tilting,
    precluster_closure,
)
from quiverext.constructions import FIXTURE_NAMES, fixture, quiver_blocks, random_radical_cube_zero
from quiverext.exprs import evaluate
from quiverext.homology import PreconditionError, ext_dim_injective, ext_dim_projective, inj_dim, proj_dim
from quiverext.linalg import GF
from quiverext.representations import injective, is_injective, projective, simple

from strategies import tame_enough
from oracles import brute_force_dimension

RESULTS: dict[int, str] = {}
REPORTS = []  # every theorem and JK report produced here, for criterion 9

BOUNDARY_E = ("125", "236", "145", "367", "147")


def record(n: int, ok: bool, detail: str, *, expected_failure: bool = False) -> None:
    status = "PASS" if ok else ("XFAIL" if expected_failure else "FAIL")
    RESULTS[n] = f"criterion {n:2d}: {status}  {detail}"


def _standard_modules(A):
    return [f(A, v) for f in (simple, projective, injective) for v in range(A.n)]


def _idempotents(name):
    F = fixture(name)
    A = F.algebra
    found = [frozenset({v}) for v in range(A.n)] + [A.vertex_set(labels) for labels in F.idempotents.values()]
    return list(dict.fromkeys(found))


def _acceptance_seeds(count=20):
    """The first ``count`` seeds whose random algebra has out-degree at most two."""
    return [s for s in range(500) if tame_enough(random_radical_cube_zero(s))][:count]


def _theorems(A, e):
    r1 = check_theorem1(A, e, precluster_closure(A))
    r2 = check_theorem2(A, e, precluster_closure(A.quotient(e)))
    REPORTS.extend([r1, r2])
    return r1, r2


def test_criterion_01_auslander_a2():
    start = time.perf_counter()
    A = fixture("aus2").algebra
    pre = is_precluster_tilting(2, evaluate(A, "S(1),S(3),P(1),P(2),P(3)"))
    B = fixture("aus2", GF(2)).algebra
    indecs = enumerate_indecomposables(B, 3)
    ct = is_cluster_tilting(2, evaluate(B, "S(1),S(3),P(1),P(2),P(3)"), indecs)
    excluded = next(c.detail for c in ct.conditions if c.id == "excluded")
    elapsed = time.perf_counter() - start
    ok = pre.passed and len(indecs) == 5 and ct.passed and excluded.startswith("S(2) [Ext^1") and elapsed < 1
    record(1, ok, f"precluster {pre.verdict}, {len(indecs)} indecomposables, cluster {ct.verdict}, "
                  f"excluded {excluded}, {elapsed:.2f}s")
    assert ok, pre.to_text() + ct.to_text()


def test_criterion_02_preprojective_a3():
    start = time.perf_counter()
    A = fixture("pi3").algebra
    oracle = sum(brute_force_dimension(A.quiver, [{w: int(c) for w, c in r.items()} for r in A.relations], 4))
    selfinj = all(is_injective(projective(A, v)) for v in range(A.n))
    pre = is_precluster_tilting(2, evaluate(A, "S(1),S(3),P(*)"))
    elapsed = time.perf_counter() - start
    ok = A.dimension == oracle == 10 and selfinj and pre.passed and elapsed < 5
    record(2, ok, f"dimension {A.dimension} (oracle {oracle}), self-injective {selfinj}, "
                  f"precluster {pre.verdict}, {elapsed:.2f}s")
    assert ok, pre.to_text()


def test_criterion_03_higher_nakayama():
    start = time.perf_counter()
    A = fixture("hnak").algebra
    e = A.vertex_set(["04"])
    S = simple(A, A.vertex("04"))
    pd, idim = proj_dim(S), inj_dim(S)
    r1, r2 = _theorems(A, e)
    elapsed = time.perf_counter() - start
    ok = pd == idim == 1 and r1.passed and r2.passed and r1.hypotheses == r2.hypotheses == "pass" and elapsed < 30
    record(3, ok, f"pd {pd}, id {idim}; theorem1 {r1.hypotheses}/{r1.conclusion}, "
                  f"theorem2 {r2.hypotheses}/{r2.conclusion} (hypotheses/conclusion), {elapsed:.2f}s")
    assert ok, "discrepancy report:\n" + r1.to_text() + r2.to_text()


def test_criterion_04_boundary_example():
    A = fixture("boundary").algebra
    e = A.vertex_set(BOUNDARY_E)
    r1, r2 = _theorems(A, e)
    B = A.quotient(e)
    blocks = sorted(quiver_blocks(B))
    expected = sorted([("135", "136", "146"), ("256",), ("347",)])
    semisimple_part = all(
        not B.quiver.out_arrows(B.vertex(v)) and not B.quiver.in_arrows(B.vertex(v)) for v in ("256", "347")
    )
    C = [X for X in precluster_closure(A) if all(X.dims[v] == 0 for v in e)]
    within_blocks = all(
        any(all(X.dims[A.vertex(v)] == 0 for v in B.quiver.vertices if v not in blk) for blk in blocks) for X in C
    )
    # the verbatim transcription of the drawing lacks one relation; report what breaks
    D = fixture("boundary_drawn").algebra
    d_e = D.vertex_set(BOUNDARY_E)
    try:
        d1 = check_theorem1(D, d_e, precluster_closure(D)).verdict
    except PreconditionError as exc:
        d1 = f"precondition fails ({exc})"
    d2 = check_theorem2(D, d_e, precluster_closure(D.quotient(d_e)))
    broken = [c.id for c in d2.conditions if c.status == "fail" and c.id.startswith("T2-i")]
    ok = r1.passed and r2.passed and blocks == expected and semisimple_part and within_blocks
    record(4, ok, f"theorem1 {r1.verdict}, theorem2 {r2.verdict}, blocks {blocks}; "
                  f"drawn transcription: theorem1 {d1}, theorem2 fails {','.join(broken)}")
    assert ok, r1.to_text() + r2.to_text()


def test_criterion_05_ext_oracle():
    start = time.perf_counter()
    compared = 0
    mismatches = []
    for name in FIXTURE_NAMES:
        A = fixture(name).algebra
        mods = _standard_modules(A)
        for M, N in product(mods, mods):
            for i in (1, 2, 3):
                a, b = ext_dim_projective(i, M, N), ext_dim_injective(i, M, N)
                compared += 1
                if a != b:
                    mismatches.append(f"{name} Ext^{i}({M.name()}, {N.name()}): {a} vs {b}")
    elapsed = time.perf_counter() - start
    ok = not mismatches and elapsed < 60
    record(5, ok, f"{compared} Ext dimensions agree on both sides, {elapsed:.1f}s")
    assert ok, mismatches[:5]


def test_criterion_06_iyama_duality():
    failures = []
    checked = 0
    for name in FIXTURE_NAMES:
        A = fixture(name).algebra
        mods = _standard_modules(A) + list(precluster_closure(A))
        rep = check_iyama_duality(2, mods, algebra=A)
        checked += sum(int(c.detail.split()[0]) for c in rep.conditions)
        if not rep.passed:
            failures.append(f"{name}: {rep.to_text()}")
    record(6, not failures, f"{checked} duality identities on {len(FIXTURE_NAMES)} fixtures")
    assert not failures, failures


def _apt_sweep(A, idempotents):
    faults, runs = [], 0
    mods = _standard_modules(A)
    for e in idempotents:
        reps = [is_k_idempotent_ideal(A, e, 1)]
        for N in mods:
            reps += [check_apt_equivalence(A, e, N, 2), in_I_d(A, e, N, 2), check_coresolution_exactness(A, e, N, 2)]
        runs += len(reps)
        faults += [f for r in reps for f in r.faults]
    return runs, faults


def test_criterion_07_apt_properties():
    runs, faults = 0, []
    for name in FIXTURE_NAMES:
        r, f = _apt_sweep(fixture(name).algebra, _idempotents(name))
        runs, faults = runs + r, faults + f
    seeds = _acceptance_seeds()
    for s in seeds:
        A = random_radical_cube_zero(s)
        r, f = _apt_sweep(A, [frozenset({v}) for v in range(A.n)])
        runs, faults = runs + r, faults + [f"seed {s}: {x}" for x in f]
    ok = not faults and len(seeds) == 20
    record(7, ok, f"{runs} equivalence checks on {len(FIXTURE_NAMES)} fixtures and random seeds {seeds[0]}..{seeds[-1]}")
    assert ok, faults[:5]


def _lemma_cases():
    for name in FIXTURE_NAMES:
        A = fixture(name).algebra
        for e in _idempotents(name):
            if not e or len(e) == A.n:
                continue
            for v in range(A.n):
                try:
                    yield name, e, check_boundary_lemma(A, e, simple(A, v))
                except PreconditionError:
                    break


@pytest.mark.xfail(strict=True, reason="the biconditional with add(D(eA)) fails; with add(D((1-e)A)) it holds")
def test_criterion_08_boundary_lemma():
    literal_fail, swapped_fail, total = [], [], 0
    for name, e, rep in _lemma_cases():
        total += 1
        if rep.status("LEMMA-literal") != "pass":
            literal_fail.append(f"{name} e={sorted(e)} {rep.inputs['M']}")
        if rep.status("LEMMA-swapped") != "pass":
            swapped_fail.append(f"{name} e={sorted(e)} {rep.inputs['M']}")
    ok = not literal_fail
    record(8, ok, f"literal reading fails on {len(literal_fail)}/{total} cases (first: "
                  f"{literal_fail[0] if literal_fail else '-'}); swapped reading fails on {len(swapped_fail)}/{total}",
           expected_failure=not swapped_fail)
    assert not swapped_fail, swapped_fail[:5]
    assert ok, literal_fail[:5]


def test_criterion_09_no_engine_faults():
    counts = {"theorem1": 0, "theorem2": 0, "jk": 0}
    for name in FIXTURE_NAMES:
        A = fixture(name).algebra
        closure = precluster_closure(A)
        for e in _idempotents(name):
            for make in (
                lambda: check_theorem1(A, e, closure),
                lambda: check_theorem2(A, e, precluster_closure(A.quotient(e))),
                lambda: check_jk_criterion(A, 2, e, closure),
            ):
                try:
                    REPORTS.append(make())
                except PreconditionError:
                    continue
    faults = []
    for r in REPORTS:
        counts[r.command] = counts.get(r.command, 0) + 1
        if r.hypotheses == "pass" and r.conclusion == "fail" or r.faults:
            faults.append(f"{r.command} {r.inputs}: {r.faults}")
    record(9, not faults, "no hypothesis-pass/conclusion-fail among "
                          + ", ".join(f"{k} {v}" for k, v in counts.items()))
    assert not faults, faults


DETERMINISM_COMMANDS = [
    ["check", "precluster", "pi3", "--modules", "P(*),S(1),S(3)"],
    ["check", "cluster", "aus2", "--prime", "2", "--bound", "3", "--modules", "S(1),S(3),P(*)"],
    ["check", "theorem1", "hnak", "-e", "04"],
    ["check", "theorem2", "boundary", "-e", ",".join(BOUNDARY_E)],
    ["check", "lemma", "pi3", "-e", "1", "-M", "S(2)"],
    ["check", "jk", "aus2", "--prime", "2", "-e", "2", "--bound", "3", "--modules", "S(1),S(3),P(*)"],
    ["tau", "hnak", "-M", "S(04)"],
]


def _run_all(seed):
    outs = []
    for cmd in DETERMINISM_COMMANDS:
        proc = subprocess.run(
            [sys.executable, "-m", "quiverext", *cmd, "--format", "json", "--seed", str(seed)],
            capture_output=True, text=True, check=False,
        )
        json.loads(proc.stdout)
        outs.append(proc.stdout)
    return outs


def test_criterion_10_determinism():
    first, second = _run_all(7), _run_all(7)
    same = [a == b for a, b in zip(first, second)]
    record(10, all(same), f"{sum(same)}/{len(same)} JSON reports byte-identical across two processes")
    assert all(same)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
