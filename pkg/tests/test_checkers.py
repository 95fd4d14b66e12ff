import re

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
from quiverext.constructions import fixture
from quiverext.exprs import evaluate, evaluate_one
from quiverext.homology import PreconditionError, ext_dim
from quiverext.linalg import GF
from quiverext.representations import add_membership, F_hom, injective, simple
from quiverext.textformat import parse_algebra

from strategies import module_zoo


def semisimple(n=2, field="Q"):
    text = f"field {field}\n" + "".join(f"vertex {v + 1}\n" for v in range(n))
    return parse_algebra(text)


@pytest.fixture(scope="module")
def aus2_f2():
    return fixture("aus2", GF(2)).algebra


def _ext_witnesses(A, report):
    """Re-evaluate every 'Ext^i(X, Y) = k' witness from scratch."""
    checked = 0
    for c in report.conditions:
        if c.status != "fail" or not c.witness:
            continue
        for i, x, y, k in re.findall(r"Ext\^(\d+)\(([^,]+), ([^)]+\)?)\) = (\d+)", c.witness):
            if x.startswith("M(") or y.startswith("M("):
                continue
            X = evaluate_one(A, x.split("=")[0])
            Y = evaluate_one(A, y.split("=")[0])
            assert ext_dim(int(i), X, Y) == int(k) != 0
            checked += 1
    return checked


# -- precluster / cluster --------------------------------------------------------

def test_precluster_semisimple():
    A = semisimple(3)
    assert is_precluster_tilting(2, [simple(A, v) for v in range(3)]).passed


@pytest.mark.parametrize("name", ["aus2", "pi3"])
def test_precluster_examples(name):
    A = fixture(name).algebra
    rep = is_precluster_tilting(2, evaluate(A, "S(1),S(3),P(*)"))
    assert rep.passed, rep.to_text()


def test_precluster_failure_witness_is_sound(pi3):
    rep = is_precluster_tilting(2, evaluate(pi3, "S(1),S(2),P(*)"))
    assert not rep.passed and rep.status("P3") == "fail"
    assert _ext_witnesses(pi3, rep) == 1


def test_precluster_missing_projective(aus2):
    rep = is_precluster_tilting(2, evaluate(aus2, "S(1),S(3),P(2),P(3)"))
    assert rep.status("P1") == "fail" and "P(1)" in rep.conditions[0].witness


def test_cluster_semisimple():
    A = semisimple(2, "F 2")
    simples = [simple(A, v) for v in range(2)]
    assert is_cluster_tilting(2, simples, enumerate_indecomposables(A, 2)).passed


def test_cluster_aus2_excludes_simple_middle(aus2_f2):
    indecs = enumerate_indecomposables(aus2_f2, 3)
    rep = is_cluster_tilting(2, evaluate(aus2_f2, "S(1),S(3),P(*)"), indecs)
    assert rep.passed, rep.to_text()
    excluded = next(c.detail for c in rep.conditions if c.id == "excluded")
    assert excluded.startswith("S(2) [Ext^1")
    S2 = simple(aus2_f2, 1)
    coll = evaluate(aus2_f2, "S(1),S(3),P(*)")
    assert any(ext_dim(1, S2, X) or ext_dim(1, X, S2) for X in coll)


def test_cluster_without_P1_fails_with_witness_P1(aus2_f2):
    indecs = enumerate_indecomposables(aus2_f2, 3)
    rep = is_cluster_tilting(2, evaluate(aus2_f2, "S(1),S(3),P(2),P(3)"), indecs)
    assert not rep.passed
    assert any(c.witness and c.witness.startswith("P(1)") for c in rep.conditions)


def test_cluster_rejects_foreign_indecomposables(aus2, pi3):
    with pytest.raises(ValueError):
        is_cluster_tilting(2, evaluate(aus2, "P(*)"), evaluate(pi3, "S(1)"))


@pytest.mark.parametrize("name", ["aus2", "pi3"])
def test_cluster_pass_implies_precluster_pass(name):
    A = fixture(name, GF(2)).algebra
    indecs = enumerate_indecomposables(A, 4)
    for text in ("S(1),S(3),P(*),I(*)", "P(*),I(*)", "S(1),P(*),I(*)"):
        coll = evaluate(A, text)
        if is_cluster_tilting(2, coll, indecs).passed:
            assert is_precluster_tilting(2, coll).passed


# -- idempotent ideals and the equivalences -----------------------------------

@pytest.mark.parametrize("k", [0, 1, 2, 3])
def test_idempotent_empty(aus2, k):
    assert is_k_idempotent_ideal(aus2, set(), k).passed


def test_idempotent_semisimple():
    A = semisimple(3)
    for e in ({0}, {0, 2}, {0, 1, 2}):
        for k in range(3):
            assert is_k_idempotent_ideal(A, e, k).passed


def test_idempotent_aus2_middle_agrees_with_ext_comparison(aus2):
    rep = is_k_idempotent_ideal(aus2, {1}, 1)
    assert rep.passed and not rep.faults
    assert rep.status("IDEM-agree") == "pass"
    for x in ("S(1)", "S(3)"):
        for y in ("S(1)", "S(3)"):
            assert ext_dim(1, evaluate_one(aus2, x), evaluate_one(aus2, y)) == 0


@pytest.mark.parametrize("name", ["aus2", "pi3", "hnak"])
def test_idempotent_two_tests_never_disagree(name):
    A = fixture(name).algebra
    for v in range(min(A.n, 3)):
        for k in (1, 2):
            assert not is_k_idempotent_ideal(A, {v}, k).faults


def test_apt_empty_e(aus2):
    for M in module_zoo(aus2):
        rep = check_apt_equivalence(aus2, set(), M, 3)
        assert rep.passed


def test_apt_injective_target(pi3):
    for v in range(pi3.n):
        rep = check_apt_equivalence(pi3, {0}, injective(pi3, v), 3)
        assert rep.status("EXT-vanish") == "pass" and rep.passed


def test_apt_aus2_reports_dimensions(aus2):
    rep = check_apt_equivalence(aus2, {1}, simple(aus2, 2), 2)
    assert not rep.faults
    assert "1:" in rep.conditions[0].detail


@pytest.mark.parametrize("name", ["aus2", "pi3", "hnak"])
def test_apt_equivalence_on_zoo(name):
    A = fixture(name).algebra
    for v in range(min(A.n, 4)):
        for M in module_zoo(A)[:8]:
            assert not check_apt_equivalence(A, {v}, M, 2).faults


def test_coresolution_checker(aus2):
    rep = check_coresolution_exactness(aus2, {1}, simple(aus2, 1), 2)
    assert rep.verdict == "skip"
    rep = check_coresolution_exactness(aus2, {1}, injective(aus2, 2), 2)
    assert rep.passed


# -- I_d ----------------------------------------------------------------------

def test_in_I_d_injectives_at_e(pi3):
    for v in range(pi3.n):
        assert in_I_d(pi3, {v}, injective(pi3, v), 2).passed


def test_in_I_d_simple_in_e_degree_one(aus2):
    for v in range(aus2.n):
        S = simple(aus2, v)
        rep = in_I_d(aus2, {v}, S, 1)
        assert rep.passed == F_hom({v}, S).is_zero()
        assert rep.passed


@pytest.mark.parametrize("name", ["aus2", "pi3", "hnak"])
def test_in_I_d_two_sides_agree(name):
    A = fixture(name).algebra
    for v in range(min(A.n, 4)):
        for M in module_zoo(A)[:8]:
            for d in (1, 2, 3):
                assert not in_I_d(A, {v}, M, d).faults


def test_in_I_d_rejects_zero_degree(aus2):
    with pytest.raises(ValueError):
        in_I_d(aus2, {0}, simple(aus2, 0), 0)


# -- technical lemma ----------------------------------------------------------

def test_lemma_injective_module(pi3):
    for v in range(pi3.n):
        rep = check_boundary_lemma(pi3, {0}, injective(pi3, v))
        assert rep.status("LEMMA-literal") == "pass" and rep.status("LEMMA-swapped") == "pass"


def test_lemma_semisimple():
    A = semisimple(2)
    for v in range(2):
        assert check_boundary_lemma(A, {0}, simple(A, v)).passed


def test_lemma_pi3_reports_per_simple(pi3):
    for v in range(pi3.n):
        rep = check_boundary_lemma(pi3, {0}, simple(pi3, v), reading="swapped")
        assert rep.passed
        assert {c.id for c in rep.conditions} >= {"LEMMA-I2", "LEMMA-ext", "LEMMA-literal"}


def test_lemma_hypothesis_is_checked(aus2):
    with pytest.raises(PreconditionError, match="P\\(3\\)"):
        check_boundary_lemma(aus2, {2}, simple(aus2, 0))


# -- reduction theorems ----------------------------------------------------

def test_theorem1_empty_e(pi3):
    coll = evaluate(pi3, "S(1),S(3),P(*)")
    rep = check_theorem1(pi3, set(), coll)
    assert rep.passed and rep.hypotheses == "pass" and rep.conclusion == "pass"


def test_theorem1_semisimple():
    A = semisimple(3)
    rep = check_theorem1(A, {1}, [simple(A, v) for v in range(3)])
    assert rep.passed
    assert "S(1), S(3)" in next(c.detail for c in rep.conditions if c.id == "T1-C")


def test_theorem1_requires_precluster(pi3):
    with pytest.raises(PreconditionError):
        check_theorem1(pi3, {0}, evaluate(pi3, "S(1),S(2),P(*)"))


@pytest.mark.parametrize("name", ["aus2", "pi3"])
def test_theorem1_never_faults(name):
    A = fixture(name).algebra
    coll = precluster_closure(A, start=evaluate(A, "S(1),S(3)"))
    if not is_precluster_tilting(2, coll, algebra=A).passed:
        pytest.skip("closure is not precluster tilting")
    for v in range(A.n):
        assert not check_theorem1(A, {v}, coll).faults


def test_theorem2_empty_e(pi3):
    coll = evaluate(pi3, "S(1),S(3),P(*)")
    rep = check_theorem2(pi3, set(), coll)
    assert rep.status("T2-iii") == "pass" and rep.status("T2-iv") == "pass"
    assert rep.conclusion == "pass"


def test_theorem2_reports_other_readings(pi3):
    rep = check_theorem2(pi3, {0}, precluster_closure(pi3.quotient({0})))
    ids = {c.id for c in rep.conditions}
    assert {"T2-iii[forall,difference]", "T2-iii[exists,e-vertices]", "T2-iv[e-vertices]"} <= ids
    assert not rep.faults


def test_theorem2_bad_flags(pi3):
    with pytest.raises(ValueError):
        check_theorem2(pi3, set(), evaluate(pi3, "P(*)"), quantifier="some")


def test_theorem_d_warning(pi3):
    rep = check_theorem1(pi3, set(), evaluate(pi3, "S(1),S(3),P(*)"), d=3) if is_precluster_tilting(
        3, evaluate(pi3, "S(1),S(3),P(*)")).passed else None
    if rep is not None:
        assert rep.notes


def test_jk_empty_e(aus2_f2):
    rep = check_jk_criterion(aus2_f2, 2, set(), evaluate(aus2_f2, "S(1),S(3),P(*)"), dim_bound=3)
    assert rep.passed and rep.hypotheses == "pass"


def test_jk_aus2_middle(aus2_f2):
    rep = check_jk_criterion(aus2_f2, 2, {1}, evaluate(aus2_f2, "S(1),S(3),P(*)"), dim_bound=3)
    assert rep.hypotheses == "pass" and rep.conclusion == "pass", rep.to_text()
    assert rep.status("JK-concl-cluster") == "pass"


def test_jk_semisimple():
    A = semisimple(2, "F 2")
    assert check_jk_criterion(A, 2, {0}, [simple(A, v) for v in range(2)], dim_bound=2).passed


def test_jk_over_rationals_falls_back(aus2):
    rep = check_jk_criterion(aus2, 2, {1}, evaluate(aus2, "S(1),S(3),P(*)"))
    assert rep.status("JK-concl-cluster") == "skip" and rep.passed


@pytest.mark.parametrize("name", ["aus2", "pi3", "hnak"])
def test_iyama_duality_on_fixtures(name):
    A = fixture(name).algebra
    rep = check_iyama_duality(2, module_zoo(A)[:10], algebra=A)
    assert rep.passed, rep.to_text()


# -- structure ----------------------------------------------------------------

def test_reports_are_deterministic(pi3):
    coll = evaluate(pi3, "S(1),S(2),P(*)")
    a = is_precluster_tilting(2, coll, seed=3).to_json()
    b = is_precluster_tilting(2, evaluate(pi3, "S(1),S(2),P(*)"), seed=3).to_json()
    assert a == b


def test_fail_verdicts_carry_witnesses(aus2, pi3):
    reports = [
        is_precluster_tilting(2, evaluate(pi3, "S(1),S(2),P(*)")),
        is_precluster_tilting(2, evaluate(aus2, "S(2),P(*)")),
        in_I_d(aus2, {0}, simple(aus2, 1), 2),
    ]
    for rep in reports:
        if rep.verdict == "fail":
            assert any(c.status == "fail" and c.witness for c in rep.conditions)


def test_missing_summand_witness_rechecks(aus2):
    rep = is_precluster_tilting(2, evaluate(aus2, "S(2),P(*),I(*)"))
    coll = evaluate(aus2, "S(2),P(*),I(*)")
    for c in rep.conditions:
        if c.status == "fail" and "outside add(C)" in (c.witness or ""):
            name = re.search(r"summand (\S+) outside", c.witness).group(1).split("=")[0]
            assert not add_membership(evaluate_one(aus2, name), coll)
    _ext_witnesses(aus2, rep)
