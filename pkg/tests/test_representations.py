import pytest
from hypothesis import given

from quiverext.checkers import enumerate_indecomposables
from quiverext.homology import syzygy
from quiverext.linalg import GF, rank
from quiverext.representations import (
    ModuleCollection,
    F_hom,
    add_membership,
    cokernel,
    decompose,
    direct_sum,
    dualize,
    hom_dim,
    hom_space,
    inflate,
    injective,
    is_indecomposable,
    is_injective,
    is_isomorphic,
    is_projective,
    kernel,
    projective,
    restrict,
    simple,
    tensor_quotient,
    zero_module,
)

from strategies import algebra_and_modules, module_zoo


def test_aus2_projectives_and_injectives(aus2):
    assert [projective(aus2, v).dims for v in range(3)] == [(1, 1, 0), (0, 1, 1), (0, 0, 1)]
    assert [injective(aus2, v).dims for v in range(3)] == [(1, 0, 0), (1, 1, 0), (0, 1, 1)]
    assert is_isomorphic(injective(aus2, 1), projective(aus2, 0))
    assert is_isomorphic(projective(aus2, 2), simple(aus2, 2))


def test_aus2_hom_dims(aus2):
    P1, P2 = projective(aus2, 0), projective(aus2, 1)
    assert hom_dim(P1, P2) == 0
    assert hom_dim(P2, P1) == 1


@given(algebra_and_modules(count=1))
def test_hom_from_projective_and_into_injective(data):
    A, M = data
    for v in range(A.n):
        assert hom_dim(projective(A, v), M) == M.dims[v]
        assert hom_dim(M, injective(A, v)) == M.dims[v]


@given(algebra_and_modules(count=2))
def test_hom_basis_elements_are_module_maps(data):
    A, M, N = data
    maps = hom_space(M, N)
    assert all(f.commutes() for f in maps)
    if maps:
        flat = [[x for m in f.mats for row in m.rows for x in row] for f in maps]
        from quiverext.linalg import Mat

        assert rank(Mat(A.field, len(flat), len(flat[0]), flat)) == len(maps)


@given(algebra_and_modules(count=2))
def test_decompose_sum_recovers_summands(data):
    A, M, N = data
    parts = decompose(direct_sum([M, N]))
    expected = decompose(M) + decompose(N)
    assert len(parts) == len(expected)
    assert sorted(p.dims for p in parts) == sorted(p.dims for p in expected)
    assert all(is_indecomposable(p) for p in parts)


@given(algebra_and_modules(count=1))
def test_double_dual_is_isomorphic(data):
    A, M = data
    DD = dualize(dualize(M))
    assert DD.algebra is A
    assert is_isomorphic(DD, M)


@given(algebra_and_modules(count=2))
def test_kernel_cokernel_rank_nullity(data):
    A, M, N = data
    for f in hom_space(M, N)[:2]:
        K, _ = kernel(f)
        C, _ = cokernel(f)
        for v in range(A.n):
            r = rank(f.mats[v])
            assert K.dims[v] == M.dims[v] - r
            assert C.dims[v] == N.dims[v] - r


def test_projective_and_injective_tests(pi3, aus2):
    for v in range(3):
        assert is_projective(projective(pi3, v)) and is_injective(projective(pi3, v))
    assert not is_projective(simple(aus2, 0))
    assert is_projective(simple(aus2, 2))
    assert not is_injective(simple(aus2, 2))
    assert is_projective(zero_module(aus2)) and is_injective(zero_module(aus2))


def test_idempotent_functors_on_aus2(aus2):
    e = aus2.vertex_set(["2"])
    assert F_hom(e, projective(aus2, 1)).dims == (0, 0, 1)
    assert F_hom(e, simple(aus2, 0)).dims == (1, 0, 0)
    assert tensor_quotient(e, projective(aus2, 0)).dims == (1, 0, 0)
    assert tensor_quotient(e, projective(aus2, 1)).is_zero()


@given(algebra_and_modules(count=1))
def test_idempotent_functors_land_in_quotient(data):
    A, M = data
    e = frozenset([0])
    B = A.quotient(e)
    for X in (F_hom(e, M), tensor_quotient(e, M)):
        assert X.dims[0] == 0
        if B.n:
            Y = restrict(X, B)
            assert inflate(Y, A).dims == X.dims


def test_restrict_rejects_modules_living_at_e(aus2):
    B = aus2.quotient(aus2.vertex_set(["2"]))
    with pytest.raises(Exception):
        restrict(projective(aus2, 0), B)


def test_collection_dedupes_and_add_membership(aus2):
    C = ModuleCollection.from_modules(aus2, [projective(aus2, v) for v in range(3)] + [simple(aus2, 2), injective(aus2, 1)])
    assert len(C) == 3
    assert add_membership(direct_sum([projective(aus2, 0), simple(aus2, 2)]), C)
    assert not add_membership(simple(aus2, 1), C)


def test_enumeration_counts():
    from quiverext.constructions import fixture

    A = fixture("aus2", GF(2)).algebra
    assert len(enumerate_indecomposables(A, 3)) == 5
    assert len(enumerate_indecomposables(A, 0)) == 0


def test_enumeration_semisimple():
    from quiverext import Quiver, build_algebra

    A = build_algebra(Quiver(["1", "2"], []), [], GF(2))
    found = enumerate_indecomposables(A, 2)
    assert sorted(M.dims for M in found) == [(0, 1), (1, 0)]


def test_enumeration_needs_finite_field(aus2):
    with pytest.raises(Exception):
        enumerate_indecomposables(aus2, 2)


def test_syzygy_zoo_is_consistent(aus2):
    zoo = module_zoo(aus2)
    assert all(M.satisfies_relations() for M in zoo)
    assert syzygy(simple(aus2, 0)).dims == (0, 1, 0)
