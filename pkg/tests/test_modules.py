import itertools

import numpy as np
import pytest
from hypothesis import given, settings

from assocloc.constructions import matrix_algebra, truncated_poly, upper_triangular
from assocloc.errors import RelationViolated, UnitNotIdentity, ZeroModule
from assocloc.linalg import PrimeField, rank
from assocloc.modules import (ModuleRep, annihilator, chop, classify_factors, direct_sum,
                              intertwiner_space, is_simple, modules_isomorphic,
                              quotient_module, radical, regular_representation, relation_violations,
                              spin, structure_morphism, submodule, validate_module)
from conftest import ALGEBRA_NAMES, algebra, corpus_simples
from oracles import set_closure, simple_by_enumeration
from strategies import matrix_algebras

F2, F3 = PrimeField(2), PrimeField(3)
ORACLE_LIMIT = 1 << 12


def oracle_modules():
    """Corpus modules small enough for the set-based oracle."""
    for name in ALGEBRA_NAMES:
        A = algebra(name)
        S = corpus_simples(name)
        cands = [regular_representation(A)] + list(S) + list(chop(regular_representation(A)).factors)
        cands += [direct_sum([a, b]) for a, b in itertools.combinations_with_replacement(S, 2)]
        for M in cands:
            if A.p ** M.dim <= ORACLE_LIMIT:
                yield name, M


@pytest.mark.parametrize("name,M", list(oracle_modules()), ids=lambda x: getattr(x, "name", x))
def test_meataxe_agrees_with_enumeration(name, M):
    res = is_simple(M)
    assert res.simple == simple_by_enumeration(M)
    if not res.simple:
        W = res.witness
        assert 0 < W.dim < M.dim
        assert all(W.contains(b @ g % M.field.p) for b in W.basis for g in M.action)


@settings(max_examples=40, deadline=None)
@given(matrix_algebras())
def test_meataxe_on_random_matrix_algebras(AM):
    A, M = AM
    assert is_simple(M).simple == simple_by_enumeration(M)


@settings(max_examples=25, deadline=None)
@given(matrix_algebras())
def test_chop_factors_are_simple_and_sum(AM):
    A, M = AM
    series = chop(M, seed=3)
    assert sum(F.dim for F in series.factors) == M.dim
    assert all(simple_by_enumeration(F) for F in series.factors)


class TestKnownModules:
    def test_natural_module_is_simple(self, m2f2, m2f2_nat):
        assert is_simple(m2f2_nat).simple
        assert not is_simple(regular_representation(m2f2)).simple

    def test_zero_module(self):
        A = matrix_algebra(F2, 2)
        with pytest.raises(ZeroModule):
            is_simple(ModuleRep(A, np.zeros((4, 0, 0), dtype=np.int64)))

    def test_validation_errors(self):
        A = truncated_poly(F2, 2)
        with pytest.raises(RelationViolated):
            validate_module(A, [np.eye(1, dtype=np.int64), np.eye(1, dtype=np.int64)])
        with pytest.raises(UnitNotIdentity):
            validate_module(A, [np.zeros((1, 1), dtype=np.int64)] * 2)

    @pytest.mark.parametrize("name,count,dims,rad", [
        ("m2f2", 1, [2], 0), ("m3f2", 1, [3], 0), ("ut2f2", 2, [1, 1], 1),
        ("ut3f2", 3, [1, 1, 1], 3), ("f4", 1, [2], 0), ("f9", 1, [2], 0),
        ("f2x3", 1, [1], 2), ("f3c3", 1, [1], 2), ("f2c3", 2, [1, 2], 0),
        ("m2f2xf2", 2, [1, 2], 0), ("f3_x2m1", 2, [1, 1], 0),
    ])
    def test_simples_and_radical(self, name, count, dims, rad):
        S = corpus_simples(name)
        assert len(S) == count
        assert sorted(M.dim for M in S) == dims
        assert radical(algebra(name), S).dim == rad

    def test_regular_multiplicities_match_dims(self):
        # over a split algebra each simple S occurs dim S times in the regular module
        for name in ("m2f2", "m3f2", "ut3f2", "m2f3"):
            A = algebra(name)
            S = corpus_simples(name)
            series = classify_factors(chop(regular_representation(A)), S)
            J = radical(A, S)
            if J.dim == 0:
                assert series.multiplicities() == {k: M.dim for k, M in enumerate(S)}
            assert sum(S[k].dim * c for k, c in series.multiplicities().items()) == A.dim


@pytest.mark.parametrize("name", ALGEBRA_NAMES)
def test_chop_multiset_seed_invariant(name):
    A = algebra(name)
    S = corpus_simples(name)
    R = regular_representation(A)
    ref = classify_factors(chop(R, seed=0), S).multiplicities()
    for seed in range(1, 10):
        assert classify_factors(chop(R, seed=seed), S).multiplicities() == ref


@pytest.mark.parametrize("name", ALGEBRA_NAMES)
def test_simples_pairwise_nonisomorphic(name):
    S = corpus_simples(name)
    for a, b in itertools.combinations(S, 2):
        assert modules_isomorphic(a, b) is None
    for M in S:
        F = modules_isomorphic(M, M)
        assert F is not None and rank(F, M.field) == M.dim


def test_isomorphism_under_change_of_basis(m2f2, m2f2_nat):
    P = np.array([[1, 1], [0, 1]])
    Pinv = P  # P^2 = I over F_2
    N = validate_module(m2f2, [Pinv @ r @ P % 2 for r in m2f2_nat.action], "twisted")
    F = modules_isomorphic(m2f2_nat, N)
    assert F is not None
    for a, b in zip(m2f2_nat.action, N.action):
        assert np.array_equal(a @ F % 2, F @ b % 2)


def test_intertwiners_by_enumeration():
    A = upper_triangular(F2, 2)
    R = regular_representation(A)
    H = intertwiner_space(R, R)
    n = R.dim
    count = sum(1 for f in F2.vectors(n * n)
                if all(np.array_equal(r @ f.reshape(n, n) % 2, f.reshape(n, n) @ r % 2) for r in R.action))
    assert 2 ** H.dim == count
    assert H.dim == A.dim   # End_A(A_A) = A


@settings(max_examples=30, deadline=None)
@given(matrix_algebras())
def test_sub_and_quotient_are_modules(AM):
    A, M = AM
    res = is_simple(M)
    if res.simple:
        return
    S = res.witness
    for N in (submodule(M, S), quotient_module(M, S)):
        assert relation_violations(A, N.action) == []
        assert np.array_equal(N.rho(A.unit), np.eye(N.dim, dtype=np.int64))


@settings(max_examples=30, deadline=None)
@given(matrix_algebras())
def test_structure_morphism_rank_nullity(AM):
    A, M = AM
    eta = structure_morphism(M)
    assert eta.image.dim + eta.kernel.dim == A.dim
    assert annihilator(A, M) == eta.kernel
    # a generated matrix algebra acts faithfully on its natural module
    assert eta.kernel.dim == 0


def test_spin_matches_set_closure(m2f2):
    R = regular_representation(m2f2)
    for v in F2.vectors(4):
        if v.any():
            assert 2 ** spin(R, v).dim == len(set_closure(R, v))
