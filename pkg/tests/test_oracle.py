import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from assocloc.algebra import quotient_algebra
from assocloc.constructions import direct_product, poly_quotient, truncated_poly
from assocloc.errors import NotCommutative
from assocloc.linalg import PrimeField
from assocloc.oracle import (is_local_exhaustive, localize_at_max, maximal_ideals, oracle_compare,
                             representability_probe)
from conftest import algebra, commutative_names, corpus_simples

COMMUTATIVE = commutative_names()


def nilpotents(A):
    return [v for v in A.field.vectors(A.dim) if not A.power(v, A.dim).any()]


def idempotents(A):
    return [v for v in A.field.vectors(A.dim) if np.array_equal(A.mul(v, v), v)]


def test_commutative_corpus_covers_cases():
    assert {"f2x2", "f2x3", "f3x3", "f2xf2", "f2c2", "f3c3", "f4", "f9"} <= set(COMMUTATIVE)
    assert "m2f2" not in COMMUTATIVE


@pytest.mark.parametrize("name", COMMUTATIVE)
def test_decomposition(name):
    A = algebra(name)
    mds = maximal_ideals(A)
    # enumeration oracle: a commutative Artinian ring with r local factors has 2^r idempotents
    assert len(idempotents(A)) == 2 ** len(mds)
    es = [md.primitive_idempotent for md in mds]
    assert np.array_equal(sum(es) % A.p, A.unit)
    assert sum(localize_at_max(A, md).dim for md in mds) == A.dim
    # the nilradical is the product of the local nilradicals
    nil = sum(localize_at_max(A, md).maximal.dim for md in mds)
    assert A.p ** nil == len(nilpotents(A))


@pytest.mark.parametrize("name", COMMUTATIVE)
def test_local_factors_are_local(name):
    A = algebra(name)
    for md in maximal_ideals(A):
        loc = localize_at_max(A, md)
        assert is_local_exhaustive(loc.algebra, loc.maximal)
        assert quotient_algebra(loc.algebra, loc.maximal).algebra.dim == md.residue_dim


@pytest.mark.parametrize("name", COMMUTATIVE)
def test_oracle_iso_iff_reduced(name):
    A = algebra(name)
    mds = maximal_ideals(A)
    for M in corpus_simples(name):
        o = oracle_compare(A, M, mds=mds)
        assert o.isomorphic == (o.nilradical_dim == 0)
        if o.isomorphic:
            assert o.witness is not None and o.ring.dim == o.local.dim
        else:
            assert o.kernel_not_contained
            assert o.ring.dim == M.dim and o.local.dim > o.ring.dim


@pytest.mark.parametrize("name,dims", [("f2x2", (1, 2)), ("f3x2", (1, 2)), ("f5x2", (1, 2)),
                                       ("f2x3", (1, 3)), ("f3x3", (1, 3))])
def test_documented_mismatch(name, dims):
    A = algebra(name)
    (M,) = corpus_simples(name)
    o = oracle_compare(A, M)
    assert not o.isomorphic and o.dims == dims


@pytest.mark.parametrize("name", COMMUTATIVE)
def test_representability(name):
    A = algebra(name)
    for md in maximal_ideals(A):
        loc = localize_at_max(A, md)
        res = quotient_algebra(A, md.ideal)
        probes = representability_probe(A, md, [(loc.algebra, loc.canonical),
                                                 (res.algebra, res.projection)])
        assert all(r.commutes and r.local and r.unique for r in probes)
        assert np.array_equal(probes[0].xi, np.eye(loc.dim))


def test_not_commutative(m2f2):
    with pytest.raises(NotCommutative):
        maximal_ideals(m2f2)


@settings(max_examples=30, deadline=None)
@given(st.sampled_from([2, 3, 5]), st.lists(st.integers(1, 3), min_size=1, max_size=3))
def test_products_of_truncated_polys(p, ks):
    """prod_i F_p[x]/(x^k_i) has one local factor per i, of dim k_i."""
    F = PrimeField(p)
    A = truncated_poly(F, ks[0])
    for k in ks[1:]:
        A = direct_product(A, truncated_poly(F, k))
    mds = maximal_ideals(A)
    assert sorted(localize_at_max(A, md).dim for md in mds) == sorted(ks)


@settings(max_examples=20, deadline=None)
@given(st.sampled_from([2, 3]), st.lists(st.integers(0, 2), min_size=1, max_size=3))
def test_poly_quotients_split_by_factorization(p, coeffs):
    """F_p[x]/(f): local factor dims are deg(g) * e for g^e || f."""
    from assocloc.linalg import poly_factor
    f = [c % p for c in coeffs] + [1]
    A = poly_quotient(PrimeField(p), f)
    mds = maximal_ideals(A)
    expected = sorted((len(g) - 1) * e for g, e in poly_factor(f, p))
    assert sorted(localize_at_max(A, md).dim for md in mds) == expected
