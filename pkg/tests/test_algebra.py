import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from assocloc.algebra import (IdealBasis, check_homomorphism, element_inverse, ideal_power_chain,
                              ideal_product, ideal_sum, is_commutative, is_unit_element,
                              kernel_ideal, quotient_algebra, validate_algebra)
from assocloc.constructions import (cyclic_group_algebra, direct_product, dual_numbers_over,
                                    matrix_algebra, poly_quotient, truncated_poly,
                                    upper_triangular)
from assocloc.errors import BadUnit, NonAssociative, NotAnIdeal, UnitInIdeal
from assocloc.linalg import PrimeField
from conftest import ALGEBRA_NAMES, algebra
from strategies import matrix_algebras

F2, F3 = PrimeField(2), PrimeField(3)

EXPECTED_DIMS = {
    "f2": 1, "f5": 1, "m2f2": 4, "m2f3": 4, "m3f2": 9, "ut2f2": 3, "ut2f3": 3, "ut3f2": 6,
    "f4": 2, "f9": 2, "f2x2": 2, "f3x2": 2, "f5x2": 2, "f2x3": 3, "f3x3": 3, "f2xf2": 2,
    "f3xf3": 2, "f3_x2m1": 2, "f2c2": 2, "f2c3": 3, "f3c3": 3, "m2f2xf2": 5,
}


def test_corpus_is_complete():
    assert set(ALGEBRA_NAMES) == set(EXPECTED_DIMS)
    assert {algebra(n).p for n in ALGEBRA_NAMES} == {2, 3, 5}


@pytest.mark.parametrize("name", ALGEBRA_NAMES)
def test_corpus_axioms_on_elements(name):
    """Associativity and the unit checked on random elements, not basis triples."""
    A = algebra(name)
    rng = np.random.default_rng(7)
    for _ in range(20):
        x, y, z = rng.integers(0, A.p, size=(3, A.dim))
        assert np.array_equal(A.mul(A.mul(x, y), z), A.mul(x, A.mul(y, z)))
        assert np.array_equal(A.mul(A.unit, x), x % A.p)
        assert np.array_equal(A.mul(x, A.unit), x % A.p)
    assert A.dim == EXPECTED_DIMS[name]


def test_non_associative_rejected():
    c = np.zeros((2, 2, 2), dtype=np.int64)
    c[0, 0, 0] = c[0, 1, 1] = c[1, 0, 1] = 1
    c[1, 1] = [1, 1]       # fine: commutative 2-dim with unit is associative
    validate_algebra(F2, c, [1, 0])
    c3 = np.zeros((3, 3, 3), dtype=np.int64)
    for i in range(3):
        c3[0, i, i] = c3[i, 0, i] = 1
    c3[1, 1, 2] = c3[2, 2, 1] = 1
    c3[1, 2, 0] = 1
    with pytest.raises(NonAssociative) as e:
        validate_algebra(F2, c3, [1, 0, 0])
    assert (1, 1, 1, 0) in e.value.violations


def test_bad_unit_rejected():
    A = matrix_algebra(F2, 2)
    with pytest.raises(BadUnit):
        validate_algebra(F2, A.constants, [1, 0, 0, 0])


def test_constructions_dims_and_commutativity():
    assert matrix_algebra(F3, 2).dim == 4
    assert upper_triangular(F2, 3).dim == 6
    assert not is_commutative(upper_triangular(F2, 2))
    assert is_commutative(cyclic_group_algebra(F3, 3))
    assert direct_product(truncated_poly(F2, 2), matrix_algebra(F2, 2)).dim == 6
    D = dual_numbers_over(matrix_algebra(F2, 2))
    assert D.dim == 8 and not is_commutative(D)


def test_field_extensions_have_inverses():
    for A in (poly_quotient(F2, [1, 1, 1]), poly_quotient(F3, [1, 0, 1])):
        for v in A.field.vectors(A.dim):
            if v.any():
                assert is_unit_element(A, v)
                assert np.array_equal(A.mul(v, element_inverse(A, v)), A.unit)


def test_units_in_matrix_ring():
    A = matrix_algebra(F2, 2)
    units = sum(is_unit_element(A, v) for v in A.field.vectors(4))
    assert units == 6   # |GL_2(F_2)|


class TestIdeals:
    def test_span_must_be_closed(self):
        A = truncated_poly(F2, 3)
        with pytest.raises(NotAnIdeal):
            IdealBasis.span(A, [[0, 1, 0]])
        assert IdealBasis.generated(A, [[0, 1, 0]]).dim == 2

    def test_power_chain_truncated_poly(self):
        A = truncated_poly(F3, 4)
        m = IdealBasis.generated(A, [[0, 1, 0, 0]])
        chain, N = ideal_power_chain(A, m)
        assert [I.dim for I in chain] == [3, 2, 1, 0] and N == 4

    def test_idempotent_ideal_stabilizes_at_once(self):
        A = matrix_algebra(F2, 2)
        chain, N = ideal_power_chain(A, IdealBasis.span(A, np.eye(4, dtype=np.int64)))
        assert N == 1

    def test_product_and_sum(self):
        A = upper_triangular(F2, 3)
        J = IdealBasis.generated(A, [A.basis_vector(A.basis_names.index("e12")),
                                     A.basis_vector(A.basis_names.index("e23"))])
        assert J.dim == 3
        assert ideal_product(J, J).dim == 1
        assert ideal_sum(J, ideal_product(J, J)) == J

    def test_quotient_by_unit_ideal(self):
        A = matrix_algebra(F2, 2)
        with pytest.raises(UnitInIdeal):
            quotient_algebra(A, IdealBasis.span(A, np.eye(4, dtype=np.int64)))


@settings(max_examples=30, deadline=None)
@given(matrix_algebras(), st.data())
def test_quotient_is_surjective_hom(AM, data):
    A, _ = AM
    v = np.array(data.draw(st.lists(st.integers(0, A.p - 1), min_size=A.dim, max_size=A.dim)))
    I = IdealBasis.generated(A, [v])
    if I.contains(A.unit):
        return
    Q = quotient_algebra(A, I)
    assert check_homomorphism(A, Q.algebra, Q.projection) is None
    assert Q.algebra.dim == A.dim - I.dim
    assert kernel_ideal(A, Q.projection) == I
    # the section is a right inverse of the projection
    assert np.array_equal(Q.section @ Q.projection % A.p, np.eye(Q.algebra.dim, dtype=np.int64))
