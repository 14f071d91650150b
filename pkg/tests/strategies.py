"""Hypothesis strategies for fields, matrices and small algebras with modules."""

import numpy as np
from hypothesis import strategies as st

from assocloc.constructions import generated_matrix_algebra
from assocloc.linalg import PrimeField
from assocloc.modules import validate_module

primes = st.sampled_from([2, 3, 5, 7])
small_primes = st.sampled_from([2, 3])


@st.composite
def fields(draw, prime_strategy=primes):
    return PrimeField(draw(prime_strategy))


@st.composite
def matrices(draw, field, rows, cols=None):
    cols = rows if cols is None else cols
    flat = draw(st.lists(st.integers(0, field.p - 1), min_size=rows * cols, max_size=rows * cols))
    return np.array(flat, dtype=np.int64).reshape(rows, cols)


@st.composite
def field_and_matrix(draw, max_dim=5, prime_strategy=primes):
    field = draw(fields(prime_strategy))
    r = draw(st.integers(1, max_dim))
    c = draw(st.integers(1, max_dim))
    return field, draw(matrices(field, r, c))


@st.composite
def field_and_square(draw, max_dim=5, prime_strategy=primes):
    field = draw(fields(prime_strategy))
    n = draw(st.integers(1, max_dim))
    return field, draw(matrices(field, n))


@st.composite
def matrix_algebras(draw, max_size=3, max_gens=2):
    """The algebra generated by a few random k x k matrices, with its natural
    module F_p^k (k <= max_size, p in {2, 3})."""
    field = draw(fields(small_primes))
    k = draw(st.integers(1, max_size))
    gens = [draw(matrices(field, k)) for _ in range(draw(st.integers(0, max_gens)))]
    A, basis_mats = generated_matrix_algebra(field, gens, k, "R")
    M = validate_module(A, np.array(basis_mats), "V")
    return A, M
