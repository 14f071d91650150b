"""Standard algebras by structure constants: matrix rings, triangular rings,
polynomial quotients, cyclic group algebras, products."""

from __future__ import annotations

import numpy as np

from .algebra import AlgebraPresentation, validate_algebra
from .linalg import EchelonBasis, PrimeField, solve_left


def matrix_units(k: int, upper_only: bool = False) -> list[tuple[int, int]]:
    return [(a, b) for a in range(k) for b in range(k) if not upper_only or a <= b]


def _from_unit_pairs(field, k, pairs, name):
    index = {pr: i for i, pr in enumerate(pairs)}
    n = len(pairs)
    c = np.zeros((n, n, n), dtype=np.int64)
    for i, (a, b) in enumerate(pairs):
        for j, (cc, d) in enumerate(pairs):
            if b == cc:
                c[i, j, index[(a, d)]] = 1
    unit = np.zeros(n, dtype=np.int64)
    for a in range(k):
        unit[index[(a, a)]] = 1
    names = [f"e{a + 1}{b + 1}" for a, b in pairs]
    return validate_algebra(field, c, unit, names, name)


def matrix_algebra(field: PrimeField, k: int, name: str | None = None) -> AlgebraPresentation:
    """M_k(F_p) on matrix units: e_ab e_cd = delta_bc e_ad."""
    return _from_unit_pairs(field, k, matrix_units(k), name or f"M{k}(F{field.p})")


def upper_triangular(field: PrimeField, k: int, name: str | None = None) -> AlgebraPresentation:
    return _from_unit_pairs(field, k, matrix_units(k, upper_only=True),
                            name or f"UT{k}(F{field.p})")


def poly_quotient(field: PrimeField, modulus: list[int], name: str | None = None) -> AlgebraPresentation:
    """F_p[x]/(f) on the monomial basis 1, x, ..., x^(d-1); f monic, lowest degree first."""
    p = field.p
    f = [c % p for c in modulus]
    d = len(f) - 1
    if d < 1 or f[-1] != 1:
        raise ValueError("modulus must be monic of degree >= 1")
    # reduce x^k for k < 2d
    powers = [np.eye(d, dtype=np.int64)[k] for k in range(d)]
    for k in range(d, 2 * d - 1):
        prev = powers[-1]
        shifted = np.concatenate([[0], prev[:-1]])
        top = prev[-1]
        powers.append((shifted - top * np.array(f[:d])) % p)
    c = np.zeros((d, d, d), dtype=np.int64)
    for i in range(d):
        for j in range(d):
            c[i, j] = powers[i + j]
    names = ["1"] + [f"x^{k}" if k > 1 else "x" for k in range(1, d)]
    return validate_algebra(field, c, np.eye(d, dtype=np.int64)[0], names, name or f"F{p}[x]/({f})")


def truncated_poly(field: PrimeField, k: int, name: str | None = None) -> AlgebraPresentation:
    """F_p[x]/(x^k)."""
    return poly_quotient(field, [0] * k + [1], name or f"F{field.p}[x]/(x^{k})")


def cyclic_group_algebra(field: PrimeField, n: int, name: str | None = None) -> AlgebraPresentation:
    c = np.zeros((n, n, n), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            c[i, j, (i + j) % n] = 1
    names = ["1"] + [f"g^{k}" if k > 1 else "g" for k in range(1, n)]
    return validate_algebra(field, c, np.eye(n, dtype=np.int64)[0], names, name or f"F{field.p}[C{n}]")


def direct_product(A: AlgebraPresentation, B: AlgebraPresentation, name: str | None = None) -> AlgebraPresentation:
    if A.field != B.field:
        raise ValueError("factors over different fields")
    n, m = A.dim, B.dim
    c = np.zeros((n + m,) * 3, dtype=np.int64)
    c[:n, :n, :n] = A.constants
    c[n:, n:, n:] = B.constants
    unit = np.concatenate([A.unit, B.unit])
    names = [f"{s}'" for s in A.basis_names] + [f"{s}''" for s in B.basis_names]
    return validate_algebra(A.field, c, unit, names, name or f"{A.name}x{B.name}")


def dual_numbers_over(A: AlgebraPresentation, name: str | None = None) -> AlgebraPresentation:
    """A[t]/(t^2) on the basis (e_i, t e_i)."""
    n = A.dim
    c = np.zeros((2 * n,) * 3, dtype=np.int64)
    c[:n, :n, :n] = A.constants
    c[:n, n:, n:] = A.constants
    c[n:, :n, n:] = A.constants
    unit = np.concatenate([A.unit, np.zeros(n, dtype=np.int64)])
    names = list(A.basis_names) + [f"t{s}" for s in A.basis_names]
    return validate_algebra(A.field, c, unit, names, name or f"{A.name}[t]/(t^2)")


def matrix_span_algebra(field: PrimeField, mats, name: str = "B") -> AlgebraPresentation:
    """The algebra on a given list of linearly independent matrices whose span
    is closed under multiplication and contains the identity."""
    mats = [np.asarray(m, dtype=np.int64) % field.p for m in mats]
    k = mats[0].shape[0]
    flat = np.array([m.reshape(-1) for m in mats])
    n = len(mats)
    c = np.zeros((n, n, n), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            x = solve_left(flat, (mats[i] @ mats[j] % field.p).reshape(-1), field)
            if x is None:
                raise ValueError("span is not closed under multiplication")
            c[i, j] = x
    unit = solve_left(flat, np.eye(k, dtype=np.int64).reshape(-1), field)
    if unit is None:
        raise ValueError("span does not contain the identity")
    return validate_algebra(field, c, unit, (), name)


def generated_matrix_basis(field: PrimeField, gens, k: int) -> list[np.ndarray]:
    """A basis of the unital subalgebra of M_k(F_p) generated by `gens`,
    starting with the identity."""
    gens = [np.asarray(g, dtype=np.int64) % field.p for g in gens]
    ech = EchelonBasis(k * k, field)
    basis = []
    for m in [np.eye(k, dtype=np.int64)] + gens:
        if ech.add(m.reshape(-1)):
            basis.append(m)
    grew = True
    while grew:
        grew = False
        for x in list(basis):
            for y in gens:
                z = x @ y % field.p
                if ech.add(z.reshape(-1)):
                    basis.append(z)
                    grew = True
    return basis


def generated_matrix_algebra(field: PrimeField, gens, k: int | None = None,
                             name: str = "B") -> tuple[AlgebraPresentation, list[np.ndarray]]:
    """Unital subalgebra of M_k(F_p) generated by the given matrices, with the
    matrices of its basis (so F_p^k is a module via rho(e_i) = basis[i])."""
    k = np.asarray(gens[0]).shape[0] if k is None else k
    basis = generated_matrix_basis(field, gens, k)
    return matrix_span_algebra(field, basis, name), basis
