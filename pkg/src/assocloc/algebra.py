"""Finite-dimensional associative F_p-algebras given by structure constants."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import BadUnit, NonAssociative, NotAnIdeal, ShapeError, UnitInIdeal
from .linalg import PrimeField, Subspace, left_nullspace, rank


@dataclass(frozen=True, eq=False)
class AlgebraPresentation:
    """e_i * e_j = sum_k constants[i, j, k] e_k, with a chosen unit vector.

    Build instances through :func:`validate_algebra`; the constructor itself
    only normalizes shapes.
    """

    field: PrimeField
    constants: np.ndarray
    unit: np.ndarray
    basis_names: tuple = ()
    name: str = "A"

    def __post_init__(self):
        c = np.asarray(self.constants, dtype=np.int64) % self.field.p
        n = c.shape[0]
        if c.shape != (n, n, n):
            raise ShapeError(f"structure constants must be n x n x n, got {c.shape}")
        u = np.asarray(self.unit, dtype=np.int64).reshape(-1) % self.field.p
        if u.shape != (n,):
            raise ShapeError("unit has the wrong length")
        object.__setattr__(self, "constants", c)
        object.__setattr__(self, "unit", u)
        names = tuple(self.basis_names) or tuple(f"e{i}" for i in range(n))
        if len(names) != n:
            raise ShapeError("basis_names has the wrong length")
        object.__setattr__(self, "basis_names", names)

    @property
    def dim(self) -> int:
        return self.constants.shape[0]

    @property
    def p(self) -> int:
        return self.field.p

    def basis_vector(self, i: int) -> np.ndarray:
        v = np.zeros(self.dim, dtype=np.int64)
        v[i] = 1
        return v

    def mul(self, x, y) -> np.ndarray:
        x = np.asarray(x, dtype=np.int64)
        y = np.asarray(y, dtype=np.int64)
        return np.einsum("i,j,ijk->k", x, y, self.constants) % self.p

    def left_mult(self, x) -> np.ndarray:
        """Matrix of y -> x*y (row-vector convention)."""
        return np.einsum("i,ijk->jk", np.asarray(x, dtype=np.int64), self.constants) % self.p

    def right_mult(self, x) -> np.ndarray:
        """Matrix of y -> y*x (row-vector convention)."""
        return np.einsum("j,ijk->ik", np.asarray(x, dtype=np.int64), self.constants) % self.p

    def power(self, x, k: int) -> np.ndarray:
        out = self.unit.copy()
        for _ in range(k):
            out = self.mul(out, x)
        return out

    def __repr__(self):
        return f"AlgebraPresentation({self.name!r}, p={self.p}, dim={self.dim})"


def associativity_violations(field: PrimeField, constants) -> list[tuple[int, int, int, int]]:
    c = np.asarray(constants, dtype=np.int64)
    left = np.einsum("ijm,mkl->ijkl", c, c) % field.p    # (e_i e_j) e_k
    right = np.einsum("jkm,iml->ijkl", c, c) % field.p   # e_i (e_j e_k)
    return [tuple(int(t) for t in idx) for idx in np.argwhere(left != right)]


def unit_violations(field: PrimeField, constants, unit) -> list[int]:
    c = np.asarray(constants, dtype=np.int64)
    u = np.asarray(unit, dtype=np.int64)
    eye = np.eye(c.shape[0], dtype=np.int64)
    lhs = np.einsum("i,ijk->jk", u, c) % field.p
    rhs = np.einsum("j,ijk->ik", u, c) % field.p
    bad = set(np.flatnonzero((lhs != eye).any(axis=1))) | set(np.flatnonzero((rhs != eye).any(axis=1)))
    return sorted(int(j) for j in bad)


def validate_algebra(field: PrimeField, constants, unit, basis_names=(), name: str = "A") -> AlgebraPresentation:
    """Check associativity and the unit axioms; raise with every violation."""
    A = AlgebraPresentation(field, constants, unit, tuple(basis_names), name)
    assoc = associativity_violations(field, A.constants)
    if assoc:
        raise NonAssociative(assoc)
    bad_unit = unit_violations(field, A.constants, A.unit)
    if bad_unit:
        raise BadUnit([(j,) for j in bad_unit])
    return A


def is_commutative(A: AlgebraPresentation) -> bool:
    return bool(np.array_equal(A.constants, A.constants.transpose(1, 0, 2)))


def check_homomorphism(A: AlgebraPresentation, B: AlgebraPresentation, K) -> tuple | None:
    """Return a failing basis pair (i, j), ("unit",) or None if K is a unital hom.

    K is the dim(A) x dim(B) matrix sending e_i to row i.
    """
    K = np.asarray(K, dtype=np.int64) % B.p
    bad = is_multiplicative(A, B, K)
    if bad is not None:
        return bad
    if not np.array_equal(A.unit @ K % B.p, B.unit):
        return ("unit",)
    return None


def is_multiplicative(A: AlgebraPresentation, B: AlgebraPresentation, K) -> tuple | None:
    K = np.asarray(K, dtype=np.int64) % B.p
    lhs = np.einsum("ijk,kl->ijl", A.constants, K) % B.p
    rhs = np.einsum("ia,jb,abl->ijl", K, K, B.constants) % B.p
    bad = np.argwhere((lhs != rhs).any(axis=2))
    return tuple(int(t) for t in bad[0]) if bad.size else None


def is_unit_element(B: AlgebraPresentation, b) -> bool:
    """b is invertible iff right multiplication by b is (finite dimension)."""
    from .linalg import is_invertible
    return is_invertible(B.right_mult(b), B.field)


def element_inverse(B: AlgebraPresentation, b) -> np.ndarray:
    """Two-sided inverse of b, via the minimal polynomial of right multiplication."""
    from .linalg import invert_via_min_poly
    R_inv = invert_via_min_poly(B.right_mult(b), B.field)
    inv = B.unit @ R_inv % B.p
    assert np.array_equal(B.mul(b, inv), B.unit) and np.array_equal(B.mul(inv, b), B.unit)
    return inv


@dataclass(frozen=True, eq=False)
class IdealBasis:
    algebra: AlgebraPresentation
    space: Subspace

    def __post_init__(self):
        A = self.algebra
        if self.space.ambient_dim != A.dim:
            raise ShapeError("ideal lives in the wrong coordinate space")
        for b in self.space.basis:
            for i in range(A.dim):
                e = A.basis_vector(i)
                if not (self.space.contains(A.mul(e, b)) and self.space.contains(A.mul(b, e))):
                    raise NotAnIdeal(f"not closed under multiplication by {A.basis_names[i]}")

    @classmethod
    def span(cls, A: AlgebraPresentation, vectors) -> "IdealBasis":
        return cls(A, Subspace.span(list(vectors), A.dim, A.field))

    @classmethod
    def generated(cls, A: AlgebraPresentation, vectors) -> "IdealBasis":
        """Smallest two-sided ideal containing the given vectors."""
        return cls(A, Subspace.span([A.mul(A.mul(A.basis_vector(i), v), A.basis_vector(j))
                                     for v in vectors for i in range(A.dim) for j in range(A.dim)],
                                    A.dim, A.field))

    @classmethod
    def zero(cls, A: AlgebraPresentation) -> "IdealBasis":
        return cls(A, Subspace.zero(A.dim, A.field))

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def basis(self) -> np.ndarray:
        return self.space.basis

    def contains(self, v) -> bool:
        return self.space.contains(v)

    def __eq__(self, other):
        if not isinstance(other, IdealBasis):
            return NotImplemented
        return self.algebra is other.algebra and self.space == other.space

    def __hash__(self):
        return hash(self.space)

    def __repr__(self):
        return f"IdealBasis(dim={self.dim} in {self.algebra.name})"


def kernel_ideal(A: AlgebraPresentation, K) -> IdealBasis:
    """Kernel of a linear map out of A that is known to be a homomorphism
    (or a module structure map)."""
    return IdealBasis(A, Subspace(A.dim, left_nullspace(np.asarray(K) % A.p, A.field), A.field))


@dataclass(frozen=True, eq=False)
class Quotient:
    """A/I on the complement basis, with the projection and a linear section."""

    algebra: AlgebraPresentation
    projection: np.ndarray    # dim A x dim Q
    section: np.ndarray       # dim Q x dim A, lifts onto the chosen coordinates
    ideal: IdealBasis


def quotient_algebra(A: AlgebraPresentation, I: IdealBasis, name: str | None = None) -> Quotient:
    if I.contains(A.unit):
        raise UnitInIdeal(f"unit lies in the ideal of {A.name}")
    keep = I.space.complement_indices()
    q = len(keep)
    P = np.stack([I.space.reduce(A.basis_vector(i))[keep] for i in range(A.dim)])
    section = np.zeros((q, A.dim), dtype=np.int64)
    for a, c in enumerate(keep):
        section[a, c] = 1
    lifts = A.constants[np.ix_(keep, keep)]           # q x q x n
    consts = np.einsum("abn,nk->abk", lifts, P) % A.p
    unit = A.unit @ P % A.p
    names = tuple(A.basis_names[c] for c in keep)
    Q = validate_algebra(A.field, consts, unit, names, name or f"{A.name}/I")
    assert check_homomorphism(A, Q, P) is None
    assert rank(P, A.field) == q and all(not (b @ P % A.p).any() for b in I.basis)
    return Quotient(Q, P, section, I)


def ideal_product(I: IdealBasis, J: IdealBasis) -> IdealBasis:
    A = I.algebra
    if J.algebra is not A:
        raise ShapeError("ideals of different algebras")
    prods = [A.mul(x, y) for x in I.basis for y in J.basis]
    return IdealBasis.span(A, prods)


def ideal_power_chain(A: AlgebraPresentation, I: IdealBasis) -> tuple[list[IdealBasis], int]:
    """[I, I^2, ..., I^N] with N the first exponent where I^N = I^(N+1)."""
    chain = [I]
    while True:
        nxt = ideal_product(chain[-1], I)
        if nxt.space == chain[-1].space:
            return chain, len(chain)
        chain.append(nxt)


def ideal_sum(I: IdealBasis, J: IdealBasis) -> IdealBasis:
    return IdealBasis.span(I.algebra, list(I.basis) + list(J.basis))
