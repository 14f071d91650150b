"""
Dense linear algebra over prime fields F_p.

Matrices are plain ``numpy`` int64 arrays with every entry reduced mod p.
Vectors are rows: a linear map V -> W is stored as a (dim V) x (dim W)
matrix acting by ``v @ m``. Elimination always pivots on the first nonzero
entry, so bases are reproducible run to run.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field

import numpy as np

from .errors import NotAUnit, ShapeError


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class PrimeField:
    p: int

    def __post_init__(self):
        if not _is_prime(int(self.p)):
            raise ValueError(f"{self.p} is not prime")

    def inv(self, a: int) -> int:
        a = int(a) % self.p
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return pow(a, -1, self.p)

    def array(self, data) -> np.ndarray:
        return np.asarray(data, dtype=np.int64) % self.p

    def zeros(self, *shape: int) -> np.ndarray:
        return np.zeros(shape, dtype=np.int64)

    def identity(self, n: int) -> np.ndarray:
        return np.eye(n, dtype=np.int64)

    def vectors(self, n: int):
        """Every vector of F_p^n, in lexicographic order."""
        for coords in itertools.product(range(self.p), repeat=n):
            yield np.array(coords, dtype=np.int64)

    def projective_points(self, n: int):
        """One representative per line: vectors whose first nonzero entry is 1."""
        for lead in range(n):
            for tail in itertools.product(range(self.p), repeat=n - lead - 1):
                v = np.zeros(n, dtype=np.int64)
                v[lead] = 1
                v[lead + 1:] = tail
                yield v

    def __str__(self):
        return f"F_{self.p}"


def mat_mul(a: np.ndarray, b: np.ndarray, field: PrimeField) -> np.ndarray:
    a = np.asarray(a)
    b = np.asarray(b)
    if a.shape[-1] != b.shape[0]:
        raise ShapeError(f"cannot multiply {a.shape} by {b.shape}")
    return (a @ b) % field.p


def mat_pow(m: np.ndarray, k: int, field: PrimeField) -> np.ndarray:
    result = field.identity(m.shape[0])
    base = m % field.p
    while k:
        if k & 1:
            result = (result @ base) % field.p
        base = (base @ base) % field.p
        k >>= 1
    return result


def rref(m, field: PrimeField) -> tuple[np.ndarray, int, list[int]]:
    """Reduced row echelon form.

    Returns:
        (R, rank, pivot_cols), with R the same shape as ``m`` and its zero
        rows at the bottom.
    """
    p = field.p
    R = np.array(m, dtype=np.int64, ndmin=2) % p
    rows, cols = R.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(R[r:, c])
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            R[[r, k]] = R[[k, r]]
        R[r] = (R[r] * field.inv(R[r, c])) % p
        col = R[:, c].copy()
        col[r] = 0
        hit = np.flatnonzero(col)
        if hit.size:
            R[hit] = (R[hit] - np.outer(col[hit], R[r])) % p
        pivots.append(c)
        r += 1
    return R, r, pivots


def rank(m, field: PrimeField) -> int:
    m = np.asarray(m)
    if m.size == 0:
        return 0
    return rref(m, field)[1]


def nullspace(m, field: PrimeField) -> np.ndarray:
    """Basis (as rows) of {x : m @ x = 0}."""
    m = np.array(m, dtype=np.int64, ndmin=2)
    cols = m.shape[1]
    if m.shape[0] == 0:
        return field.identity(cols)
    R, r, pivots = rref(m, field)
    free = [c for c in range(cols) if c not in set(pivots)]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for k, f in enumerate(free):
        basis[k, f] = 1
        for i, pc in enumerate(pivots):
            basis[k, pc] = (-R[i, f]) % field.p
    return basis


def left_nullspace(m, field: PrimeField) -> np.ndarray:
    """Basis (as rows) of {y : y @ m = 0}."""
    m = np.array(m, dtype=np.int64, ndmin=2)
    return nullspace(m.T, field)


def solve(a, b, field: PrimeField) -> np.ndarray | None:
    """One solution x of ``a @ x = b`` (b a vector or matrix), or None."""
    a = np.array(a, dtype=np.int64, ndmin=2)
    b = np.asarray(b, dtype=np.int64)
    vec = b.ndim == 1
    B = b.reshape(-1, 1) if vec else b
    if a.shape[0] != B.shape[0]:
        raise ShapeError(f"rhs has {B.shape[0]} rows, expected {a.shape[0]}")
    n = a.shape[1]
    R, r, pivots = rref(np.hstack([a, B]), field)
    if any(pc >= n for pc in pivots):
        return None
    x = np.zeros((n, B.shape[1]), dtype=np.int64)
    for i, pc in enumerate(pivots):
        x[pc] = R[i, n:]
    return x[:, 0] if vec else x


def solve_left(a, b, field: PrimeField) -> np.ndarray | None:
    """One solution x of ``x @ a = b``, or None."""
    a = np.array(a, dtype=np.int64, ndmin=2)
    b = np.asarray(b, dtype=np.int64)
    x = solve(a.T, b.T, field)
    return None if x is None else x.T


def mat_inverse(m, field: PrimeField) -> np.ndarray:
    """Gauss-Jordan inverse; raises NotAUnit for singular input."""
    m = np.array(m, dtype=np.int64, ndmin=2)
    n = m.shape[0]
    if m.shape != (n, n):
        raise ShapeError("inverse of a non-square matrix")
    R, r, pivots = rref(np.hstack([m, field.identity(n)]), field)
    if r < n or pivots[n - 1] >= n:
        raise NotAUnit("singular matrix")
    return R[:, n:]


# -- polynomials: coefficient lists, lowest degree first, entries in [0, p) --

def _trim(f: list[int]) -> list[int]:
    f = list(f)
    while f and f[-1] == 0:
        f.pop()
    return f


def poly_mul(f: list[int], g: list[int], p: int) -> list[int]:
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = (out[i + j] + a * b) % p
    return _trim(out)


def poly_divmod(f: list[int], g: list[int], p: int) -> tuple[list[int], list[int]]:
    f, g = _trim(f), _trim(g)
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    inv_lead = pow(g[-1], -1, p)
    r = list(f)
    q = [0] * max(len(f) - len(g) + 1, 0)
    while len(r) >= len(g) and r:
        shift = len(r) - len(g)
        c = (r[-1] * inv_lead) % p
        q[shift] = c
        for i, b in enumerate(g):
            r[shift + i] = (r[shift + i] - c * b) % p
        r = _trim(r)
    return _trim(q), r


def poly_monic(f: list[int], p: int) -> list[int]:
    f = _trim(f)
    if not f:
        return f
    c = pow(f[-1], -1, p)
    return [(a * c) % p for a in f]


def poly_gcd(f: list[int], g: list[int], p: int) -> list[int]:
    f, g = _trim(f), _trim(g)
    while g:
        f, g = g, poly_divmod(f, g, p)[1]
    return poly_monic(f, p)


def poly_lcm(f: list[int], g: list[int], p: int) -> list[int]:
    q, r = poly_divmod(poly_mul(f, g, p), poly_gcd(f, g, p), p)
    assert not r
    return poly_monic(q, p)


def poly_eval_matrix(f: list[int], m: np.ndarray, field: PrimeField) -> np.ndarray:
    """f(m) by Horner's rule."""
    n = m.shape[0]
    out = field.zeros(n, n)
    eye = field.identity(n)
    for c in reversed(_trim(f)):
        out = (out @ m + c * eye) % field.p
    return out


def poly_factor(f: list[int], p: int) -> list[tuple[list[int], int]]:
    """Monic irreducible factors with multiplicities, lowest degree first."""
    from sympy.polys.domains import ZZ
    from sympy.polys.galoistools import gf_factor

    _, factors = gf_factor([int(c) for c in reversed(_trim(f))], p, ZZ)
    out = [([int(c) for c in reversed(g)], int(e)) for g, e in factors]
    return sorted(out, key=lambda t: (len(t[0]), t[0]))


def min_poly(m, field: PrimeField) -> list[int]:
    """Monic minimal polynomial of a square matrix (lowest degree first).

    Krylov iteration on each standard basis vector gives the local minimal
    polynomial of that vector; the matrix's minimal polynomial is their lcm.
    """
    m = np.array(m, dtype=np.int64, ndmin=2) % field.p
    n = m.shape[0]
    if m.shape != (n, n):
        raise ShapeError("minimal polynomial of a non-square matrix")
    p = field.p
    result = [1]
    covered = EchelonBasis(n, field)
    for j in range(n):
        v = np.zeros(n, dtype=np.int64)
        v[j] = 1
        if covered.contains(v):
            # v lies in a sum of cyclic subspaces already annihilated by result
            continue
        krylov = [v]
        while True:
            w = (krylov[-1] @ m) % p
            c = solve_left(np.array(krylov), w, field)
            if c is not None:
                rel = [(-int(x)) % p for x in c] + [1]
                break
            krylov.append(w)
        for k in krylov:
            covered.add(k)
        result = poly_lcm(result, rel, p)
    return result


def invert_via_min_poly(m, field: PrimeField) -> np.ndarray:
    """Two-sided inverse read off the minimal polynomial.

    With f(x) = c0 + c1 x + ... + x^d and c0 != 0,
    m^-1 = -c0^-1 (c1 + c2 m + ... + m^(d-1)).
    """
    m = np.array(m, dtype=np.int64, ndmin=2) % field.p
    f = min_poly(m, field)
    if f[0] == 0:
        raise NotAUnit("minimal polynomial has zero constant term")
    p = field.p
    n = m.shape[0]
    tail = poly_eval_matrix(f[1:], m, field)
    inv = (tail * ((-field.inv(f[0])) % p)) % p
    eye = field.identity(n)
    assert np.array_equal((m @ inv) % p, eye) and np.array_equal((inv @ m) % p, eye)
    return inv


def is_invertible(m, field: PrimeField) -> bool:
    return min_poly(m, field)[0] != 0


def solve_commutant_system(constraints, field: PrimeField, shape=None) -> "Subspace":
    """Solution space of X @ F = F @ Y over every pair (X, Y).

    With X = Y this is the commutant of the given matrices; with
    X = rho_M(a), Y = rho_N(a) it is the space of module maps M -> N.
    Basis vectors are the row-major flattenings of F.
    """
    constraints = list(constraints)
    if shape is None:
        if not constraints:
            raise ShapeError("shape required for an empty constraint list")
        shape = (constraints[0][0].shape[0], constraints[0][1].shape[0])
    m, k = shape
    if not constraints:
        return Subspace.full(m * k, field)
    eye_m = np.eye(m, dtype=np.int64)
    eye_k = np.eye(k, dtype=np.int64)
    blocks = []
    for X, Y in constraints:
        X = np.asarray(X)
        Y = np.asarray(Y)
        if X.shape != (m, m) or Y.shape != (k, k):
            raise ShapeError("constraint matrices have inconsistent sizes")
        # row-major vec: vec(X F) = (X kron I) vec F, vec(F Y) = (I kron Y^T) vec F
        blocks.append(np.kron(X, eye_k) - np.kron(eye_m, Y.T))
    system = np.vstack(blocks) % field.p
    return Subspace(m * k, nullspace(system, field), field)


class EchelonBasis:
    """Incrementally grown semi-echelon basis.

    Each stored row has a 1 at its pivot and zeros at the pivots of earlier
    rows, so reducing in insertion order is exact.
    """

    def __init__(self, ambient_dim: int, field: PrimeField):
        self.ambient_dim = ambient_dim
        self.field = field
        self.rows: list[np.ndarray] = []
        self.pivots: list[int] = []

    def __len__(self):
        return len(self.rows)

    def reduce(self, v) -> np.ndarray:
        p = self.field.p
        v = np.asarray(v, dtype=np.int64) % p
        for row, pc in zip(self.rows, self.pivots):
            c = v[pc]
            if c:
                v = (v - c * row) % p
        return v

    def contains(self, v) -> bool:
        return not self.reduce(v).any()

    def add(self, v) -> bool:
        """Add v if it is independent; returns whether the basis grew."""
        w = self.reduce(v)
        nz = np.flatnonzero(w)
        if nz.size == 0:
            return False
        pc = int(nz[0])
        w = (w * self.field.inv(w[pc])) % self.field.p
        self.rows.append(w)
        self.pivots.append(pc)
        return True

    def subspace(self) -> "Subspace":
        return Subspace.span(self.rows, self.ambient_dim, self.field)


@dataclass(frozen=True, eq=False)
class Subspace:
    """A subspace of F_p^ambient_dim, held as an RREF basis."""

    ambient_dim: int
    basis: np.ndarray
    field: PrimeField
    pivots: tuple = dc_field(default=None)

    def __post_init__(self):
        B = np.array(self.basis, dtype=np.int64).reshape(-1, self.ambient_dim)
        R, r, piv = rref(B, self.field) if B.shape[0] else (B, 0, [])
        object.__setattr__(self, "basis", R[:r])
        object.__setattr__(self, "pivots", tuple(piv))

    @classmethod
    def span(cls, vectors, ambient_dim: int, field: PrimeField) -> "Subspace":
        vectors = list(vectors)
        arr = np.array(vectors, dtype=np.int64).reshape(len(vectors), ambient_dim)
        return cls(ambient_dim, arr, field)

    @classmethod
    def zero(cls, ambient_dim: int, field: PrimeField) -> "Subspace":
        return cls(ambient_dim, np.zeros((0, ambient_dim), dtype=np.int64), field)

    @classmethod
    def full(cls, ambient_dim: int, field: PrimeField) -> "Subspace":
        return cls(ambient_dim, np.eye(ambient_dim, dtype=np.int64), field)

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    def reduce(self, v) -> np.ndarray:
        p = self.field.p
        v = np.asarray(v, dtype=np.int64) % p
        if self.dim == 0:
            return v
        return (v - v[..., list(self.pivots)] @ self.basis) % p

    def contains(self, v) -> bool:
        return not self.reduce(v).any()

    def coords(self, v) -> np.ndarray:
        """Coordinates of a member vector in the RREF basis."""
        v = np.asarray(v, dtype=np.int64) % self.field.p
        if not self.contains(v):
            raise ValueError("vector is not in the subspace")
        return v[..., list(self.pivots)]

    def contains_space(self, other: "Subspace") -> bool:
        return other.dim == 0 or not self.reduce(other.basis).any()

    def complement_indices(self) -> list[int]:
        piv = set(self.pivots)
        return [c for c in range(self.ambient_dim) if c not in piv]

    def elements(self):
        """Every vector of the subspace (q^dim of them)."""
        for c in self.field.vectors(self.dim):
            yield (c @ self.basis) % self.field.p

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (self.ambient_dim == other.ambient_dim
                and self.field == other.field
                and np.array_equal(self.basis, other.basis))

    def __hash__(self):
        return hash((self.ambient_dim, self.field.p, self.basis.tobytes()))

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim}, p={self.field.p})"


def subspace_sum(u: Subspace, v: Subspace) -> Subspace:
    if u.ambient_dim != v.ambient_dim:
        raise ShapeError("ambient dimensions differ")
    return Subspace(u.ambient_dim, np.vstack([u.basis, v.basis]), u.field)


def subspace_intersect(u: Subspace, v: Subspace) -> Subspace:
    """u ∩ v from the left kernel of the stacked bases."""
    if u.ambient_dim != v.ambient_dim:
        raise ShapeError("ambient dimensions differ")
    if u.dim == 0 or v.dim == 0:
        return Subspace.zero(u.ambient_dim, u.field)
    K = left_nullspace(np.vstack([u.basis, v.basis]), u.field)
    if K.shape[0] == 0:
        return Subspace.zero(u.ambient_dim, u.field)
    vecs = (K[:, :u.dim] @ u.basis) % u.field.p
    return Subspace(u.ambient_dim, vecs, u.field)


def orthogonal_complement(u: Subspace) -> Subspace:
    """{x : b . x = 0 for every basis row b}."""
    if u.dim == 0:
        return Subspace.full(u.ambient_dim, u.field)
    return Subspace(u.ambient_dim, nullspace(u.basis, u.field), u.field)
