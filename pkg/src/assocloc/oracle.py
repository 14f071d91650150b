"""
Classical localization of commutative Artinian algebras.

A commutative finite-dimensional algebra splits as a product of local
factors e_i A, one per maximal ideal, and the localization at m_i is that
factor. This is computed without touching endomorphism rings, so it serves
as an independent reference for the local function ring.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import (AlgebraPresentation, IdealBasis, check_homomorphism,
                      is_commutative, is_unit_element, kernel_ideal,
                      validate_algebra)
from .errors import KernelNotContained, NotCommutative, PullbackMismatch
from .linalg import Subspace, left_nullspace, rank, solve_left
from .localization import LocalFunctionRing, localize, universal_map
from .modules import (DEFAULT_CAP, ModuleRep, annihilator, regular_representation,
                      simples)


@dataclass(frozen=True, eq=False)
class MaximalIdealData:
    ideal: IdealBasis
    residue_dim: int
    primitive_idempotent: np.ndarray
    simple: ModuleRep | None = None


def _reduction_matrix(I: IdealBasis) -> np.ndarray:
    """Linear map v -> v mod I (the RREF remainder), as an n x n matrix."""
    n = I.algebra.dim
    return np.array([I.space.reduce(np.eye(n, dtype=np.int64)[k]) for k in range(n)]).reshape(n, n)


def lift_idempotent(A: AlgebraPresentation, a, max_steps: int = 64) -> np.ndarray:
    """Iterate e <- 3e^2 - 2e^3 until e is fixed; converges when a^2 - a is nilpotent."""
    e = np.asarray(a, dtype=np.int64) % A.p
    for _ in range(max_steps):
        e2 = A.mul(e, e)
        nxt = (3 * e2 - 2 * A.mul(e2, e)) % A.p
        if np.array_equal(nxt, e):
            return e
        e = nxt
    raise ArithmeticError("idempotent lifting did not stabilize")


def maximal_ideals(A: AlgebraPresentation, seed: int = 0, cap: int = DEFAULT_CAP) -> list[MaximalIdealData]:
    if not is_commutative(A):
        raise NotCommutative(f"{A.name} is not commutative")
    S = simples(A, seed, cap)
    ideals = [annihilator(A, M) for M in S]
    reductions = [_reduction_matrix(I) for I in ideals]
    out = []
    for i, (I, M) in enumerate(zip(ideals, S)):
        # a in (1 + m_i) and a in m_j for j != i, i.e. a lifts an idempotent of A/J
        others = [R for j, R in enumerate(reductions) if j != i]
        if others:
            lhs = np.hstack([I.basis @ R % A.p for R in others])
            rhs = np.hstack([(-A.unit) @ R % A.p for R in others])
            c = solve_left(lhs, rhs, A.field)
            assert c is not None
            a = (A.unit + c @ I.basis) % A.p
        else:
            a = A.unit.copy()
        e = lift_idempotent(A, a)
        out.append(MaximalIdealData(I, A.dim - I.dim, e, M))
    es = [md.primitive_idempotent for md in out]
    assert np.array_equal(sum(es) % A.p, A.unit)
    for i, ei in enumerate(es):
        for j, ej in enumerate(es):
            assert np.array_equal(A.mul(ei, ej), ei if i == j else 0 * ei)
    return out


@dataclass(frozen=True, eq=False)
class LocalFactor:
    algebra: AlgebraPresentation   # A_m = eA, unit e
    canonical: np.ndarray          # f_m: A -> A_m, dim A x dim A_m
    embedding: np.ndarray          # basis of eA in A-coordinates, dim A_m x dim A
    maximal: IdealBasis            # e.m inside A_m
    data: MaximalIdealData

    @property
    def dim(self) -> int:
        return self.algebra.dim


def localize_at_max(A: AlgebraPresentation, md: MaximalIdealData) -> LocalFactor:
    e = md.primitive_idempotent
    V = Subspace.span([A.mul(e, A.basis_vector(j)) for j in range(A.dim)], A.dim, A.field)
    d = V.dim
    c = np.zeros((d, d, d), dtype=np.int64)
    for a in range(d):
        for b in range(d):
            c[a, b] = V.coords(A.mul(V.basis[a], V.basis[b]))
    Am = validate_algebra(A.field, c, V.coords(e), (), f"{A.name}_m")
    f = np.array([V.coords(A.mul(e, A.basis_vector(j))) for j in range(A.dim)]).reshape(A.dim, d)
    assert check_homomorphism(A, Am, f) is None
    maximal = IdealBasis.span(Am, md.ideal.basis @ f % A.p)
    assert d - maximal.dim == md.residue_dim
    return LocalFactor(Am, f, V.basis.copy(), maximal, md)


def is_local_exhaustive(B: AlgebraPresentation, maximal: IdealBasis) -> bool:
    """Non-units of B are exactly the elements of `maximal`."""
    for b in B.field.vectors(B.dim):
        if is_unit_element(B, b) == maximal.contains(b):
            return False
    return True


def find_maximal(mds, ideal: IdealBasis) -> MaximalIdealData:
    for md in mds:
        if md.ideal.space == ideal.space:
            return md
    raise ValueError("ideal is not among the maximal ideals")


@dataclass(frozen=True, eq=False)
class OracleReport:
    ring: LocalFunctionRing
    local: LocalFactor
    nilradical_dim: int
    isomorphic: bool
    witness: np.ndarray | None      # A_M -> A_m when isomorphic
    kernel_not_contained: bool      # canonical A -> A_m fails ker(eta) ⊆ ker

    @property
    def dims(self) -> tuple[int, int]:
        return self.ring.dim, self.local.dim


def oracle_compare(A: AlgebraPresentation, M: ModuleRep, seed: int = 0, cap: int = DEFAULT_CAP,
                   mds=None) -> OracleReport:
    """Compare A_M with the classical localization at m = ann(M)."""
    mds = mds if mds is not None else maximal_ideals(A, seed, cap)
    md = find_maximal(mds, annihilator(A, M))
    L = localize(A, [M], seed, cap)
    loc = localize_at_max(A, md)
    witness = None
    blocked = False
    try:
        U = universal_map(L, loc.algebra, loc.canonical)
        if L.dim == loc.dim and rank(U.matrix, A.field) == L.dim:
            witness = U.matrix
    except KernelNotContained:
        blocked = True
    return OracleReport(L, loc, loc.maximal.dim, witness is not None, witness, blocked)


@dataclass(frozen=True, eq=False)
class ProbeResult:
    target: AlgebraPresentation
    xi: np.ndarray
    commutes: bool
    local: bool
    unique: bool


def local_maximal_ideal(B: AlgebraPresentation, seed: int = 0, cap: int = DEFAULT_CAP) -> IdealBasis:
    """The unique maximal ideal of a local algebra (its radical)."""
    S = simples(B, seed, cap)
    if len(S) != 1:
        raise ValueError(f"{B.name} is not local: {len(S)} simple modules")
    J = annihilator(B, S[0])
    if B.dim - J.dim != S[0].dim or not _residue_is_division(B, J):
        raise ValueError(f"{B.name} is not local")
    return J


def _residue_is_division(B: AlgebraPresentation, J: IdealBasis) -> bool:
    from .algebra import quotient_algebra
    from .modules import is_simple
    Q = quotient_algebra(B, J).algebra
    return is_simple(regular_representation(Q)).simple


def pullback(h, target_ideal: IdealBasis, A: AlgebraPresentation) -> Subspace:
    """{a in A : h(a) in target_ideal}."""
    R = _reduction_matrix(target_ideal)
    return Subspace(A.dim, left_nullspace(np.asarray(h) @ R % A.p, A.field), A.field)


def representability_probe(A: AlgebraPresentation, md: MaximalIdealData, targets,
                           seed: int = 0, cap: int = DEFAULT_CAP) -> list[ProbeResult]:
    """For each local target (B, h) with h^-1(m_B) = m, build the factorization
    xi: A_m -> B of h and check it is local and forced."""
    loc = localize_at_max(A, md)
    results = []
    for B, h in targets:
        h = np.asarray(h, dtype=np.int64) % A.p
        mB = local_maximal_ideal(B, seed, cap)
        if pullback(h, mB, A) != md.ideal.space:
            raise PullbackMismatch(f"h^-1(m_B) differs from m for target {B.name}")
        xi = loc.embedding @ h % A.p
        commutes = bool(np.array_equal(loc.canonical @ xi % A.p, h))
        is_hom = check_homomorphism(loc.algebra, B, xi) is None
        local = pullback(xi, mB, loc.algebra) == loc.maximal.space
        unique = rank(loc.canonical, A.field) == loc.dim
        results.append(ProbeResult(B, xi, commutes and is_hom, local, unique))
    return results


def canonical_kernel(A: AlgebraPresentation, loc: LocalFactor) -> IdealBasis:
    return kernel_ideal(A, loc.canonical)
