"""
Adic completion and Hausdorff localization.

In finite dimension the chain m ⊇ m^2 ⊇ ... stabilizes at some m^N, so the
inverse limit of base/m^k is base/m^N. The whole tower is still built so the
transition maps can be checked.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import (AlgebraPresentation, IdealBasis, Quotient,
                      check_homomorphism, ideal_power_chain, is_commutative,
                      kernel_ideal, quotient_algebra)
from .errors import NotCommutative, NotMaximal
from .linalg import left_nullspace, rank
from .localization import LocalFunctionRing, localize, universal_map
from .modules import DEFAULT_CAP, ModuleRep, is_simple, regular_representation
from .oracle import LocalFactor, MaximalIdealData, localize_at_max


@dataclass(frozen=True, eq=False)
class CompletionResult:
    base: AlgebraPresentation
    ideal: IdealBasis
    chain: tuple                 # m, m^2, ..., m^N
    stable_exponent: int
    truncations: tuple           # Quotient base/m^k, k = 1..N
    transitions: tuple           # base/m^(k+1) -> base/m^k, k = 1..N-1
    source: AlgebraPresentation  # the ring A that kappa starts from
    source_map: np.ndarray       # A -> base
    kappa: np.ndarray            # A -> completed
    kernel_kappa: IdealBasis

    @property
    def tower_dims(self) -> list[int]:
        return [I.dim for I in self.chain]

    @property
    def completed(self) -> AlgebraPresentation:
        return self.truncations[-1].algebra

    def tower_commutes(self) -> bool:
        """A -> base/m^N followed by the transitions down to base/m^k equals
        the direct truncation A -> base/m^k, for every k."""
        p = self.base.p
        current = self.kappa
        for k in range(self.stable_exponent - 1, 0, -1):
            current = current @ self.transitions[k - 1] % p
            direct = self.source_map @ self.truncations[k - 1].projection % p
            if not np.array_equal(current, direct):
                return False
        return True


def complete(base: AlgebraPresentation, ideal: IdealBasis, source: AlgebraPresentation | None = None,
             source_map=None) -> CompletionResult:
    """m-adic completion of `base`; kappa is source_map followed by base -> base/m^N."""
    p = base.p
    chain, N = ideal_power_chain(base, ideal)
    truncations = [quotient_algebra(base, I, f"{base.name}/m^{k + 1}") for k, I in enumerate(chain)]
    transitions = []
    for k in range(N - 1):
        hi, lo = truncations[k + 1], truncations[k]
        T = hi.section @ lo.projection % p
        assert check_homomorphism(hi.algebra, lo.algebra, T) is None
        assert rank(T, base.field) == lo.algebra.dim
        transitions.append(T)
    if source is None:
        source, source_map = base, np.eye(base.dim, dtype=np.int64)
    source_map = np.asarray(source_map, dtype=np.int64) % p
    kappa = source_map @ truncations[-1].projection % p
    assert check_homomorphism(source, truncations[-1].algebra, kappa) is None
    return CompletionResult(base, ideal, tuple(chain), N, tuple(truncations), tuple(transitions),
                            source, source_map, kappa, kernel_ideal(source, kappa))


def induced_module(M: ModuleRep, Q: Quotient) -> ModuleRep:
    """M as a module over A/I, valid when I annihilates M."""
    action = np.einsum("ji,iab->jab", Q.section, M.action) % M.field.p
    N = ModuleRep(Q.algebra, action, None, M.name)
    assert all(not M.rho(k).any() for k in Q.ideal.basis)
    return N


@dataclass(frozen=True, eq=False)
class HausdorffResult:
    ring: LocalFunctionRing            # A_M
    completion: CompletionResult       # of A_M at m = ker(A_M -> E_M)
    quotient: Quotient                 # A/ker(kappa)
    localization: LocalFunctionRing    # H = (A/ker kappa)_M
    comparison: np.ndarray             # H -> A_M
    isomorphic: bool
    embeds_in_completion: bool

    @property
    def m_dim(self) -> int:
        return self.completion.ideal.dim


def hausdorff_localize(A: AlgebraPresentation, summands, seed: int = 0,
                       cap: int = DEFAULT_CAP) -> HausdorffResult:
    L = localize(A, summands, seed, cap)
    base = L.ring
    # m is the kernel of A_M -> E_M; the inclusion is injective, so m = 0
    m = kernel_ideal(base, L.inclusion)
    C = complete(base, m, A, L.eta_coords)
    Q = quotient_algebra(A, C.kernel_kappa, f"{A.name}/ker")
    H = localize(Q.algebra, [induced_module(M, Q) for M in summands], seed, cap)
    to_AM = universal_map(H, base, Q.section @ L.eta_coords % A.p).matrix
    to_hat = universal_map(H, C.completed, Q.section @ C.kappa % A.p).matrix
    iso = H.dim == L.dim and rank(to_AM, A.field) == H.dim
    embeds = rank(to_hat, A.field) == H.dim
    return HausdorffResult(L, C, Q, H, to_AM, iso, embeds)


@dataclass(frozen=True, eq=False)
class CommutativeHausdorffResult:
    local: LocalFactor                 # A_m
    completion: CompletionResult       # of A_m at m A_m
    quotient: Quotient                 # A/ker(kappa)
    localization: LocalFactor          # H = (A/ker kappa)_m
    to_completion: np.ndarray          # H -> completion
    injective: bool


def _is_maximal(A: AlgebraPresentation, I: IdealBasis) -> bool:
    if I.contains(A.unit):
        return False
    Q = quotient_algebra(A, I).algebra
    return is_simple(regular_representation(Q)).simple


def hausdorff_commutative(A: AlgebraPresentation, md: MaximalIdealData) -> CommutativeHausdorffResult:
    if not is_commutative(A):
        raise NotCommutative(f"{A.name} is not commutative")
    if not _is_maximal(A, md.ideal):
        raise NotMaximal("ideal is not maximal")
    p = A.p
    loc = localize_at_max(A, md)
    C = complete(loc.algebra, loc.maximal, A, loc.canonical)
    Q = quotient_algebra(A, C.kernel_kappa, f"{A.name}/ker")
    e_bar = md.primitive_idempotent @ Q.projection % p
    m_bar = IdealBasis.span(Q.algebra, md.ideal.basis @ Q.projection % p)
    md_bar = MaximalIdealData(m_bar, md.residue_dim, e_bar)
    H = localize_at_max(Q.algebra, md_bar)
    to_hat = H.embedding @ Q.section @ C.kappa % p
    assert check_homomorphism(H.algebra, C.completed, to_hat) is None
    injective = not left_nullspace(to_hat, A.field).shape[0] if H.dim else True
    return CommutativeHausdorffResult(loc, C, Q, H, to_hat, bool(injective))
