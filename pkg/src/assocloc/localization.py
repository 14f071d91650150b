"""
Local function rings inside endomorphism rings.

For simple right A-modules M_1, ..., M_r with M their direct sum, the ring
E_M = End(M) is cut into blocks Hom(M_i, M_j). D_M is the block-diagonal
sum of the division rings End_A(M_i), and A_M is the subring of E_M generated
by im(eta) together with the inverses of the elements of im(eta) lying in D_M
with every diagonal block nonzero.
"""

from __future__ import annotations

import enum
import functools
from dataclasses import dataclass, replace

import numpy as np

from .algebra import (AlgebraPresentation, IdealBasis, check_homomorphism,
                      element_inverse, is_multiplicative, is_unit_element,
                      validate_algebra)
from .errors import (DenominatorNotUnit, KernelNotContained, LayoutMismatch,
                     NonSimpleSummand, NotHomomorphism, NotWellDefined,
                     ZeroDivisorFound)
from .linalg import (EchelonBasis, PrimeField, Subspace, invert_via_min_poly,
                     is_invertible, mat_inverse, min_poly, poly_eval_matrix,
                     rank, solve_commutant_system, solve_left,
                     subspace_intersect)
from .modules import (DEFAULT_CAP, ModuleRep, StructureMorphism, direct_sum,
                      is_simple, modules_isomorphic, structure_morphism)


class Verification(enum.Enum):
    EXHAUSTIVE = "ExhaustivelyVerified"
    CAP_EXCEEDED = "CapExceeded"


@dataclass(frozen=True, eq=False)
class EndRingContext:
    summands: tuple
    offsets: tuple

    @classmethod
    def of(cls, summands) -> "EndRingContext":
        summands = tuple(summands)
        if not summands:
            raise ValueError("need at least one summand")
        offsets = [0]
        for M in summands:
            offsets.append(offsets[-1] + M.dim)
        return cls(summands, tuple(offsets))

    @property
    def r(self) -> int:
        return len(self.summands)

    @property
    def total_dim(self) -> int:
        return self.offsets[-1]

    @property
    def field(self) -> PrimeField:
        return self.summands[0].field

    @property
    def algebra(self) -> AlgebraPresentation:
        return self.summands[0].algebra

    @functools.cached_property
    def module(self) -> ModuleRep:
        return direct_sum(self.summands)

    def block(self, mat, i: int, j: int) -> np.ndarray:
        """The Hom(M_i, M_j) block of an element of E_M."""
        o = self.offsets
        return np.asarray(mat)[o[i]:o[i + 1], o[j]:o[j + 1]]

    def embed_diagonal(self, i: int, x) -> np.ndarray:
        m = self.total_dim
        out = np.zeros((m, m), dtype=np.int64)
        o = self.offsets
        out[o[i]:o[i + 1], o[i]:o[i + 1]] = x
        return out


@dataclass(frozen=True, eq=False)
class DivisionData:
    context: EndRingContext
    basis: Subspace                 # flattened, inside E_M
    per_summand_bases: tuple        # Subspace of End(M_i), flattened
    verified: Verification


def schur_verify(D: DivisionData, cap: int = DEFAULT_CAP) -> Verification:
    """Enumerate each End_A(M_i) and check every nonzero element is a unit
    whose inverse stays inside it. Skipped (CapExceeded) above the cap."""
    field = D.context.field
    p = field.p
    status = Verification.EXHAUSTIVE
    for Di, M in zip(D.per_summand_bases, D.context.summands):
        if p ** Di.dim > cap:
            status = Verification.CAP_EXCEEDED
            continue
        for z in Di.elements():
            if not z.any():
                continue
            Z = z.reshape(M.dim, M.dim)
            f = min_poly(Z, field)
            if f[0] == 0:
                raise ZeroDivisorFound(Z, poly_eval_matrix(f[1:], Z, field))
            Zinv = invert_via_min_poly(Z, field)
            if not Di.contains(Zinv.reshape(-1)):
                raise ZeroDivisorFound(Z, Zinv)
    return status


def commutant(A: AlgebraPresentation, context: EndRingContext, cap: int = DEFAULT_CAP,
              seed: int = 0) -> DivisionData:
    field = A.field
    m = context.total_dim
    per = []
    flat = []
    for i, M in enumerate(context.summands):
        if not is_simple(M, seed, cap).simple:
            raise NonSimpleSummand(i)
        Di = solve_commutant_system([(r, r) for r in M.action], field, shape=(M.dim, M.dim))
        per.append(Di)
        for b in Di.basis:
            flat.append(context.embed_diagonal(i, b.reshape(M.dim, M.dim)).reshape(-1))
    basis = Subspace.span(flat, m * m, field)
    # D_M -> E_M is injective: the embedded basis stays independent
    assert basis.dim == sum(Di.dim for Di in per)
    D = DivisionData(context, basis, tuple(per), Verification.CAP_EXCEEDED)
    return replace(D, verified=schur_verify(D, cap))


@dataclass(frozen=True, eq=False)
class Denominator:
    value: np.ndarray
    inverse: np.ndarray
    preimage: np.ndarray | None = None


@dataclass(frozen=True, eq=False)
class DenominatorSet:
    items: tuple
    intersection: Subspace
    truncated: bool


def _all_blocks_nonzero(context: EndRingContext, Z) -> bool:
    return all(context.block(Z, i, i).any() for i in range(context.r))


def unit_denominators(eta_image: Subspace, D: DivisionData, cap: int = DEFAULT_CAP) -> DenominatorSet:
    """Elements of im(eta) ∩ D_M with every diagonal block nonzero, with inverses.

    Above the cap only a spanning set of such units is returned (truncated).
    """
    ctx = D.context
    field = ctx.field
    m = ctx.total_dim
    inter = subspace_intersect(eta_image, D.basis)
    items = []
    if field.p ** inter.dim <= cap:
        for z in inter.elements():
            Z = z.reshape(m, m)
            if _all_blocks_nonzero(ctx, Z):
                items.append(Denominator(Z, invert_via_min_poly(Z, field)))
        return DenominatorSet(tuple(items), inter, False)
    ech = EchelonBasis(m * m, field)
    eye = np.eye(m, dtype=np.int64).reshape(-1)
    for b in inter.basis:
        for lam in range(field.p):
            z = (b + lam * eye) % field.p
            Z = z.reshape(m, m)
            if _all_blocks_nonzero(ctx, Z) and is_invertible(Z, field) and ech.add(z):
                items.append(Denominator(Z, invert_via_min_poly(Z, field)))
                break
    return DenominatorSet(tuple(items), inter, True)


@dataclass(frozen=True, eq=False)
class Closure:
    space: Subspace
    elements: tuple
    words: tuple


def subring_closure(generators, context: EndRingContext) -> Closure:
    """Span of the identity and the generators, closed under products.

    Every basis element carries a word: ("one",), ("gen", k) or
    ("mul", word, word).
    """
    field = context.field
    m = context.total_dim
    ech = EchelonBasis(m * m, field)
    elems: list[np.ndarray] = []
    words: list[tuple] = []

    def push(X, w):
        if ech.add(X.reshape(-1)):
            elems.append(X % field.p)
            words.append(w)

    push(np.eye(m, dtype=np.int64), ("one",))
    for k, g in enumerate(generators):
        push(np.asarray(g, dtype=np.int64), ("gen", k))
    done = 0
    while done < len(elems):
        start, done = done, len(elems)
        for i in range(done):
            for j in range(done):
                if i < start and j < start:
                    continue
                push(elems[i] @ elems[j] % field.p, ("mul", words[i], words[j]))
    return Closure(ech.subspace(), tuple(elems), tuple(words))


@dataclass(frozen=True, eq=False)
class LocalFunctionRing:
    algebra: AlgebraPresentation
    context: EndRingContext
    eta: StructureMorphism
    division: DivisionData
    denominators: DenominatorSet
    generators: tuple               # ("eta", i) or ("inv", j)
    subring: Subspace
    elements: tuple                 # word basis, m x m matrices
    words: tuple
    kernel: IdealBasis

    @property
    def dim(self) -> int:
        return len(self.elements)

    @property
    def closure_growth(self) -> int:
        return self.dim - self.eta.image.dim

    @property
    def field(self) -> PrimeField:
        return self.algebra.field

    @functools.cached_property
    def inclusion(self) -> np.ndarray:
        """dim x m^2: each word-basis element flattened into E_M."""
        return np.array([X.reshape(-1) for X in self.elements])

    @functools.cached_property
    def _to_words(self) -> np.ndarray:
        T = self.inclusion[:, list(self.subring.pivots)]
        return mat_inverse(T, self.field)

    def coords(self, X) -> np.ndarray:
        """Word-basis coordinates of an element of E_M lying in A_M."""
        v = np.asarray(X, dtype=np.int64).reshape(-1)
        return self.subring.coords(v) @ self._to_words % self.field.p

    def contains(self, X) -> bool:
        return self.subring.contains(np.asarray(X, dtype=np.int64).reshape(-1))

    def element(self, coords) -> np.ndarray:
        m = self.context.total_dim
        return (np.asarray(coords) @ self.inclusion % self.field.p).reshape(m, m)

    @functools.cached_property
    def ring(self) -> AlgebraPresentation:
        """A_M as an abstract algebra on the word basis."""
        d = self.dim
        p = self.field.p
        c = np.zeros((d, d, d), dtype=np.int64)
        for i, X in enumerate(self.elements):
            for j, Y in enumerate(self.elements):
                c[i, j] = self.coords(X @ Y % p)
        unit = self.coords(np.eye(self.context.total_dim, dtype=np.int64))
        names = [f"b{k}" for k in range(d)]
        return validate_algebra(self.field, c, unit, names, f"{self.algebra.name}_M")

    @functools.cached_property
    def eta_coords(self) -> np.ndarray:
        """The homomorphism A -> A_M, dim A x dim A_M."""
        m = self.context.total_dim
        return np.array([self.coords(row.reshape(m, m)) for row in self.eta.matrix])

    def unit_condition_holds(self) -> bool:
        p = self.field.p
        eye = np.eye(self.context.total_dim, dtype=np.int64)
        return all(self.contains(d.inverse)
                   and np.array_equal(d.value @ d.inverse % p, eye)
                   for d in self.denominators.items)


def localize(A: AlgebraPresentation, summands, seed: int = 0, cap: int = DEFAULT_CAP) -> LocalFunctionRing:
    """The local function ring A_M, M the direct sum of the given simples."""
    ctx = EndRingContext.of(summands)
    field = A.field
    D = commutant(A, ctx, cap, seed)
    eta = structure_morphism(ctx.module)
    dens = unit_denominators(eta.image, D, cap)
    items = []
    for d in dens.items:
        s = solve_left(eta.matrix, d.value.reshape(-1), field)
        assert s is not None
        items.append(replace(d, preimage=s))
    dens = replace(dens, items=tuple(items))
    m = ctx.total_dim
    gens = [("eta", i) for i in range(A.dim)] + [("inv", j) for j in range(len(items))]
    mats = [row.reshape(m, m) for row in eta.matrix] + [d.inverse for d in items]
    cl = subring_closure(mats, ctx)
    L = LocalFunctionRing(A, ctx, eta, D, dens, tuple(gens), cl.space, cl.elements,
                          cl.words, eta.kernel)
    assert L.contains(np.eye(m, dtype=np.int64)) and L.subring.contains_space(eta.image)
    assert L.unit_condition_holds()
    return L


def closure_is_sound(L: LocalFunctionRing) -> bool:
    p = L.field.p
    return all(L.contains(X @ Y % p) for X in L.elements for Y in L.elements)


@dataclass(frozen=True, eq=False)
class UniversalMap:
    source: LocalFunctionRing
    target: AlgebraPresentation
    matrix: np.ndarray              # dim A_M x dim B
    forced: bool                    # values fixed by kappa on a spanning set


def universal_map(L: LocalFunctionRing, B: AlgebraPresentation, kappa) -> UniversalMap:
    """The unique rho: A_M -> B with eta followed by rho equal to kappa.

    kappa is a dim A x dim B matrix. Checks, in order: kappa multiplicative,
    ker(eta) inside ker(kappa), kappa(s) a unit for every recorded
    denominator preimage s (and for the unit of A).
    """
    A = L.algebra
    p = B.p
    K = np.asarray(kappa, dtype=np.int64) % p
    if K.shape != (A.dim, B.dim):
        raise ValueError(f"kappa must be {A.dim} x {B.dim}")
    bad = is_multiplicative(A, B, K)
    if bad is not None:
        raise NotHomomorphism(bad)
    for k in L.kernel.basis:
        if (k @ K % p).any():
            raise KernelNotContained(k)
    if not is_unit_element(B, A.unit @ K % p):
        raise DenominatorNotUnit(A.unit)
    inverses = []
    for d in L.denominators.items:
        ks = d.preimage @ K % p
        if not is_unit_element(B, ks):
            raise DenominatorNotUnit(d.preimage)
        inverses.append(element_inverse(B, ks))

    @functools.lru_cache(maxsize=None)
    def ev(word):
        if word[0] == "one":
            return B.unit
        if word[0] == "gen":
            kind, idx = L.generators[word[1]]
            return K[idx] if kind == "eta" else inverses[idx]
        return B.mul(ev(word[1]), ev(word[2]))

    rho = np.array([ev(w) for w in L.words]).reshape(L.dim, B.dim)
    bad = check_homomorphism(L.ring, B, rho)
    if bad is not None:
        raise NotWellDefined(bad)
    if not np.array_equal(L.eta_coords @ rho % p, K):
        raise NotWellDefined(("commute",))
    return UniversalMap(L, B, rho, True)


def lfr_morphism_check(phi, L1: LocalFunctionRing, L2: LocalFunctionRing) -> bool:
    """phi: L1 -> L2 (dim L1 x dim L2) is a unital ring hom commuting with the
    inclusions into the common E_M."""
    if (L1.context.offsets != L2.context.offsets or L1.field != L2.field):
        raise LayoutMismatch("local function rings live in different E_M")
    phi = np.asarray(phi, dtype=np.int64) % L1.field.p
    if phi.shape != (L1.dim, L2.dim):
        return False
    if check_homomorphism(L1.ring, L2.ring, phi) is not None:
        return False
    return bool(np.array_equal(phi @ L2.inclusion % L1.field.p, L1.inclusion))


@dataclass(frozen=True, eq=False)
class ProductReport:
    ring: LocalFunctionRing
    factors: tuple
    projections: tuple              # dim L x dim L_i
    surjective: tuple
    combined: np.ndarray
    injective: bool
    isomorphic: bool
    iso_pairs: tuple                # (i, j, intertwiner) for isomorphic summands
    twisted_diagonal: bool          # image is the graph of the intertwiners

    @property
    def dim(self) -> int:
        return self.ring.dim

    @property
    def factor_dims(self) -> tuple:
        return tuple(Li.dim for Li in self.factors)


def product_compare(A: AlgebraPresentation, summands, seed: int = 0, cap: int = DEFAULT_CAP) -> ProductReport:
    summands = list(summands)
    L = localize(A, summands, seed, cap)
    parts = [localize(A, [M], seed, cap) for M in summands]
    ctx = L.context
    p = A.p
    projections = []
    for i, Li in enumerate(parts):
        P = np.array([Li.coords(ctx.block(X, i, i)) for X in L.elements]).reshape(L.dim, Li.dim)
        assert check_homomorphism(L.ring, Li.ring, P) is None
        projections.append(P)
    surj = tuple(rank(P, A.field) == Li.dim for P, Li in zip(projections, parts))
    combined = np.hstack(projections)
    r = rank(combined, A.field)
    injective = r == L.dim
    iso = injective and L.dim == sum(Li.dim for Li in parts)
    pairs = []
    twisted = True
    for i in range(len(summands)):
        for j in range(i + 1, len(summands)):
            F = modules_isomorphic(summands[i], summands[j], cap, seed)
            if F is None:
                continue
            pairs.append((i, j, F))
            Finv = mat_inverse(F, A.field)
            for X in L.elements:
                if not np.array_equal(ctx.block(X, j, j), Finv @ ctx.block(X, i, i) @ F % p):
                    twisted = False
    return ProductReport(L, tuple(parts), tuple(projections), surj, combined, injective,
                         iso, tuple(pairs), bool(pairs) and twisted)
