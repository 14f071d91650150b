"""
Right modules as matrix representations.

A module of dimension m over A is a stack of m x m matrices rho(e_i) acting
on row vectors, v . a = v @ rho(a). Then rho(ab) = rho(a) @ rho(b): maps
compose left to right, the way they are written.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import AlgebraPresentation, IdealBasis, kernel_ideal
from .errors import (MeataxeInconclusive, RelationViolated, ShapeError,
                     UnitNotIdentity, ZeroModule)
from .linalg import (EchelonBasis, PrimeField, Subspace, left_nullspace,
                     min_poly, orthogonal_complement, poly_eval_matrix,
                     poly_factor, rank, solve_commutant_system, solve_left)

DEFAULT_CAP = 1 << 16


@dataclass(frozen=True, eq=False)
class ModuleRep:
    algebra: AlgebraPresentation
    action: np.ndarray                 # n x m x m
    blocks: tuple | None = None        # summand offsets for direct sums
    name: str = "M"

    def __post_init__(self):
        act = np.asarray(self.action, dtype=np.int64) % self.algebra.p
        if act.ndim != 3 or act.shape[1] != act.shape[2] or act.shape[0] != self.algebra.dim:
            raise ShapeError(f"need {self.algebra.dim} square action matrices, got shape {act.shape}")
        object.__setattr__(self, "action", act)

    @property
    def dim(self) -> int:
        return self.action.shape[1]

    @property
    def field(self) -> PrimeField:
        return self.algebra.field

    def rho(self, a) -> np.ndarray:
        return np.einsum("i,iab->ab", np.asarray(a, dtype=np.int64), self.action) % self.field.p

    def signature(self) -> tuple:
        """Isomorphism invariant used to pre-filter intertwiner solving."""
        return (self.dim,) + tuple(tuple(min_poly(r, self.field)) for r in self.action)

    def __repr__(self):
        return f"ModuleRep({self.name!r}, dim={self.dim} over {self.algebra.name})"


def relation_violations(A: AlgebraPresentation, action) -> list[tuple[int, int]]:
    act = np.asarray(action, dtype=np.int64)
    prod = np.einsum("iab,jbc->ijac", act, act) % A.p
    expected = np.einsum("ijk,kac->ijac", A.constants, act) % A.p
    bad = np.argwhere((prod != expected).any(axis=(2, 3)))
    return [tuple(int(t) for t in ij) for ij in bad]


def validate_module(A: AlgebraPresentation, mats, name: str = "M") -> ModuleRep:
    M = ModuleRep(A, np.asarray(mats), None, name)
    bad = relation_violations(A, M.action)
    if bad:
        raise RelationViolated(bad)
    if not np.array_equal(M.rho(A.unit), np.eye(M.dim, dtype=np.int64)):
        raise UnitNotIdentity([()])
    return M


def regular_representation(A: AlgebraPresentation) -> ModuleRep:
    """rho(e_j)[i, :] = coordinates of e_i * e_j."""
    return ModuleRep(A, A.constants.transpose(1, 0, 2).copy(), None, f"{A.name}_A")


@dataclass(frozen=True, eq=False)
class StructureMorphism:
    matrix: np.ndarray        # n x m^2, row i = flattened rho(e_i)
    image: Subspace
    kernel: IdealBasis


def structure_morphism(M: ModuleRep) -> StructureMorphism:
    A = M.algebra
    E = M.action.reshape(A.dim, -1)
    image = Subspace(E.shape[1], E, A.field)
    kernel = kernel_ideal(A, E)
    assert image.dim + kernel.dim == A.dim
    return StructureMorphism(E, image, kernel)


def annihilator(A: AlgebraPresentation, M: ModuleRep) -> IdealBasis:
    """ker(eta) = {a : rho(a) = 0}, a two-sided ideal."""
    return kernel_ideal(A, M.action.reshape(A.dim, -1))


def spin(M: ModuleRep, v, *, gens=None) -> Subspace:
    """Smallest subspace containing v and invariant under every generator."""
    field = M.field
    gens = M.action if gens is None else gens
    ech = EchelonBasis(M.dim, field)
    queue = []
    if ech.add(v):
        queue.append(ech.rows[-1])
    while queue:
        w = queue.pop()
        for g in gens:
            if ech.add(w @ g % field.p):
                queue.append(ech.rows[-1])
        if len(ech) == M.dim:
            break
    return ech.subspace()


def submodule(M: ModuleRep, S: Subspace) -> ModuleRep:
    """Action restricted to S, in S's RREF basis."""
    B = S.basis
    mats = []
    for r in M.action:
        X = solve_left(B, B @ r % M.field.p, M.field)
        if X is None:
            raise ValueError("subspace is not invariant")
        mats.append(X)
    return ModuleRep(M.algebra, np.array(mats), None, f"sub({M.name})")


def quotient_module(M: ModuleRep, S: Subspace) -> ModuleRep:
    """Action on M/S, in the basis of standard vectors off S's pivots."""
    keep = S.complement_indices()
    mats = []
    for r in M.action:
        rows = S.reduce(r[keep])
        mats.append(rows[:, keep])
    return ModuleRep(M.algebra, np.array(mats).reshape(len(M.action), len(keep), len(keep)),
                     None, f"quo({M.name})")


def direct_sum(modules, name: str | None = None) -> ModuleRep:
    modules = list(modules)
    A = modules[0].algebra
    if any(N.algebra is not A for N in modules):
        raise ShapeError("summands over different algebras")
    offsets = [0]
    for N in modules:
        offsets.append(offsets[-1] + N.dim)
    m = offsets[-1]
    act = np.zeros((A.dim, m, m), dtype=np.int64)
    for N, lo, hi in zip(modules, offsets, offsets[1:]):
        act[:, lo:hi, lo:hi] = N.action
    return ModuleRep(A, act, tuple(offsets), name or "+".join(N.name for N in modules))


@dataclass(frozen=True)
class SimplicityResult:
    simple: bool
    witness: Subspace | None
    method: str

    def __bool__(self):
        return self.simple


def find_submodule_exhaustive(M: ModuleRep) -> Subspace | None:
    """Spin one vector per line; the first proper result is returned."""
    for v in M.field.projective_points(M.dim):
        S = spin(M, v)
        if S.dim < M.dim:
            return S
    return None


def _meataxe(M: ModuleRep, rng: np.random.Generator, tries: int) -> SimplicityResult | None:
    field = M.field
    p = field.p
    dual_gens = M.action.transpose(0, 2, 1)
    for _ in range(tries):
        coeffs = rng.integers(0, p, size=M.algebra.dim)
        theta = M.rho(coeffs)
        for f, _mult in poly_factor(min_poly(theta, field), p):
            ft = poly_eval_matrix(f, theta, field)
            K = left_nullspace(ft, field)
            S = spin(M, K[0])
            if S.dim < M.dim:
                return SimplicityResult(False, S, "meataxe")
            if K.shape[0] != len(f) - 1:
                continue
            # Norton's test: the dual must also be cyclic from ker f(theta)^T
            Kd = left_nullspace(ft.T, field)
            Sd = spin(M, Kd[0], gens=dual_gens)
            if Sd.dim < M.dim:
                return SimplicityResult(False, orthogonal_complement(Sd), "meataxe-dual")
            return SimplicityResult(True, None, "meataxe")
    return None


def is_simple(M: ModuleRep, seed: int = 0, cap: int = DEFAULT_CAP, *,
              rng: np.random.Generator | None = None, tries: int = 24) -> SimplicityResult:
    """Meataxe irreducibility test.

    Random elements theta of im(eta) are drawn; for an irreducible factor f
    of theta's minimal polynomial, a vector of ker f(theta) is spun. A proper
    result is a submodule. If dim ker f(theta) = deg f and both the module
    and its dual are generated from that kernel, the module is simple. When
    no theta settles the question and q^m <= cap, every line is spun.
    """
    if M.dim == 0:
        raise ZeroModule("the zero module is not simple")
    if M.dim == 1:
        return SimplicityResult(True, None, "dimension-1")
    rng = rng if rng is not None else np.random.default_rng(seed)
    res = _meataxe(M, rng, tries)
    if res is not None:
        return res
    if M.field.p ** M.dim <= cap:
        S = find_submodule_exhaustive(M)
        return SimplicityResult(S is None, S, "exhaustive")
    raise MeataxeInconclusive(f"no decision for dim {M.dim} after {tries} samples")


@dataclass(frozen=True)
class CompositionSeries:
    factors: tuple
    classes: tuple = ()      # index into a list of simples, per factor

    def multiplicities(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for c in self.classes:
            out[c] = out.get(c, 0) + 1
        return dict(sorted(out.items()))


def chop(M: ModuleRep, seed: int = 0, cap: int = DEFAULT_CAP, *,
         rng: np.random.Generator | None = None) -> CompositionSeries:
    """Composition factors, bottom-up (submodule factors before quotient ones)."""
    rng = rng if rng is not None else np.random.default_rng(seed)
    out: list[ModuleRep] = []

    def rec(N: ModuleRep):
        res = is_simple(N, cap=cap, rng=rng)
        if res.simple:
            out.append(N)
            return
        rec(submodule(N, res.witness))
        rec(quotient_module(N, res.witness))

    rec(M)
    assert sum(F.dim for F in out) == M.dim
    return CompositionSeries(tuple(out))


def intertwiner_space(M: ModuleRep, N: ModuleRep) -> Subspace:
    """Module maps M -> N: F with rho_M(a) @ F = F @ rho_N(a), flattened."""
    return solve_commutant_system(list(zip(M.action, N.action)), M.field, shape=(M.dim, N.dim))


def modules_isomorphic(M: ModuleRep, N: ModuleRep, cap: int = DEFAULT_CAP, seed: int = 0,
                       samples: int = 64) -> np.ndarray | None:
    if M.algebra.dim != N.algebra.dim:
        raise ShapeError("modules over different algebras")
    if M.dim != N.dim or M.signature() != N.signature():
        return None
    field = M.field
    m = M.dim
    H = intertwiner_space(M, N)
    if H.dim == 0:
        return None
    if field.p ** H.dim <= cap:
        candidates = (c @ H.basis % field.p for c in field.projective_points(H.dim))
    else:
        rng = np.random.default_rng(seed)
        candidates = (rng.integers(0, field.p, size=H.dim) @ H.basis % field.p
                      for _ in range(samples))
    for flat in candidates:
        F = flat.reshape(m, m)
        if rank(F, field) == m:
            assert all(np.array_equal(a @ F % field.p, F @ b % field.p)
                       for a, b in zip(M.action, N.action))
            return F
    return None


def simples(A: AlgebraPresentation, seed: int = 0, cap: int = DEFAULT_CAP) -> list[ModuleRep]:
    """Simple right A-modules up to isomorphism: the distinct composition
    factors of the regular module."""
    found: list[ModuleRep] = []
    for F in chop(regular_representation(A), seed, cap).factors:
        if not any(modules_isomorphic(S, F, cap) is not None for S in found):
            found.append(ModuleRep(A, F.action, None, f"S{len(found)}"))
    return found


def classify_factors(series: CompositionSeries, simple_list, cap: int = DEFAULT_CAP) -> CompositionSeries:
    classes = []
    for F in series.factors:
        hits = [k for k, S in enumerate(simple_list) if modules_isomorphic(S, F, cap) is not None]
        if len(hits) != 1:
            raise ValueError(f"factor matches {len(hits)} listed simples")
        classes.append(hits[0])
    return CompositionSeries(series.factors, tuple(classes))


def radical(A: AlgebraPresentation, simple_list=None, seed: int = 0, cap: int = DEFAULT_CAP) -> IdealBasis:
    """Jacobson radical as the annihilator of the sum of all simples."""
    simple_list = simple_list if simple_list is not None else simples(A, seed, cap)
    return annihilator(A, direct_sum(simple_list))
