"""Structure constants and Lie-theoretic identification of blade closures.

Every bracket of two basis blades is zero or +-2 times a single basis
blade, so the whole multiplication table fits in two dense integer
arrays: a target index per pair and a coefficient per pair.  All the
invariants read off that table.

The Killing form is diagonal in a blade basis: ad b_i composed with
ad b_j translates every mask by XOR with mask_i ^ mask_j, so its trace
vanishes unless the two masks agree.  The code still computes every
requested entry from the table rather than assuming zeros.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .bott import CompactTypeDescriptor, max_compact
from .clifford import Blade, Multivector, blade_product, blades_anticommute, bracket, mv_product
from .closure import ClosureBasis, blade_closure
from .linalg import (
    DEFAULT_PRIMES,
    EchelonBasis,
    RationalMatrix,
    is_negative_definite,
    kernel_dimension_mod_p,
)
from .spinrep import spin_generators


@dataclass(frozen=True)
class StructureConstants:
    """Single-target bracket table: [b_i, b_j] = coeffs[i,j] * b_targets[i,j].

    targets holds -1 and coeffs holds 0 where the bracket vanishes.
    xor_structured marks tables built from a blade closure, where the
    target mask is always mask_i ^ mask_j; a few routines have fast
    paths that are only valid under that shape.
    """

    d: int
    targets: np.ndarray
    coeffs: np.ndarray
    masks: tuple[int, ...] | None = None
    n: int | None = None
    xor_structured: bool = False

    @classmethod
    def from_table(cls, targets, coeffs) -> "StructureConstants":
        t = np.asarray(targets, dtype=np.int32)
        c = np.asarray(coeffs, dtype=np.int64)
        if t.shape != c.shape or t.ndim != 2 or t.shape[0] != t.shape[1]:
            raise ValueError("targets and coeffs must be equal square matrices")
        return cls(d=t.shape[0], targets=t, coeffs=c)

    def entry(self, i: int, j: int) -> tuple[int, int] | None:
        """(target index, coefficient) of [b_i, b_j], or None when zero."""
        if self.coeffs[i, j] == 0:
            return None
        return int(self.targets[i, j]), int(self.coeffs[i, j])


def structure_constants(basis: ClosureBasis) -> StructureConstants:
    """Tabulate all pairwise brackets of a closed blade basis.

    Row at a time, vectorized: the reordering count t(a, b) is summed
    bit-by-bit over a, the anticommutation test is the parity of
    |a||b| - |a & b|, and a bracket target outside the basis raises.
    """
    masks = np.array(basis.masks, dtype=np.int64)
    d = len(masks)
    n = basis.n
    pos = np.full(1 << n, -1, dtype=np.int32)
    pos[masks] = np.arange(d, dtype=np.int32)
    pc = np.bitwise_count(masks).astype(np.int16)

    targets = np.full((d, d), -1, dtype=np.int32)
    coeffs = np.zeros((d, d), dtype=np.int8)
    for i in range(d):
        m = int(masks[i])
        pm = m.bit_count()
        inter = np.bitwise_count(masks & m)
        anti = ((np.uint8(pm & 1) & (pc & 1).astype(np.uint8)) ^ (inter & np.uint8(1))).astype(bool)
        if not np.any(anti):
            continue
        others = masks[anti]
        # t(m, b) = sum over set bits i of m of |{j in b : j < i}|
        t_par = np.zeros(others.shape, dtype=np.int64)
        mm = m
        while mm:
            low = mm & -mm
            t_par += np.bitwise_count(others & (low - 1))
            mm ^= low
        sign = np.where(t_par & 1, -2, 2).astype(np.int8)
        tmask = others ^ m
        tgt = pos[tmask]
        if np.any(tgt < 0):
            bad = int(tmask[tgt < 0][0])
            raise ValueError(f"basis not closed: bracket target {bad:#x} missing")
        targets[i, anti] = tgt
        coeffs[i, anti] = sign
    return StructureConstants(
        d=d, targets=targets, coeffs=coeffs, masks=basis.masks, n=n, xor_structured=True
    )


def bracket_coords(sc: StructureConstants, x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Coordinates of [x, y] for integer coordinate vectors x, y."""
    x = np.asarray(x, dtype=np.int64)
    y = np.asarray(y, dtype=np.int64)
    out = np.zeros(sc.d, dtype=np.int64)
    ii, jj = np.nonzero(sc.coeffs)
    vals = x[ii] * y[jj] * sc.coeffs[ii, jj].astype(np.int64)
    np.add.at(out, sc.targets[ii, jj], vals)
    return out


def ad_matrix(sc: StructureConstants, x: np.ndarray) -> np.ndarray:
    """Matrix of ad(x) acting on coordinate columns, as int64."""
    x = np.asarray(x, dtype=np.int64)
    d = sc.d
    a = np.zeros((d, d), dtype=np.int64)
    ii, jj = np.nonzero(sc.coeffs)
    vals = x[ii] * sc.coeffs[ii, jj].astype(np.int64)
    np.add.at(a.ravel(), sc.targets[ii, jj].astype(np.int64) * d + jj, vals)
    return a


def antisymmetry_holds(sc: StructureConstants) -> bool:
    c = sc.coeffs
    t = sc.targets
    if not np.array_equal(c, -c.T):
        return False
    both = (c != 0) & (c.T != 0)
    return bool(np.all(t[both] == t.T[both])) and bool(np.all(c.diagonal() == 0))


def table_jacobi_holds(sc: StructureConstants, *, samples: int = 2000, seed: int = 0) -> bool:
    """[[i,j],k] + [[j,k],i] + [[k,i],j] = 0, exhaustively for d <= 50."""

    def term(i: int, j: int, k: int, acc: dict[int, int]) -> None:
        c1 = int(sc.coeffs[i, j])
        if c1 == 0:
            return
        t1 = int(sc.targets[i, j])
        c2 = int(sc.coeffs[t1, k])
        if c2 == 0:
            return
        t2 = int(sc.targets[t1, k])
        acc[t2] = acc.get(t2, 0) + c1 * c2

    def triple_ok(i: int, j: int, k: int) -> bool:
        acc: dict[int, int] = {}
        term(i, j, k, acc)
        term(j, k, i, acc)
        term(k, i, j, acc)
        return all(v == 0 for v in acc.values())

    d = sc.d
    if d <= 50:
        return all(
            triple_ok(i, j, k)
            for i in range(d)
            for j in range(i + 1, d)
            for k in range(j + 1, d)
        )
    rng = random.Random(seed)
    return all(
        triple_ok(rng.randrange(d), rng.randrange(d), rng.randrange(d))
        for _ in range(samples)
    )


def killing_diagonal(sc: StructureConstants) -> np.ndarray:
    """Diagonal K_ii = sum_k c_ik * c_{i, t_ik}, as int64."""
    out = np.zeros(sc.d, dtype=np.int64)
    ii, kk = np.nonzero(sc.coeffs)
    back = sc.coeffs[ii, sc.targets[ii, kk]].astype(np.int64)
    np.add.at(out, ii, sc.coeffs[ii, kk].astype(np.int64) * back)
    return out


def killing_entry(sc: StructureConstants, i: int, j: int) -> int:
    """Trace of ad b_i composed with ad b_j, straight from the table."""
    ks = np.nonzero(sc.coeffs[j])[0]
    if ks.size == 0:
        return 0
    t1 = sc.targets[j, ks]
    c2 = sc.coeffs[i, t1].astype(np.int64)
    closes = (c2 != 0) & (sc.targets[i, t1] == ks)
    return int(np.sum(sc.coeffs[j, ks].astype(np.int64)[closes] * c2[closes]))


def killing_form(sc: StructureConstants) -> RationalMatrix:
    """Full Killing matrix; diagonal by the XOR-translation argument.

    For a blade table ad b_i o ad b_j shifts mask_k by mask_i ^ mask_j,
    a fixed-point-free permutation of the basis when i != j, so only the
    diagonal survives.  Assembled here from the computed diagonal.
    """
    if not sc.xor_structured:
        entries = [[killing_entry(sc, i, j) for j in range(sc.d)] for i in range(sc.d)]
        return RationalMatrix(entries)
    diag = killing_diagonal(sc)
    entries = [
        [Fraction(int(diag[i])) if i == j else Fraction(0) for j in range(sc.d)]
        for i in range(sc.d)
    ]
    return RationalMatrix(entries)


def killing_negative_definite_check(
    sc: StructureConstants, *, exact: bool, seed: int = 0, primes=DEFAULT_PRIMES
) -> tuple[bool, str]:
    """Definiteness of the Killing form, exact or probabilistic.

    Exact mode runs the fraction-free leading-minor test.  The
    probabilistic mode certifies nondegeneracy by full mod-p rank at
    several primes and spot-checks 20 random 2x2 principal minors
    exactly; with all diagonal entries negative that is the stated
    evidence, not a proof.
    """
    d = sc.d
    if exact:
        ok = is_negative_definite(killing_form(sc))
        return ok, f"exact leading-minor test, d={d}"
    diag = killing_diagonal(sc)
    if not np.all(diag < 0):
        return False, "diagonal entry >= 0"
    neg_k = np.diag(-diag)
    for p in primes:
        if kernel_dimension_mod_p(neg_k, p) != 0:
            return False, f"-K drops rank mod {p}"
    rng = random.Random(seed)
    for _ in range(20):
        i = rng.randrange(d)
        j = rng.randrange(d)
        while j == i:
            j = rng.randrange(d)
        kij = killing_entry(sc, i, j)
        kji = killing_entry(sc, j, i)
        det = int(diag[i]) * int(diag[j]) - kij * kji
        if det <= 0:
            return False, f"2x2 principal minor ({i},{j}) not positive"
    return True, f"mod-p rank profile over {len(primes)} primes + 20 exact 2x2 minors, d={d}"


def center_dim(sc: StructureConstants) -> int:
    """Dimension of the centralizer of the whole table.

    For XOR-structured tables the constraint system decouples (targets
    are injective per column), so the center is spanned by the basis
    vectors whose coefficient row vanishes.  Other tables fall back to
    sifting one constraint row per (column, target) group.
    """
    if sc.xor_structured:
        return int(np.sum(~np.any(sc.coeffs != 0, axis=1)))
    constraints = EchelonBasis(sc.d)
    for j in range(sc.d):
        groups: dict[int, dict[int, int]] = {}
        for i in np.nonzero(sc.coeffs[:, j])[0]:
            t = int(sc.targets[i, j])
            groups.setdefault(t, {})[int(i)] = int(sc.coeffs[i, j])
        for row in groups.values():
            constraints.sift(row)
    return sc.d - constraints.rank


def derived_dim(sc: StructureConstants) -> int:
    """Dimension of the span of all brackets (single-target tables)."""
    nz = sc.coeffs != 0
    if not np.any(nz):
        return 0
    return int(np.unique(sc.targets[nz]).size)


@dataclass(frozen=True)
class RankTrial:
    trial: int
    kernel_by_prime: dict[int, int]

    @property
    def minimum(self) -> int:
        return min(self.kernel_by_prime.values())


def rank_trials(
    sc: StructureConstants,
    trials: int = 5,
    *,
    seed: int = 0,
    primes=DEFAULT_PRIMES,
) -> list[RankTrial]:
    """Kernel dimensions of ad(x) for random integer x, per trial and prime."""
    rng = random.Random(seed)
    log: list[RankTrial] = []
    for t in range(trials):
        x = np.array([rng.randint(-9, 9) for _ in range(sc.d)], dtype=np.int64)
        while not np.any(x):
            x = np.array([rng.randint(-9, 9) for _ in range(sc.d)], dtype=np.int64)
        a = ad_matrix(sc, x)
        log.append(
            RankTrial(trial=t, kernel_by_prime={p: kernel_dimension_mod_p(a, p) for p in primes})
        )
    return log


def rank_estimate(
    sc: StructureConstants,
    trials: int = 5,
    *,
    seed: int = 0,
    primes=DEFAULT_PRIMES,
) -> int:
    """Minimum observed generic centralizer dimension (the rank, generically)."""
    return min(t.minimum for t in rank_trials(sc, trials, seed=seed, primes=primes))


@dataclass(frozen=True)
class SplitResult:
    """Eigenspace split under right multiplication by the top blade."""

    n: int
    applicable: bool
    reason: str = ""
    omega_central: bool | None = None
    omega_square: int | None = None
    dims: tuple[int, int] | None = None
    cross_vanishes: bool | None = None
    plus_closed: bool | None = None
    minus_closed: bool | None = None
    exhaustive: bool | None = None

    @property
    def passed(self) -> bool:
        return bool(
            self.applicable
            and self.omega_central
            and self.omega_square == 1
            and self.dims is not None
            and self.dims[0] == self.dims[1]
            and self.cross_vanishes
            and self.plus_closed
            and self.minus_closed
        )

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "applicable": self.applicable,
            "reason": self.reason,
            "omega_central": self.omega_central,
            "omega_square": self.omega_square,
            "dims": list(self.dims) if self.dims is not None else None,
            "cross_vanishes": self.cross_vanishes,
            "plus_closed": self.plus_closed,
            "minus_closed": self.minus_closed,
            "exhaustive": self.exhaustive,
            "passed": self.passed,
        }


def split_check(
    basis: ClosureBasis, *, seed: int = 0, pair_limit: int = 256, samples: int = 500
) -> SplitResult:
    """Split the closure along the top-blade eigenspaces and verify both ideals.

    Only meaningful when the top blade is central and squares to +1,
    i.e. n == 1 mod 4.  Eigenvectors come from the mask/complement
    pairing e_m +- s e_{~m}; the two eigenspaces must have equal
    dimension, bracket into themselves, and annihilate each other.
    Pair checks are exhaustive up to pair_limit vectors per side,
    seeded sampling beyond that.
    """
    n = basis.n
    if n % 2 == 0:
        return SplitResult(n=n, applicable=False, reason="top blade is not central for even n")
    if n % 4 == 3:
        return SplitResult(n=n, applicable=False, reason="top blade squares to -1 when n == 3 mod 4")

    full = (1 << n) - 1
    omega_sq = blade_product(Blade(full), Blade(full)).sign
    central = all(not blades_anticommute(m, full) for m in basis.masks)
    if omega_sq != 1 or not central:
        return SplitResult(n=n, applicable=True, omega_central=central, omega_square=omega_sq,
                           reason="top blade failed centrality or square check")

    mask_set = set(basis.masks)
    omega = Multivector({full: 1}, n)
    plus: list[Multivector] = []
    minus: list[Multivector] = []
    for m in basis.masks:
        mb = full ^ m
        if mb not in mask_set:
            return SplitResult(n=n, applicable=True, omega_central=True, omega_square=1,
                               reason=f"complement of {m:#x} missing from basis")
        if m > mb:
            continue
        s = blade_product(Blade(m), Blade(full)).sign
        plus.append(Multivector({m: 1, mb: s}, n))
        minus.append(Multivector({m: 1, mb: -s}, n))

    half = len(plus)
    exhaustive = half <= pair_limit
    rng = random.Random(seed)

    def eigen_ok(z: Multivector, val: int) -> bool:
        return z.is_zero() or mv_product(z, omega) == z.scale(val)

    if exhaustive:
        cross_pairs = [(i, j) for i in range(half) for j in range(half)]
        same_pairs = [(i, j) for i in range(half) for j in range(i + 1, half)]
    else:
        cross_pairs = [(rng.randrange(half), rng.randrange(half)) for _ in range(samples)]
        same_pairs = cross_pairs
    cross = all(bracket(plus[i], minus[j]).is_zero() for i, j in cross_pairs)
    p_closed = all(eigen_ok(bracket(plus[i], plus[j]), 1) for i, j in same_pairs)
    m_closed = all(eigen_ok(bracket(minus[i], minus[j]), -1) for i, j in same_pairs)

    return SplitResult(
        n=n,
        applicable=True,
        omega_central=True,
        omega_square=1,
        dims=(half, half),
        cross_vanishes=cross,
        plus_closed=p_closed,
        minus_closed=m_closed,
        exhaustive=exhaustive,
    )


@dataclass
class AnalysisBundle:
    """Everything the classifier and the verifier share for one n."""

    n: int
    basis: ClosureBasis
    sc: StructureConstants
    center: int
    derived: int
    killing_ok: bool
    killing_detail: str
    killing_mode: str
    rank_log: list[RankTrial]
    rank: int
    split: SplitResult
    timings_ms: dict[str, float] = field(default_factory=dict)


def analyze(
    n: int,
    *,
    seed: int = 0,
    trials: int = 5,
    allow_large: bool = False,
    exact_killing: bool | None = None,
) -> AnalysisBundle:
    """Run the full invariant battery for one ambient dimension."""
    if n < 3:
        raise ValueError(f"analysis needs n >= 3, got {n}")
    timings: dict[str, float] = {}

    t0 = time.perf_counter()
    basis = blade_closure(n, spin_generators(n).masks, allow_large=allow_large)
    timings["closure"] = (time.perf_counter() - t0) * 1000.0

    t0 = time.perf_counter()
    sc = structure_constants(basis)
    timings["structure"] = (time.perf_counter() - t0) * 1000.0

    t0 = time.perf_counter()
    center = center_dim(sc)
    derived = derived_dim(sc)
    timings["center"] = (time.perf_counter() - t0) * 1000.0

    exact = (n <= 8) if exact_killing is None else exact_killing
    t0 = time.perf_counter()
    killing_ok, killing_detail = killing_negative_definite_check(sc, exact=exact, seed=seed)
    timings["killing"] = (time.perf_counter() - t0) * 1000.0

    t0 = time.perf_counter()
    log = rank_trials(sc, trials, seed=seed)
    rank = min(t.minimum for t in log)
    timings["rank"] = (time.perf_counter() - t0) * 1000.0

    t0 = time.perf_counter()
    split = split_check(basis, seed=seed)
    timings["split"] = (time.perf_counter() - t0) * 1000.0

    return AnalysisBundle(
        n=n,
        basis=basis,
        sc=sc,
        center=center,
        derived=derived,
        killing_ok=killing_ok,
        killing_detail=killing_detail,
        killing_mode="exact" if exact else "probabilistic",
        rank_log=log,
        rank=rank,
        split=split,
        timings_ms=timings,
    )


@dataclass(frozen=True)
class ClassificationResult:
    n: int
    dim: int
    center_dim: int
    derived_dim: int
    rank: int
    killing_negative_definite: bool
    killing_mode: str
    split_dims: tuple[int, int] | None
    matched_type: CompactTypeDescriptor
    verdict: bool
    failures: tuple[str, ...]

    @property
    def display(self) -> str:
        return str(self.matched_type)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "dim": self.dim,
            "center_dim": self.center_dim,
            "derived_dim": self.derived_dim,
            "rank": self.rank,
            "killing_negative_definite": self.killing_negative_definite,
            "killing_mode": self.killing_mode,
            "split_dims": list(self.split_dims) if self.split_dims else None,
            "matched_type": self.matched_type.to_json(),
            "display": self.display,
            "verdict": self.verdict,
            "failures": list(self.failures),
        }


def classify_bundle(bundle: AnalysisBundle) -> ClassificationResult:
    """Match computed invariants against the expected compact type."""
    n = bundle.n
    dim = bundle.basis.dim
    failures: list[str] = []

    if n == 3:
        matched = CompactTypeDescriptor(family="u", param=2, summands=1)
        if dim != 4:
            failures.append(f"dim {dim} != 4")
        if bundle.center != 1:
            failures.append(f"center {bundle.center} != 1")
        if bundle.derived != 3:
            failures.append(f"derived dim {bundle.derived} != 3")
        if bundle.rank != 2:
            failures.append(f"rank {bundle.rank} != 2")
    else:
        matched = max_compact(n)
        if dim != matched.dimension():
            failures.append(f"dim {dim} != {matched.dimension()}")
        if bundle.rank != matched.rank():
            failures.append(f"rank {bundle.rank} != {matched.rank()}")
        if not bundle.killing_ok:
            failures.append("Killing form not negative definite")
        if bundle.center != 0:
            failures.append(f"center {bundle.center} != 0")
        want_split = matched.summands == 2
        if bundle.split.applicable != want_split:
            failures.append("split applicability does not match summand count")
        if want_split:
            if not bundle.split.passed:
                failures.append(f"split check failed: {bundle.split.reason or 'ideal checks'}")
            elif bundle.split.dims is not None and sum(bundle.split.dims) != dim:
                failures.append("split dims do not sum to dim")

    return ClassificationResult(
        n=n,
        dim=dim,
        center_dim=bundle.center,
        derived_dim=bundle.derived,
        rank=bundle.rank,
        killing_negative_definite=bundle.killing_ok,
        killing_mode=bundle.killing_mode,
        split_dims=bundle.split.dims if bundle.split.applicable else None,
        matched_type=matched,
        verdict=not failures,
        failures=tuple(failures),
    )


def classify(
    n: int,
    *,
    seed: int = 0,
    trials: int = 5,
    allow_large: bool = False,
    exact_killing: bool | None = None,
) -> ClassificationResult:
    """Compute invariants for one n and return the matched compact type."""
    bundle = analyze(
        n, seed=seed, trials=trials, allow_large=allow_large, exact_killing=exact_killing
    )
    return classify_bundle(bundle)
