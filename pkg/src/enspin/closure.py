"""Lie subalgebra closure inside the Clifford algebra.

Two routes.  The fast route works on blade masks only: the bracket of
two basis blades is zero or +-2 times a single blade, so the subalgebra
generated by blades is spanned by blades and closure is a worklist over
masks (pair anticommutes -> insert XOR).  The general route brackets
arbitrary multivectors and sifts the results into an exact echelon
basis; it exists to cross-validate the fast route.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .clifford import Multivector, bracket
from .linalg import EchelonBasis

#: Worklists above this ambient dimension need an explicit opt-in.
DEFAULT_AMBIENT_CAP = 16
#: Hard ceiling: the membership table is 2^n bytes.
MAX_AMBIENT = 24


def _popcounts(arr: np.ndarray) -> np.ndarray:
    return np.bitwise_count(arr).astype(np.int16)


@dataclass(frozen=True)
class ClosureBasis:
    """Canonical blade-mask spanning set of a bracket-closed subalgebra."""

    n: int
    masks: tuple[int, ...]
    provenance: tuple[int, ...]

    @property
    def dim(self) -> int:
        return len(self.masks)

    def index(self) -> dict[int, int]:
        return {m: i for i, m in enumerate(self.masks)}

    def is_closed(self) -> bool:
        """Re-check the defining closure property (quadratic, for tests)."""
        from .clifford import blades_anticommute

        mask_set = set(self.masks)
        return all(
            a ^ b in mask_set
            for i, a in enumerate(self.masks)
            for b in self.masks[i + 1:]
            if blades_anticommute(a, b)
        )

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "dim": self.dim,
            "masks": [f"{m:#x}" for m in self.masks],
        }


def blade_closure(n: int, generators: Iterable[int], *, allow_large: bool = False) -> ClosureBasis:
    """Least superset of the generator masks closed under XOR of anticommuting pairs.

    Its cardinality is the real dimension of the generated Lie
    subalgebra.  Worklist over masks; the pair sweep is vectorized in
    batches, and every unordered pair is tested by the time the later
    of its two masks has been processed.
    """
    if n < 1:
        raise ValueError(f"ambient dimension must be >= 1, got {n}")
    if n > MAX_AMBIENT:
        raise ValueError(f"ambient dimension {n} exceeds hard ceiling {MAX_AMBIENT}")
    if n > DEFAULT_AMBIENT_CAP and not allow_large:
        raise ValueError(
            f"ambient dimension {n} exceeds default cap {DEFAULT_AMBIENT_CAP}; "
            "pass allow_large=True to override"
        )
    gens = sorted({int(g) for g in generators})
    if not gens:
        raise ValueError("generator list is empty")
    limit = 1 << n
    for g in gens:
        if g <= 0 or g >= limit:
            raise ValueError(f"generator mask {g:#x} not a nonzero mask within {n} bits")

    present = np.zeros(limit, dtype=bool)
    present[gens] = True
    members = np.array(gens, dtype=np.int64)
    queue = list(gens)
    head = 0
    while head < len(queue):
        # Batch size keeps the pairwise (batch x members) tables ~32 MB.
        batch_n = max(1, (1 << 22) // max(1, len(members)))
        batch = np.array(queue[head:head + batch_n], dtype=np.int64)
        head += len(batch)
        pc_b = _popcounts(batch)
        pc_m = _popcounts(members)
        inter = np.bitwise_count(batch[:, None] & members[None, :])
        anti = (((pc_b & 1)[:, None].astype(np.uint8) & (pc_m & 1)[None, :].astype(np.uint8))
                ^ (inter & np.uint8(1))).astype(bool)
        targets = (batch[:, None] ^ members[None, :])[anti]
        if targets.size:
            fresh = np.unique(targets[~present[targets]])
            if fresh.size:
                present[fresh] = True
                members = np.concatenate([members, fresh])
                queue.extend(int(x) for x in fresh)
    return ClosureBasis(n=n, masks=tuple(sorted(int(m) for m in members)), provenance=tuple(gens))


def predicted_masks(n: int) -> frozenset[int]:
    """The mask set the closure of the spin generators is expected to span.

    All masks of grade 2 or 3 mod 4; the full mask is excluded when
    n == 3 (mod 4) and n > 3 (it is unreachable there), and kept at
    n = 3 where it is itself a generator.
    """
    if n < 3:
        raise ValueError(f"n must be >= 3, got {n}")
    full = (1 << n) - 1
    out = {m for m in range(1, 1 << n) if m.bit_count() % 4 in (2, 3)}
    if n % 4 == 3 and n > 3:
        out.discard(full)
    return frozenset(out)


@dataclass(frozen=True)
class LemmaContainment:
    """Outcome of comparing a computed closure against the predicted mask set."""

    n: int
    all_expected_present: bool
    full_mask_present: bool
    full_mask_expected: bool
    wrong_grade_masks: int
    missing_masks: int
    extra_masks: int
    exactly_predicted: bool

    @property
    def passed(self) -> bool:
        return self.exactly_predicted

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "all_expected_present": self.all_expected_present,
            "full_mask_present": self.full_mask_present,
            "full_mask_expected": self.full_mask_expected,
            "wrong_grade_masks": self.wrong_grade_masks,
            "missing_masks": self.missing_masks,
            "extra_masks": self.extra_masks,
            "exactly_predicted": self.exactly_predicted,
        }


def lemma_containment_check(n: int, basis: ClosureBasis) -> LemmaContainment:
    """Check a spin-generator closure against the predicted grade-(2,3 mod 4) span."""
    if n < 3:
        raise ValueError(f"n must be >= 3, got {n}")
    have = set(basis.masks)
    want = predicted_masks(n)
    full = (1 << n) - 1
    wrong = sum(1 for m in have if m.bit_count() % 4 in (0, 1))
    missing = len(want - have)
    extra = len(have - want)
    return LemmaContainment(
        n=n,
        all_expected_present=missing == 0,
        full_mask_present=full in have,
        full_mask_expected=full in want,
        wrong_grade_masks=wrong,
        missing_masks=missing,
        extra_masks=extra,
        exactly_predicted=have == want,
    )


@dataclass
class GeneralClosureBasis:
    """Echelon basis of the Lie span of arbitrary multivector generators."""

    n: int
    echelon: EchelonBasis
    generators: tuple[Multivector, ...]

    @property
    def rank(self) -> int:
        return self.echelon.rank

    def contains_mask(self, mask: int) -> bool:
        return self.echelon.contains({mask: 1})


def general_closure(n: int, generators: Sequence[Multivector]) -> GeneralClosureBasis:
    """Close the span of the generators under the bracket by sift-until-fixpoint.

    Worklist in breadth-first order: each accepted vector is bracketed
    against everything accepted before it, so every unordered pair is
    handled exactly once and the termination bound is the ambient 2^n.
    """
    gens = tuple(generators)
    if not gens:
        raise ValueError("generator list is empty")
    for g in gens:
        if g.dim != n:
            raise ValueError(f"generator dimension {g.dim} != ambient {n}")
        if g.is_zero():
            raise ValueError("zero generator")
    basis = EchelonBasis(1 << n)
    reps: list[Multivector] = []
    for g in gens:
        if basis.sift(g.terms):
            reps.append(g)
    q = 0
    while q < len(reps):
        for i in range(q):
            z = bracket(reps[i], reps[q])
            if not z.is_zero() and basis.sift(z.terms):
                reps.append(z)
                if len(reps) > (1 << n):
                    raise AssertionError("closure exceeded ambient dimension")
        q += 1
    return GeneralClosureBasis(n=n, echelon=basis, generators=gens)
