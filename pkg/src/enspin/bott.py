"""Cartan-Bott periodicity tables.

The isomorphism type of the real Clifford algebra C(R^n, q) is periodic
in n mod 8, and so is the type of its maximal semisimple compact Lie
subalgebra.  This module holds both eight-case tables as data, plus the
compact-type dimension and rank formulas used to check computed closures
against the expected types.
"""

from __future__ import annotations

from dataclasses import dataclass

from .deltas import lower_bound_dim

RING_DIM = {"R": 1, "C": 2, "H": 4}


@dataclass(frozen=True)
class MatrixAlgebraDescriptor:
    """One or two matrix-ring summands over R/C/H, tensored with M(t, R)."""

    summands: tuple[tuple[str, int], ...]
    tensor_size: int

    def __post_init__(self) -> None:
        if len(self.summands) not in (1, 2):
            raise ValueError("descriptor must have one or two summands")
        for ring, size in self.summands:
            if ring not in RING_DIM:
                raise ValueError(f"unknown base ring {ring!r}")
            if size < 1 or self.tensor_size < 1:
                raise ValueError("matrix sizes must be positive")

    def real_dimension(self) -> int:
        return sum(m * m * RING_DIM[ring] for ring, m in self.summands) * self.tensor_size ** 2

    def __str__(self) -> str:
        def part(ring: str, m: int) -> str:
            return ring if m == 1 else f"M({m},{ring})"

        body = " ⊕ ".join(part(r, m) for r, m in self.summands)
        if self.tensor_size == 1:
            return body
        if len(self.summands) == 2:
            body = f"({body})"
        return f"{body} ⊗ M({self.tensor_size},R)"

    def to_json(self) -> dict:
        return {
            "summands": [{"ring": r, "size": m} for r, m in self.summands],
            "tensor_size": self.tensor_size,
            "real_dimension": self.real_dimension(),
            "display": str(self),
        }


@dataclass(frozen=True)
class CompactTypeDescriptor:
    """A compact Lie algebra type: so/su/sp/u(N), possibly two equal summands."""

    family: str
    param: int
    summands: int = 1

    def __post_init__(self) -> None:
        if self.family not in ("so", "su", "sp", "u"):
            raise ValueError(f"unknown family {self.family!r}")
        if self.param < 1 or self.summands not in (1, 2):
            raise ValueError("bad compact type parameters")

    def dimension(self) -> int:
        N = self.param
        per = {
            "so": N * (N - 1) // 2,
            "su": N * N - 1,
            "sp": N * (2 * N + 1),
            "u": N * N,
        }[self.family]
        return per * self.summands

    def rank(self) -> int:
        N = self.param
        per = {"so": N // 2, "su": N - 1, "sp": N, "u": N}[self.family]
        return per * self.summands

    def __str__(self) -> str:
        one = f"{self.family}({self.param})"
        return " ⊕ ".join([one] * self.summands)

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "param": self.param,
            "summands": self.summands,
            "dimension": self.dimension(),
            "rank": self.rank(),
            "display": str(self),
        }


def bott_algebra(n: int) -> MatrixAlgebraDescriptor:
    """Isomorphism type of C(R^n, q) as a matrix algebra, by n mod 8."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    r = n % 8
    if r == 0:
        return MatrixAlgebraDescriptor((("R", 1),), 2 ** (n // 2))
    if r == 1:
        return MatrixAlgebraDescriptor((("R", 1), ("R", 1)), 2 ** ((n - 1) // 2))
    if r == 2:
        return MatrixAlgebraDescriptor((("R", 2),), 2 ** ((n - 2) // 2))
    if r == 3:
        return MatrixAlgebraDescriptor((("C", 2),), 2 ** ((n - 3) // 2))
    if r == 4:
        return MatrixAlgebraDescriptor((("H", 2),), 2 ** ((n - 4) // 2))
    if r == 5:
        return MatrixAlgebraDescriptor((("H", 2), ("H", 2)), 2 ** ((n - 5) // 2))
    if r == 6:
        return MatrixAlgebraDescriptor((("H", 4),), 2 ** ((n - 6) // 2))
    return MatrixAlgebraDescriptor((("C", 8),), 2 ** ((n - 7) // 2))


def max_compact(n: int) -> CompactTypeDescriptor:
    """Maximal semisimple compact Lie subalgebra type of C(R^n, q), by n mod 8."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    r = n % 8
    if r == 0:
        return CompactTypeDescriptor("so", 2 ** (n // 2))
    if r == 1:
        return CompactTypeDescriptor("so", 2 ** ((n - 1) // 2), summands=2)
    if r == 2:
        return CompactTypeDescriptor("so", 2 ** (n // 2))
    if r == 3:
        return CompactTypeDescriptor("su", 2 ** ((n - 1) // 2))
    if r == 4:
        return CompactTypeDescriptor("sp", 2 ** ((n - 2) // 2))
    if r == 5:
        return CompactTypeDescriptor("sp", 2 ** ((n - 3) // 2), summands=2)
    if r == 6:
        return CompactTypeDescriptor("sp", 2 ** ((n - 2) // 2))
    return CompactTypeDescriptor("su", 2 ** ((n - 1) // 2))


def expected_dim(n: int) -> int:
    """Dimension of the expected compact type; equals lower_bound_dim(n) for n >= 4."""
    if n < 4:
        raise ValueError(f"n must be >= 4, got {n}")
    return max_compact(n).dimension()


def expected_rank(n: int) -> int:
    """Rank of the expected compact type."""
    if n < 4:
        raise ValueError(f"n must be >= 4, got {n}")
    return max_compact(n).rank()


def dims_agree(n: int) -> bool:
    """Cross-check: type dimension equals the blade-count lower bound."""
    return expected_dim(n) == lower_bound_dim(n)
