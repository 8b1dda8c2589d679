"""Spin-representation generators and their defining relations.

The generators sit inside the Clifford algebra on n generators:

    A_1 = v1 v2,   A_2 = v1 v2 v3,   A_j = v_{j-1} v_j   (3 <= j <= n)

Two generators are adjacent in the E_n diagram exactly when their index
sets share one element; adjacency makes them anticommute, disjoint or
doubly-overlapping index sets make them commute.  The machine check
verifies the Berman-style presentation directly:

    A_i^2 = -1
    [A_i, A_j] = 0                 when i, j not adjacent
    [A_i, [A_i, A_j]] = -4 A_j     when i, j adjacent

and the half-scaled variant Y_i = A_i / 2 with Y_i^2 = -1/4 and
[Y_i, [Y_i, Y_j]] = -Y_j on edges.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .clifford import Blade, Multivector, bracket, mv_product


@dataclass(frozen=True)
class EnDiagram:
    """E_n Dynkin graph on nodes 1..n (Bourbaki branch node convention)."""

    n: int
    edges: frozenset[frozenset[int]]

    def adjacent(self, i: int, j: int) -> bool:
        return frozenset((i, j)) in self.edges

    def edge_list(self) -> list[tuple[int, int]]:
        return sorted(tuple(sorted(e)) for e in self.edges)

    def ascii(self) -> str:
        """One-line chain with the branch node hanging off node 4."""
        chain = [1] + list(range(3, self.n + 1))
        top = "    ".join(str(i) for i in chain)
        line = "o" + "----o" * (len(chain) - 1)
        if self.n < 4:
            return f"{top}\n{line}"
        # node 2 attaches under node 4, which sits third on the chain
        pad = " " * 10
        return f"{top}\n{line}\n{pad}|\n{pad}o  2"


def en_adjacency(n: int) -> EnDiagram:
    """Edges {1,3}, {i,i+1} for 3 <= i < n, and {2,4} once n >= 4."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    edges: set[frozenset[int]] = set()
    if n >= 3:
        edges.add(frozenset((1, 3)))
    for i in range(3, n):
        edges.add(frozenset((i, i + 1)))
    if n >= 4:
        edges.add(frozenset((2, 4)))
    return EnDiagram(n=n, edges=frozenset(edges))


@dataclass(frozen=True)
class SpinGenerators:
    n: int
    blades: tuple[Blade, ...]

    @property
    def masks(self) -> tuple[int, ...]:
        return tuple(b.mask for b in self.blades)

    def multivectors(self) -> list[Multivector]:
        return [Multivector.from_blade(b, self.n) for b in self.blades]


def spin_generators(n: int) -> SpinGenerators:
    if n < 3:
        raise ValueError(f"spin generators need n >= 3, got {n}")
    blades = [Blade(0b11), Blade(0b111)]
    for j in range(3, n + 1):
        blades.append(Blade((1 << (j - 2)) | (1 << (j - 1))))
    return SpinGenerators(n=n, blades=tuple(blades))


@dataclass
class RelationReport:
    """Pass/fail record for the full generator presentation at one n."""

    n: int
    squares: dict[int, bool]
    pairs: dict[tuple[int, int], bool]
    scaled_ok: bool
    failures: list[str]

    @property
    def all_pass(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "squares_ok": all(self.squares.values()),
            "pairs_ok": all(self.pairs.values()),
            "scaled_ok": self.scaled_ok,
            "failures": list(self.failures),
            "all_pass": self.all_pass,
        }


def verify_relations(n: int) -> RelationReport:
    """Machine-check the presentation for every generator and ordered pair."""
    gens = spin_generators(n)
    diagram = en_adjacency(n)
    mvs = gens.multivectors()
    minus_one = Multivector.scalar(-1, n)
    squares: dict[int, bool] = {}
    pairs: dict[tuple[int, int], bool] = {}
    failures: list[str] = []

    for i, a in enumerate(mvs, start=1):
        ok = mv_product(a, a) == minus_one
        squares[i] = ok
        if not ok:
            failures.append(f"A_{i}^2 != -1")

    for i, a in enumerate(mvs, start=1):
        for j, b in enumerate(mvs, start=1):
            if i == j:
                continue
            br = bracket(a, b)
            if diagram.adjacent(i, j):
                ok = bracket(a, br) == b.scale(-4)
                if not ok:
                    failures.append(f"[A_{i},[A_{i},A_{j}]] != -4 A_{j}")
            else:
                ok = br.is_zero()
                if not ok:
                    failures.append(f"[A_{i},A_{j}] != 0 off the diagram")
            pairs[(i, j)] = ok

    # the same presentation after dividing every generator by two
    half = Fraction(1, 2)
    ys = [m.scale(half) for m in mvs]
    scaled_ok = all(
        mv_product(y, y) == Multivector.scalar(Fraction(-1, 4), n) for y in ys
    ) and all(
        bracket(ys[i - 1], bracket(ys[i - 1], ys[j - 1])) == -ys[j - 1]
        for (i, j) in ((a, b) for a in squares for b in squares if a != b)
        if diagram.adjacent(i, j)
    )
    if not scaled_ok:
        failures.append("half-scaled presentation failed")

    return RelationReport(n=n, squares=squares, pairs=pairs, scaled_ok=scaled_ok, failures=failures)


def shared_index_adjacency_ok(n: int) -> bool:
    """Adjacency coincides with sharing exactly one Clifford index."""
    gens = spin_generators(n)
    diagram = en_adjacency(n)
    masks = gens.masks
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            shared = (masks[i - 1] & masks[j - 1]).bit_count()
            if diagram.adjacent(i, j) != (shared == 1):
                return False
    return True
