"""Positive root enumeration for the finite E-series diagrams.

Roots are integer coordinate vectors in the simple-root basis.  The
enumeration grows the simple roots by the string rule: beta + alpha_i
is a root iff p - <beta, alpha_i^vee> > 0 where p is the depth of the
alpha_i string below beta, iterated to a fixpoint.  E_3 through E_8 are
the finite cases; anything past 8 has an infinite root system and is
rejected up front.
"""

from __future__ import annotations

from dataclasses import dataclass

from .spinrep import en_adjacency

#: No finite E-type system has more positive roots than E_8.
MAX_POSITIVE_ROOTS = 240


@dataclass(frozen=True)
class RootSet:
    """Positive system of one diagram, roots sorted by (height, lex)."""

    n: int
    cartan: tuple[tuple[int, ...], ...]
    roots: tuple[tuple[int, ...], ...]

    @property
    def count(self) -> int:
        return len(self.roots)

    def pairing(self, beta: tuple[int, ...], i: int) -> int:
        """<beta, alpha_i^vee> = (C beta)_i for the symmetric Cartan matrix."""
        return sum(self.cartan[i][j] * beta[j] for j in range(self.n))

    def norm(self, beta: tuple[int, ...]) -> int:
        """beta^T C beta; equals 2 for every root in a simply laced system."""
        return sum(
            beta[i] * self.cartan[i][j] * beta[j]
            for i in range(self.n)
            for j in range(self.n)
        )

    def maximal_roots(self) -> tuple[tuple[int, ...], ...]:
        """Roots beta with no beta + alpha_i in the system (one per component)."""
        have = set(self.roots)
        out = []
        for beta in self.roots:
            if not any(self._plus_simple(beta, i) in have for i in range(self.n)):
                out.append(beta)
        return tuple(out)

    def _plus_simple(self, beta: tuple[int, ...], i: int) -> tuple[int, ...]:
        return tuple(x + (1 if j == i else 0) for j, x in enumerate(beta))

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "count": self.count,
            "roots": [list(r) for r in self.roots],
        }


def cartan_matrix(n: int) -> tuple[tuple[int, ...], ...]:
    """Symmetric simply laced Cartan matrix of the E_n diagram."""
    diagram = en_adjacency(n)
    rows = []
    for i in range(1, n + 1):
        rows.append(tuple(
            2 if i == j else (-1 if diagram.adjacent(i, j) else 0)
            for j in range(1, n + 1)
        ))
    return tuple(rows)


def positive_roots(n: int) -> RootSet:
    """Enumerate the positive system for 3 <= n <= 8."""
    if n < 3:
        raise ValueError(f"root enumeration needs n >= 3, got {n}")
    if n > 8:
        raise ValueError(f"infinite type: the rank-{n} diagram has no finite root system")
    cartan = cartan_matrix(n)
    for row in cartan:
        if any(x not in (2, -1, 0) for x in row):
            raise AssertionError("Cartan matrix is not simply laced")

    simple = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    have: set[tuple[int, ...]] = set(simple)

    def pairing(beta: tuple[int, ...], i: int) -> int:
        return sum(cartan[i][j] * beta[j] for j in range(n))

    grew = True
    while grew:
        grew = False
        for beta in list(have):
            for i in range(n):
                p = 0
                down = beta
                while True:
                    down = tuple(x - (1 if j == i else 0) for j, x in enumerate(down))
                    if min(down) < 0 or down not in have:
                        break
                    p += 1
                if p - pairing(beta, i) > 0:
                    up = tuple(x + (1 if j == i else 0) for j, x in enumerate(beta))
                    if up not in have:
                        have.add(up)
                        grew = True
        if len(have) > MAX_POSITIVE_ROOTS:
            raise RuntimeError(f"infinite type: exceeded {MAX_POSITIVE_ROOTS} positive roots")

    ordered = tuple(sorted(have, key=lambda r: (sum(r), r)))
    return RootSet(n=n, cartan=cartan, roots=ordered)


def theorem_b_check(n: int) -> bool:
    """Positive-root count equals the closure dimension of the spin generators."""
    from .closure import blade_closure
    from .spinrep import spin_generators

    rs = positive_roots(n)
    basis = blade_closure(n, spin_generators(n).masks)
    return rs.count == basis.dim
