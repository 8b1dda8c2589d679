"""Counting subsets by size mod 4.

delta(k, n) is the number of subsets of an n-set whose size is congruent
to k mod 4.  These counts drive the dimension bookkeeping for the spin
image: the grade-(2,3 mod 4) blades number delta(2,n) + delta(3,n), and
closed power-of-two formulas make the bounds explicit.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb


def _check_k(k: int) -> None:
    if k not in (0, 1, 2, 3):
        raise ValueError(f"residue class k must be in 0..3, got {k}")


def delta_sum(k: int, n: int) -> int:
    """Direct binomial sum: number of subsets of an n-set of size == k (mod 4)."""
    _check_k(k)
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return sum(comb(n, i) for i in range(k, n + 1, 4))


def _pow2(e: int) -> Fraction:
    # Exponents go negative for n in {1, 2}; the closed forms still hold there.
    return Fraction(2) ** e


def delta_closed(k: int, n: int) -> int:
    """Closed power-of-two form for delta(k, n), split by n mod 4."""
    _check_k(k)
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    main = _pow2(n - 2)
    r = n % 4
    if r == 0:
        if k in (1, 3):
            val = main
        else:
            val = main + (-1) ** (n // 4 + k // 2) * _pow2(n // 2 - 1)
    elif r == 1:
        s = (-1) ** ((n - 1) // 4)
        if k in (0, 1):
            val = main + s * _pow2((n - 3) // 2)
        else:
            val = main - s * _pow2((n - 3) // 2)
    elif r == 2:
        if k in (0, 2):
            val = main
        else:
            val = main + (-1) ** ((n - 2) // 4 + (k - 1) // 2) * _pow2(n // 2 - 1)
    else:
        s = (-1) ** ((n - 3) // 4)
        if k in (0, 3):
            val = main - s * _pow2((n - 3) // 2)
        else:
            val = main + s * _pow2((n - 3) // 2)
    if val.denominator != 1:
        raise AssertionError(f"closed form not integral for k={k}, n={n}")
    return int(val)


def delta_identities(n: int) -> dict[str, bool]:
    """Evaluate the structural identities among the four counts at n.

    Returns one flag per identity: the total 2^n, the even/odd half sums
    2^(n-1), and the complementation equalities for the class of n mod 4.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    d = [delta_sum(k, n) for k in range(4)]
    out = {
        "total_is_2n": sum(d) == 2 ** n,
        "half_sums_are_2n1": d[0] + d[2] == d[1] + d[3] == 2 ** (n - 1),
    }
    r = n % 4
    if r == 0:
        out["d1_eq_d3"] = d[1] == d[3]
    elif r == 1:
        out["d0_eq_d1"] = d[0] == d[1]
        out["d2_eq_d3"] = d[2] == d[3]
    elif r == 2:
        out["d0_eq_d2"] = d[0] == d[2]
    else:
        out["d0_eq_d3"] = d[0] == d[3]
        out["d1_eq_d2"] = d[1] == d[2]
    return out


def lower_bound_dim(n: int) -> int:
    """Dimension of the span of all grade-(2,3 mod 4) blades actually reached.

    That is delta(2,n) + delta(3,n), minus one for n == 3 (mod 4) with
    n > 3, where the single top-grade blade is missed; at n = 3 the top
    blade is a generator itself, so nothing is subtracted.
    """
    if n < 3:
        raise ValueError(f"n must be >= 3, got {n}")
    total = delta_sum(2, n) + delta_sum(3, n)
    if n % 4 == 3 and n > 3:
        return total - 1
    return total
