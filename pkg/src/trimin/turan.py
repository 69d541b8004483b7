"""Turán graphs and numbers, the part index k, and the density parameter c.

``c`` is irrational in general, so it has two representations: a float
(:func:`c_lambda`, :func:`c_value`) for curve work, and the exact comparator
:func:`c_compare` for anything that feeds an integer decision.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import KMismatchError, TriminError

LESS, EQUAL, GREATER = -1, 0, 1


@dataclass(frozen=True)
class TuranSpec:
    n: int
    s: int
    sizes: tuple[int, ...]
    edges: int


def turan_sizes(n: int, s: int) -> tuple[int, ...]:
    """Balanced part sizes, nonincreasing; parts beyond n are dropped."""
    s = min(s, n)
    if s <= 0:
        return ()
    q, r = divmod(n, s)
    return (q + 1,) * r + (q,) * (s - r)


def multipartite_edges(sizes) -> int:
    total = sum(sizes)
    return (total * total - sum(a * a for a in sizes)) // 2


def multipartite_triangles(sizes) -> int:
    # third elementary symmetric polynomial
    e1 = e2 = e3 = 0
    for a in sizes:
        e3 += e2 * a
        e2 += e1 * a
        e1 += a
    return e3


def turan_number(n: int, s: int) -> int:
    """t_s(n); for s >= n this is C(n, 2)."""
    if s < 1:
        raise TriminError(f"part count must be positive, got {s}")
    return multipartite_edges(turan_sizes(n, s))


def turan(n: int, s: int) -> TuranSpec:
    if not 1 <= s <= n:
        raise TriminError(f"Turán graph needs 1 <= s <= n, got n={n}, s={s}")
    sizes = turan_sizes(n, s)
    return TuranSpec(n, s, sizes, multipartite_edges(sizes))


def k_index(n: int, e: int) -> int:
    """Least s >= 1 with e <= t_s(n)."""
    if n < 1 or not 0 <= e <= comb(n, 2):
        raise TriminError(f"edge count {e} outside [0, C({n},2)]")
    s = 1
    while e > turan_number(n, s):
        s += 1
    return s


def _exact(lam) -> Fraction:
    return lam if isinstance(lam, Fraction) else Fraction(lam)


def k_lambda(lam) -> int:
    """min{k : lam <= 1 - 1/k}, decided in exact rational arithmetic."""
    x = _exact(lam)
    if not 0 <= x < 1:
        raise TriminError(f"density must lie in [0, 1), got {lam}")
    return max(1, math.ceil(1 / (1 - x)))


def c_lambda(lam) -> float:
    """The larger root c of the part-size equation at edge density lam (float)."""
    k = k_lambda(lam)
    x = float(lam)
    if k == 1:
        return 1.0
    rad = 1.0 - k / (k - 1) * x
    return (1.0 + math.sqrt(max(rad, 0.0))) / k


def c_value(n: int, e: int) -> float:
    """c(n, e) = c(2e/n^2) as a float."""
    return c_lambda(Fraction(2 * e, n * n))


def c_compare(n: int, e: int, num: int, den: int = 1) -> int:
    """Exact sign of c(n,e)*n - num/den, returned as LESS, EQUAL or GREATER.

    c*n = (n + sqrt(R))/k with R = (n^2 (k-1) - 2ek)/(k-1); the square root is
    isolated and both sides squared, all in integers.
    """
    if den <= 0:
        raise TriminError(f"denominator must be positive, got {den}")
    k = k_index(n, e)
    if k < 2 or not turan_number(n, k - 1) + math.ceil((k - 1) / 8) <= e:
        raise KMismatchError(
            f"k-mismatch risk at (n={n}, e={e}): need t_(k-1)(n) + ceil((k-1)/8) <= e "
            f"with k = {k} >= 2"
        )
    # sign of den*sqrt(R) - (k*num - den*n)
    a = k * num - den * n
    if a < 0:
        return GREATER
    lhs = den * den * (n * n * (k - 1) - 2 * e * k)
    rhs = a * a * (k - 1)
    return (lhs > rhs) - (lhs < rhs)


def cn_within(n: int, e: int, lo: Fraction, hi: Fraction) -> bool:
    """Exact test lo <= c(n,e)*n <= hi."""
    lo, hi = Fraction(lo), Fraction(hi)
    return (c_compare(n, e, lo.numerator, lo.denominator) != LESS
            and c_compare(n, e, hi.numerator, hi.denominator) != GREATER)
