"""Limiting triangle-density curves and the finite-n sandwich bound.

Densities are normalised so that the complete graph has edge density 1 and
triangle density 1: ``lam = 2e / n^2`` and triangles are measured against
``n^3 / 6``.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import TriminError
from .turan import c_lambda, k_lambda


def _check(lam) -> None:
    if not 0 <= lam <= 1:
        raise TriminError(f"density must lie in [0, 1], got {lam}")


def g3_lambda(lam) -> float:
    """Minimum asymptotic triangle density at edge density ``lam``.

    Realised by k-1 parts of relative size c and one part of size 1 - (k-1)c.
    """
    _check(lam)
    if lam == 1:
        return 1.0
    k = k_lambda(lam)
    if k <= 2:
        return 0.0
    c = c_lambda(lam)
    c_last = 1.0 - (k - 1) * c
    return 6.0 * (comb(k - 1, 3) * c ** 3 + comb(k - 1, 2) * c * c * c_last)


def goodman_curve(lam) -> float:
    _check(lam)
    x = float(lam)
    return max(0.0, x * (2.0 * x - 1.0))


def kruskal_katona_curve(lam) -> float:
    _check(lam)
    return float(lam) ** 1.5


def bollobas_curve(lam) -> float:
    """Piecewise-linear lower bound through the points (1 - 1/k, (k-1)(k-2)/k^2), k >= 1."""
    _check(lam)
    if lam == 1:
        return 1.0
    x = Fraction(lam)
    k = math.floor(1 / (1 - x))  # 1 - 1/k <= x < 1 - 1/(k+1)
    x0, x1 = 1 - Fraction(1, k), 1 - Fraction(1, k + 1)
    y0 = Fraction((k - 1) * (k - 2), k * k)
    y1 = Fraction(k * (k - 1), (k + 1) ** 2)
    return float(y0 + (y1 - y0) * (x - x0) / (x1 - x0))


def goodman_bound(n: int, e: int) -> Fraction:
    """e(4e - n^2) / (3n) as an exact rational (negative below n^2/4 edges)."""
    if n < 1:
        raise TriminError(f"order must be positive, got {n}")
    return Fraction(e * (4 * e - n * n), 3 * n)


@dataclass(frozen=True)
class CurvePoint:
    lam: float
    g3: float
    goodman: float
    kk: float
    bollobas: float


def bound_curves(lam) -> CurvePoint:
    return CurvePoint(float(lam), g3_lambda(lam), goodman_curve(lam),
                      kruskal_katona_curve(lam), bollobas_curve(lam))


def sample_curves(lo: float = 0.0, hi: float = 1.0, steps: int = 1001) -> list[CurvePoint]:
    """``steps`` equally spaced points from ``lo`` to ``hi`` inclusive."""
    if steps < 2:
        raise TriminError(f"need at least 2 sample points, got {steps}")
    if not 0 <= lo < hi <= 1:
        raise TriminError(f"need 0 <= lo < hi <= 1, got lo={lo}, hi={hi}")
    # rational grid so that k is decided exactly at every sample
    lo_q, hi_q = Fraction(lo), Fraction(hi)
    span = hi_q - lo_q
    pts = []
    for i in range(steps):
        lam = lo_q + span * i / (steps - 1)
        pts.append(bound_curves(lam))
    return pts


def curves_csv(points: list[CurvePoint]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["lambda", "g3", "goodman", "kk", "bollobas"])
    for p in points:
        w.writerow([f"{v:.12g}" for v in (p.lam, p.g3, p.goodman, p.kk, p.bollobas)])
    return buf.getvalue()


@dataclass(frozen=True)
class SandwichResult:
    holds: bool
    excess: float  # g3(n, e) - (n^3/6) g3(2e/n^2)
    upper: float  # n^3 / (n^2 - 2e)


def sandwich_check(n: int, e: int, g3_value: int, rel_tol: float = 1e-6) -> SandwichResult:
    """Check 0 <= g3(n,e) - (n^3/6) g3(2e/n^2) <= n^3/(n^2 - 2e) for an exact minimum ``g3_value``."""
    if not 0 <= e < comb(n, 2) + 1:
        raise TriminError(f"edge count {e} outside [0, C({n},2)]")
    lam = Fraction(2 * e, n * n)
    middle = n ** 3 / 6 * g3_lambda(lam)
    tol = rel_tol * max(1.0, abs(middle))
    excess = g3_value - middle
    upper = n ** 3 / (n * n - 2 * e)
    return SandwichResult(-tol <= excess <= upper + tol, excess, upper)
