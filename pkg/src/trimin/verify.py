"""Verification sweeps shared by the command line and the acceptance tests.

Each suite returns a :class:`SuiteReport` counting passing units (orders, or
sampled graphs) and listing every failure verbatim.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .analyze import ls_identities
from .canon import graph_from_code
from .curves import goodman_bound, sandwich_check
from .extremal import extremal_profile, h_star_delta
from .families import FamilyId, family_membership
from .generate import all_graph_levels
from .graph import Graph
from .oracle import g3_bruteforce, kpartite_min, verify_conjecture
from .turan import cn_within, k_index, turan_number


@dataclass
class SuiteReport:
    name: str
    unit: str
    passed: int = 0
    total: int = 0
    failures: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.passed == self.total and not self.failures

    def summary(self) -> str:
        return f"{'PASS' if self.ok else 'FAIL'} {self.passed}/{self.total} {self.unit}"

    def lines(self) -> list[str]:
        return self.notes + self.failures + [self.summary()]


def conjecture_suite(n_max: int, all_e: bool = False) -> SuiteReport:
    rep = SuiteReport("conjecture", "orders")
    rep.notes.append("exhaustive agreement at small orders is evidence, not a proof, "
                     "for the statement at larger orders")
    for n in range(1, n_max + 1):
        edges = range(1, comb(n, 2) + 1) if all_e else None
        res = verify_conjecture(n, edges, allow_long=n > 9)
        rep.total += 1
        if res.ok:
            rep.passed += 1
        else:
            rep.failures.extend(res.lines())
    return rep


def slope_failures(n: int) -> tuple[int, list[str]]:
    """Check the increment and part-size estimates for every e in [t_{k-1}+k, t_k - 1].

    Returns (cells checked, failure descriptions); every comparison against c*n is exact.
    """
    checked = 0
    bad = []
    for k in range(2, n + 1):
        lo = turan_number(n, k - 1) + k
        hi = turan_number(n, k) - 1
        for e in range(lo, hi + 1):
            checked += 1
            if k_index(n, e) != k:
                bad.append(f"n={n} e={e}: k(n,e)={k_index(n, e)} != {k}")
                continue
            step = h_star_delta(n, e).delta
            if k > 2:
                ok = cn_within(n, e, Fraction(step - k, k - 2), Fraction(step + k, k - 2))
            else:
                ok = abs(step) <= k
            if not ok:
                bad.append(f"n={n} e={e}: |delta h* - (k-2)cn| > k (delta={step})")
            a = extremal_profile(n, e).a_star
            for i in range(k - 1):
                if not cn_within(n, e, Fraction(a[i] - 2), Fraction(a[i] + 2)):
                    bad.append(f"n={n} e={e}: |a*_{i + 1} - cn| > 2 (a*={a})")
    return checked, bad


def slopes_suite(n_min: int, n_max: int) -> SuiteReport:
    rep = SuiteReport("slopes", "orders")
    for n in range(n_min, n_max + 1):
        checked, bad = slope_failures(n)
        rep.total += 1
        if bad:
            rep.failures.extend(bad)
        else:
            rep.passed += 1
    return rep


def sandwich_suite(n_max: int) -> SuiteReport:
    rep = SuiteReport("sandwich", "orders")
    for n in range(1, n_max + 1):
        rep.total += 1
        ok = True
        for e in range(comb(n, 2)):
            g3 = g3_bruteforce(n, e).g3_min
            res = sandwich_check(n, e, g3)
            if not res.holds:
                ok = False
                rep.failures.append(f"n={n} e={e}: g3={g3} excess={res.excess:.9g} "
                                    f"upper={res.upper:.9g}")
        rep.passed += ok
    return rep


def random_graph(rng: random.Random, n_max: int) -> Graph:
    n = rng.randint(1, n_max)
    p = rng.random()
    rows = [0] * n
    for v in range(n):
        for u in range(v):
            if rng.random() < p:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def identities_suite(n_max: int, samples: int = 10_000, sample_n_max: int = 12,
                     seed: int = 0) -> SuiteReport:
    rep = SuiteReport("identities", "graphs")
    for n in range(1, n_max + 1):
        for level in all_graph_levels(n):
            for c in level:
                _identity_case(rep, graph_from_code(n, c))
    rng = random.Random(seed)
    for _ in range(samples):
        _identity_case(rep, random_graph(rng, sample_n_max))
    return rep


def _identity_case(rep: SuiteReport, g: Graph) -> None:
    res = ls_identities(g)
    rep.total += 1
    if res.triple_ok and res.s_identity_ok is not False:
        rep.passed += 1
    else:
        rep.failures.append(f"n={g.n} edges={g.edges()}: {res}")


def kpartite_suite(n_max: int) -> SuiteReport:
    rep = SuiteReport("kpartite", "orders")
    for n in range(1, n_max + 1):
        rep.total += 1
        ok = True
        for e in range(1, comb(n, 2) + 1):
            k = k_index(n, e)
            res = kpartite_min(n, e, k)
            in_h1 = 0
            for form in res.extremal:
                g = form.graph
                if not family_membership(g, FamilyId.H2, e):
                    ok = False
                    rep.failures.append(f"n={n} e={e}: minimiser {form.graph6()} is not in H2")
                in_h1 += bool(family_membership(g, FamilyId.H1, e))
            if not in_h1:
                ok = False
                rep.failures.append(f"n={n} e={e}: no minimiser lies in H1")
        rep.passed += ok
    return rep


def goodman_equality_cases(n_max: int) -> list[str]:
    """Pairs where exact equality of the Goodman bound with h* at e = t_k(n) disagrees with k | n."""
    bad = []
    for n in range(1, n_max + 1):
        for k in range(1, n + 1):
            e = turan_number(n, k)
            equal = goodman_bound(n, e) == extremal_profile(n, e).h_star
            if equal != (n % k == 0):
                bad.append(f"n={n} k={k}: equality={equal} but k|n is {n % k == 0}")
    return bad
