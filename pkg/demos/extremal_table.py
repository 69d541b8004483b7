"""Print the extremal profile, exhaustive minimum and Goodman bound for one order.

    python demos/extremal_table.py 7
"""

from __future__ import annotations

import argparse
from math import comb

from trimin.curves import goodman_bound
from trimin.extremal import extremal_profile
from trimin.oracle import g3_bruteforce


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("n", type=int, nargs="?", default=7)
    args = ap.parse_args()
    n = args.n
    print(f"{'e':>3} {'k':>2} {'a*':<22} {'m*':>3} {'h*':>4} {'g3':>4} {'goodman':>9}")
    for e in range(n * n // 4 + 1, comb(n, 2) + 1):
        p = extremal_profile(n, e)
        g3 = g3_bruteforce(n, e).g3_min
        mark = "" if g3 == p.h_star else "  <-- differs"
        print(f"{e:>3} {p.k:>2} {str(p.a_star):<22} {p.m_star:>3} {p.h_star:>4} {g3:>4} "
              f"{float(goodman_bound(n, e)):>9.3f}{mark}")


if __name__ == "__main__":
    main()
