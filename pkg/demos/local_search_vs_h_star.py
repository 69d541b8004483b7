"""Hill-climb from random graphs and compare the best triangle count with h*(n, e).

    python demos/local_search_vs_h_star.py --n 14 --seed 1
"""

from __future__ import annotations

import argparse
from math import comb

from trimin.extremal import extremal_profile
from trimin.oracle import local_search_upper


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=12)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--restarts", type=int, default=4)
    args = ap.parse_args()
    n = args.n
    below = 0
    for e in range(n * n // 4 + 1, comb(n, 2) + 1, max(1, n // 3)):
        h = extremal_profile(n, e).h_star
        found, _ = local_search_upper(n, e, restarts=args.restarts, seed=args.seed,
                                      start_from_h_star=False)
        below += found < h
        print(f"e={e:<4} h*={h:<6} local search={found:<6} gap={found - h}")
    print(f"cells where local search beat h*: {below}")


if __name__ == "__main__":
    main()
