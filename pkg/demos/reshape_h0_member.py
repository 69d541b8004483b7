"""Reshape a triangle-heavy H0 member step by step and compare it with H*(n, e).

    python demos/reshape_h0_member.py
"""

from __future__ import annotations

from trimin.canon import is_isomorphic
from trimin.extremal import build_h_star, extremal_profile
from trimin.graph import complete_multipartite, count_triangles
from trimin.graph6 import encode
from trimin.symmetrise import symmetrise_h0_parts


def show(label: str, g) -> None:
    print(f"{label:<10} graph6={encode(g):<8} edges={g.edge_count:<3} triangles={count_triangles(g)}")


def main() -> None:
    # K_{4,4} with a path of three edges inside the first part: (8, 19)
    g, parts = complete_multipartite([4, 4])
    for u, v in [(0, 1), (1, 2), (2, 3)]:
        g = g.add_edge(u, v)
    n, e = g.n, g.edge_count
    p = extremal_profile(n, e)
    show("input", g)
    out, out_parts = symmetrise_h0_parts(g, parts)
    show("output", out)
    print(f"output parts: {out_parts}")
    target = build_h_star(n, e)
    show("H*", target)
    print(f"profile: k={p.k} a*={p.a_star} m*={p.m_star} h*={p.h_star}")
    print(f"output isomorphic to H*: {is_isomorphic(out, target)}")


if __name__ == "__main__":
    main()
