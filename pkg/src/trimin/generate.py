"""Isomorph-free generation of all graphs of a given order, level by level in the edge count.

Level ``e + 1`` is obtained from level ``e`` by inserting every non-edge of every
class representative, one insertion per orbit of the parent's known
automorphisms, and keeping the canonical codes in a set.  An optional predicate
that is closed under edge deletion (for example triangle-freeness) may filter
children; every surviving graph still has a surviving parent, so filtered
generation is complete.

Levels above C(n,2)/2 are obtained by complementing the mirror level when no
filter is given.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache
from typing import Callable, Iterable

from .canon import (
    MAX_CANON_ORDER,
    canonical_code,
    canonical_labeling,
    edge_orbit_representatives,
    graph_from_code,
)
from .errors import UnsupportedSizeError
from .graph import Graph, is_triangle_free

# Graphs on n unlabelled vertices, n = 0..10.
GRAPH_COUNTS = (1, 1, 2, 4, 11, 34, 156, 1044, 12346, 274668, 12005168)
# Triangle-free graphs on n unlabelled vertices, n = 0..10.
TRIANGLE_FREE_COUNTS = (1, 1, 2, 3, 7, 14, 38, 107, 410, 1897, 12172)

Predicate = Callable[[Graph], bool]


def _children(n: int, code: int, predicate: Predicate | None) -> set[int]:
    g = graph_from_code(n, code)
    _, _, autos = canonical_labeling(g)
    out = set()
    for u, v in edge_orbit_representatives(g, g.non_edges(), autos):
        h = g.add_edge(u, v)
        if predicate is not None and not predicate(h):
            continue
        out.add(canonical_code(h))
    return out


def _children_batch(args: tuple[int, list[int], Predicate | None]) -> set[int]:
    n, codes, predicate = args
    out: set[int] = set()
    for code in codes:
        out |= _children(n, code, predicate)
    return out


def next_level(n: int, codes: Iterable[int], predicate: Predicate | None = None,
               jobs: int = 1) -> set[int]:
    codes = list(codes)
    if jobs <= 1 or len(codes) < 64:
        return _children_batch((n, codes, predicate))
    chunk = max(1, len(codes) // (jobs * 8))
    batches = [(n, codes[i:i + chunk], predicate) for i in range(0, len(codes), chunk)]
    out: set[int] = set()
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for part in pool.map(_children_batch, batches):
            out |= part
    return out


def default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("TRIMIN_JOBS", "1")))
    except ValueError:
        return 1


def check_order(n: int, allow_long: bool = False) -> None:
    cap = MAX_CANON_ORDER if allow_long else 9
    if n > cap:
        hint = "" if allow_long else " (n = 10 needs the long-running flag)"
        raise UnsupportedSizeError(
            f"exhaustive generation refused for n = {n}: about {GRAPH_COUNTS[min(n, 10)]:,}"
            f"+ classes{hint}"
        )


def _complement_code(n: int, code: int) -> int:
    full = (1 << (n * (n - 1) // 2)) - 1
    # complementing the bitstring gives a labelled complement; re-canonicalise it
    return canonical_code(graph_from_code(n, full ^ code))


def generate_levels(n: int, max_e: int | None = None, predicate: Predicate | None = None,
                    jobs: int = 1, allow_long: bool = False) -> list[list[int]]:
    """Sorted canonical codes of all classes, one list per edge count 0..max_e."""
    check_order(n, allow_long)
    npairs = n * (n - 1) // 2
    top = npairs if max_e is None else min(max_e, npairs)
    mirror = predicate is None
    direct_top = min(top, npairs // 2) if mirror else top
    levels: list[set[int]] = [{0}]
    for _ in range(direct_top):
        levels.append(next_level(n, levels[-1], predicate, jobs))
        if not levels[-1]:
            break
    out = [sorted(s) for s in levels]
    if mirror:
        for e in range(direct_top + 1, top + 1):
            out.append(sorted({_complement_code(n, c) for c in out[npairs - e]}))
    while len(out) <= top:
        out.append([])
    return out


@lru_cache(maxsize=None)
def all_graph_levels(n: int) -> tuple[tuple[int, ...], ...]:
    """Cached full enumeration for n <= 9."""
    return tuple(tuple(level) for level in generate_levels(n, jobs=default_jobs()))


@lru_cache(maxsize=None)
def triangle_free_levels(n: int) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(level) for level in generate_levels(n, predicate=is_triangle_free,
                                                           allow_long=True))


def triangle_free_graphs(n: int, e: int) -> list[Graph]:
    """Representatives of the triangle-free (n, e)-graph classes."""
    if n == 0:
        return [Graph(0, ())] if e == 0 else []
    levels = triangle_free_levels(n)
    if e < 0 or e >= len(levels):
        return []
    return [graph_from_code(n, c) for c in levels[e]]
