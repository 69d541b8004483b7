"""Exact canonical labelling for graphs with at most 10 vertices.

The search is individualisation-refinement: vertices are first split into an
ordered equitable partition (degree, then neighbour counts into every cell,
iterated to a fixed point), then non-singleton cells are broken by trying each
vertex in turn.  Every leaf is a vertex ordering; the canonical form is the
lexicographically smallest upper-triangle bitstring over the leaves.  Since the
refinement commutes with relabelling, the set of leaf strings, and hence its
minimum, is an isomorphism invariant.

Branches are skipped only when they are images of an explored branch under a
known automorphism: twin vertices (equal open or closed neighbourhoods) are
interchangeable, and automorphisms found at equal leaves prune their orbits.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import UnsupportedSizeError
from .graph import Graph

MAX_CANON_ORDER = 10


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """Isomorphism-class key: order plus the minimal upper-triangle bitstring as an int.

    Bit order is column-major, (0,1), (0,2), (1,2), (0,3), ..., with the first
    pair in the most significant position.
    """

    n: int
    code: int

    @cached_property
    def graph(self) -> Graph:
        return graph_from_code(self.n, self.code)

    @property
    def bitstring(self) -> str:
        npairs = self.n * (self.n - 1) // 2
        return format(self.code, f"0{npairs}b") if npairs else ""

    @property
    def edge_count(self) -> int:
        return self.code.bit_count()

    def graph6(self) -> str:
        from .graph6 import encode

        return encode(self.graph)


def graph_from_code(n: int, code: int) -> Graph:
    rows = [0] * n
    shift = n * (n - 1) // 2
    for j in range(1, n):
        for i in range(j):
            shift -= 1
            if code >> shift & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Graph(n, tuple(rows))


def _code(adj: tuple[int, ...], order: list[int]) -> int:
    code = 0
    for j in range(1, len(order)):
        row = adj[order[j]]
        for i in range(j):
            code = (code << 1) | (row >> order[i] & 1)
    return code


def _refine(adj: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    while True:
        masks = []
        for cell in cells:
            m = 0
            for v in cell:
                m |= 1 << v
            masks.append(m)
        out: list[list[int]] = []
        split = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                row = adj[v]
                groups.setdefault(tuple((row & m).bit_count() for m in masks), []).append(v)
            if len(groups) == 1:
                out.append(cell)
            else:
                split = True
                out.extend(groups[key] for key in sorted(groups))
        if not split:
            return out
        cells = out


class _Search:
    def __init__(self, g: Graph):
        self.adj = g.adj
        self.n = g.n
        self.best_code: int | None = None
        self.best_order: list[int] = []
        self.autos: list[tuple[int, ...]] = []

    def run(self) -> None:
        self._node(_refine(self.adj, [list(range(self.n))]), [])

    def _node(self, cells: list[list[int]], path: list[int]) -> None:
        target = -1
        for idx, cell in enumerate(cells):
            if len(cell) > 1:
                target = idx
                break
        if target < 0:
            self._leaf([c[0] for c in cells])
            return
        cell = cells[target]
        adj = self.adj
        open_seen: set[int] = set()
        closed_seen: set[int] = set()
        explored: list[int] = []
        for v in cell:
            key_open = adj[v]
            key_closed = adj[v] | (1 << v)
            if key_open in open_seen or key_closed in closed_seen:
                continue
            if explored and self._same_orbit(v, explored, path):
                continue
            open_seen.add(key_open)
            closed_seen.add(key_closed)
            explored.append(v)
            rest = [u for u in cell if u != v]
            child = cells[:target] + [[v], rest] + cells[target + 1:]
            self._node(_refine(adj, child), path + [v])

    def _leaf(self, order: list[int]) -> None:
        code = _code(self.adj, order)
        if self.best_code is None or code < self.best_code:
            self.best_code = code
            self.best_order = order
        elif code == self.best_code:
            perm = [0] * self.n
            for a, b in zip(self.best_order, order):
                perm[a] = b
            self.autos.append(tuple(perm))

    def _same_orbit(self, v: int, explored: list[int], path: list[int]) -> bool:
        gens = [p for p in self.autos if all(p[x] == x for x in path)]
        if not gens:
            return False
        orbit = {v}
        frontier = [v]
        while frontier:
            x = frontier.pop()
            for p in gens:
                y = p[x]
                if y not in orbit:
                    orbit.add(y)
                    frontier.append(y)
        return any(u in orbit for u in explored)


def canonical_labeling(g: Graph) -> tuple[int, list[int], list[tuple[int, ...]]]:
    """Return (code, order, automorphisms) where ``order[i]`` is the vertex placed at position i.

    ``automorphisms`` are the permutations discovered during the search; with the
    twin transpositions added they generate a subgroup of Aut(g) (not always all of it).
    """
    if g.n > MAX_CANON_ORDER:
        raise UnsupportedSizeError(
            f"exact canonical form supports n <= {MAX_CANON_ORDER}, got n = {g.n}"
        )
    if g.n == 0:
        return 0, [], []
    s = _Search(g)
    s.run()
    autos = list(s.autos)
    adj = g.adj
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if adj[u] & ~(1 << v) == adj[v] & ~(1 << u):
                perm = list(range(g.n))
                perm[u], perm[v] = v, u
                autos.append(tuple(perm))
    return s.best_code, s.best_order, autos


def canonical_form(g: Graph) -> CanonicalForm:
    code, _, _ = canonical_labeling(g)
    return CanonicalForm(g.n, code)


def canonical_code(g: Graph) -> int:
    if g.n > MAX_CANON_ORDER:
        raise UnsupportedSizeError(
            f"exact canonical form supports n <= {MAX_CANON_ORDER}, got n = {g.n}"
        )
    if g.n == 0:
        return 0
    s = _Search(g)
    s.run()
    return s.best_code


def canonical_graph(g: Graph) -> Graph:
    return graph_from_code(g.n, canonical_code(g))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and g.edge_count == h.edge_count and canonical_code(g) == canonical_code(h)


def edge_orbit_representatives(g: Graph, pairs: list[tuple[int, int]],
                               autos: list[tuple[int, ...]]) -> list[tuple[int, int]]:
    """One pair per orbit of ``pairs`` under the group generated by ``autos``."""
    if not autos:
        return pairs
    index = {p: i for i, p in enumerate(pairs)}
    parent = list(range(len(pairs)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for perm in autos:
        for i, (u, v) in enumerate(pairs):
            a, b = perm[u], perm[v]
            j = index.get((a, b) if a < b else (b, a))
            if j is not None:
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[max(ri, rj)] = min(ri, rj)
    return [p for i, p in enumerate(pairs) if find(i) == i]
