"""Dense small graphs stored as one integer bitset per vertex.

Row ``i`` of :attr:`Graph.adj` has bit ``j`` set iff ``ij`` is an edge.  Graphs are
immutable; the edit helpers return new instances.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, NamedTuple, Sequence

from .errors import GraphError

MAX_VERTICES = 64


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u, row in enumerate(self.adj):
            for v in bits(row >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    def non_edges(self) -> list[tuple[int, int]]:
        full = self.full_mask
        out = []
        for u, row in enumerate(self.adj):
            free = ~row & full & ~((1 << (u + 1)) - 1)
            out.extend((u, v) for v in bits(free))
        return out

    def add_edge(self, u: int, v: int) -> Graph:
        rows = list(self.adj)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self.n, tuple(rows))

    def remove_edge(self, u: int, v: int) -> Graph:
        rows = list(self.adj)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph(self.n, tuple(rows))

    def complement(self) -> Graph:
        full = self.full_mask
        return Graph(self.n, tuple((~row & full) & ~(1 << i) for i, row in enumerate(self.adj)))

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Return the graph with vertex ``v`` renamed ``perm[v]``."""
        rows = [0] * self.n
        for u, row in enumerate(self.adj):
            pu = perm[u]
            acc = 0
            for v in bits(row):
                acc |= 1 << perm[v]
            rows[pu] = acc
        return Graph(self.n, tuple(rows))

    def induced_edges(self, mask: int) -> int:
        """Number of edges with both endpoints in the vertex set ``mask``."""
        return sum((self.adj[v] & mask).bit_count() for v in bits(mask)) // 2

    def cross_edges(self, mask_a: int, mask_b: int) -> int:
        """Number of edges between the disjoint vertex sets ``mask_a`` and ``mask_b``."""
        return sum((self.adj[v] & mask_b).bit_count() for v in bits(mask_a))

    def check(self) -> None:
        """Raise :class:`GraphError` unless the symmetry and no-loop invariants hold."""
        if not 0 <= self.n <= MAX_VERTICES or len(self.adj) != self.n:
            raise GraphError(f"bad order {self.n} for {len(self.adj)} rows")
        full = self.full_mask
        for i, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"row {i} has bits beyond vertex {self.n - 1}")
            if row >> i & 1:
                raise GraphError(f"loop at vertex {i}")
            for j in bits(row):
                if not self.adj[j] >> i & 1:
                    raise GraphError(f"asymmetric pair ({i}, {j})")

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


class ThreeProfile(NamedTuple):
    """Counts of 3-vertex subsets inducing exactly 0, 1, 2 and 3 edges."""

    n0: int
    n1: int
    n2: int
    n3: int


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    if not 1 <= n <= MAX_VERTICES:
        raise GraphError(f"vertex count {n} outside [1, {MAX_VERTICES}]")
    rows = [0] * n
    for pair in edges:
        if len(pair) != 2:
            raise GraphError(f"edge {tuple(pair)!r} is not a vertex pair")
        u, v = int(pair[0]), int(pair[1])
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
        if u == v:
            raise GraphError(f"edge ({u}, {v}) is a loop")
        if rows[u] >> v & 1:
            raise GraphError(f"edge ({u}, {v}) is repeated")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def empty_graph(n: int) -> Graph:
    return build_graph(n, ())


def complete_graph(n: int) -> Graph:
    return build_graph(n, combinations(range(n), 2))


def cycle_graph(n: int) -> Graph:
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_multipartite(sizes: Sequence[int]) -> tuple[Graph, list[list[int]]]:
    """Complete multipartite graph with consecutive vertex blocks; returns (graph, parts)."""
    parts: list[list[int]] = []
    start = 0
    for s in sizes:
        parts.append(list(range(start, start + s)))
        start += s
    n = start
    full = (1 << n) - 1
    rows = [0] * n
    for part in parts:
        pmask = sum(1 << v for v in part)
        for v in part:
            rows[v] = full & ~pmask
    return Graph(n, tuple(rows)), parts


def count_triangles(g: Graph) -> int:
    """Triangles via row-intersection popcounts over edges; each counted three times."""
    adj = g.adj
    total = 0
    for u, row in enumerate(adj):
        for v in bits(row):
            if v > u:
                total += (row & adj[v]).bit_count()
    return total // 3


def count_cliques(g: Graph, r: int) -> int:
    if r < 1:
        raise GraphError(f"clique order must be positive, got {r}")
    if r > g.n:
        return 0
    if r == 1:
        return g.n
    if r == 2:
        return g.edge_count
    if r == 3:
        return count_triangles(g)
    # candidates restricted to higher-indexed neighbours, so each clique is seen once
    up = [row & ~((1 << (u + 1)) - 1) for u, row in enumerate(g.adj)]

    def extend(cand: int, depth: int) -> int:
        if depth == 1:
            return cand.bit_count()
        total = 0
        for v in bits(cand):
            total += extend(cand & up[v], depth - 1)
        return total

    return extend(g.full_mask, r)


def codegree(g: Graph, x: int, y: int) -> int:
    if x == y:
        raise GraphError(f"codegree needs two distinct vertices, got {x} twice")
    return (g.adj[x] & g.adj[y]).bit_count()


def three_profile(g: Graph) -> ThreeProfile:
    counts = [0, 0, 0, 0]
    adj = g.adj
    for a, b, c in combinations(range(g.n), 3):
        ra = adj[a]
        counts[(ra >> b & 1) + (ra >> c & 1) + (adj[b] >> c & 1)] += 1
    return ThreeProfile(*counts)


def edit_distance(g: Graph, h: Graph) -> int:
    if g.n != h.n:
        raise GraphError(f"edit distance needs equal orders, got {g.n} and {h.n}")
    return sum((a ^ b).bit_count() for a, b in zip(g.adj, h.adj)) // 2


def is_triangle_free(g: Graph) -> bool:
    adj = g.adj
    for u, row in enumerate(adj):
        for v in bits(row >> (u + 1)):
            if row & adj[u + 1 + v]:
                return False
    return True


def is_independent(g: Graph, mask: int) -> bool:
    return all(not (g.adj[v] & mask) for v in bits(mask))


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def co_components(g: Graph) -> list[int]:
    """Vertex masks of the connected components of the complement, ordered by lowest vertex."""
    full = g.full_mask
    co = [(~row & full) & ~(1 << i) for i, row in enumerate(g.adj)]
    seen = 0
    comps = []
    for v in range(g.n):
        if seen >> v & 1:
            continue
        comp = 1 << v
        frontier = comp
        while frontier:
            nxt = 0
            for u in bits(frontier):
                nxt |= co[u]
            frontier = nxt & ~comp
            comp |= nxt
        seen |= comp
        comps.append(comp)
    return comps


def to_json(g: Graph) -> str:
    return json.dumps({"n": g.n, "edges": [list(e) for e in g.edges()]})


def from_json(text: str) -> Graph:
    """Parse the adjacency-list fixture format ``{"n": N, "edges": [[u, v], ...]}``."""
    try:
        obj = json.loads(text)
        n = obj["n"]
        edges = obj["edges"]
    except (ValueError, KeyError, TypeError) as exc:
        raise GraphError(f"not an adjacency-list JSON object: {exc}") from None
    return build_graph(n, edges)
