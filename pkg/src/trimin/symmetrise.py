"""Reshape an H0 member into a complete multipartite graph minus a star.

Input: a graph made of a complete (k-1)-partite graph on parts B_1..B_{k-1} plus a
triangle-free graph inside the parts.  Its triangle count depends only on the
part sizes and the per-part edge counts e_j:

    K3 = K3(K[B_1..B_{k-1}]) + sum_j e_j (n - b_j)

so a part's interior can be replaced by any triangle-free graph with the same
number of edges, and moving an edge from a smaller part to a larger one never
adds triangles.  The procedure:

1. every part whose interior is neither empty nor a complete balanced bipartite
   graph is "partially full"; pour all their edges into the largest of them
   first, so that at most one partially full part remains;
2. pick B: the remaining partially full part, else the lowest-indexed part whose
   interior is a nonempty complete balanced bipartite graph;
3. the rest of the graph is complete multipartite; keep its parts;
4. split B into sizes a >= a' with a' the least value for which a * a' reaches
   e(G[B]); a complete B keeps its own bipartition;
5. output the complete multipartite graph on all parts minus a star centred at
   the lowest vertex of the smallest part, with leaves at the lowest vertices of
   the part next to it.

The output has the same number of triangles as the graph after step 1, which is
at most that of the input.  When the input minimises triangles over H0 the
output is isomorphic to H*(n, e).
"""

from __future__ import annotations

from .errors import PartitionError
from .graph import Graph, bits, co_components, count_triangles, is_triangle_free, mask_of


def _t2(b: int) -> int:
    return (b // 2) * ((b + 1) // 2)


def validate_h0_partition(g: Graph, parts) -> list[int]:
    """Return part masks, or raise PartitionError naming the broken condition."""
    masks = []
    seen = 0
    for part in parts:
        m = mask_of(part)
        if not part:
            raise PartitionError("empty part in witness partition")
        if len(set(part)) != len(part) or any(not 0 <= v < g.n for v in part):
            raise PartitionError(f"part {list(part)} repeats a vertex or leaves [0, {g.n})")
        if m & seen:
            raise PartitionError(f"part {list(part)} overlaps an earlier part")
        seen |= m
        masks.append(m)
    if seen != g.full_mask:
        missing = [v for v in range(g.n) if not seen >> v & 1]
        raise PartitionError(f"vertices {missing} are not covered by the partition")
    for i, m in enumerate(masks):
        outside = g.full_mask & ~m
        for v in bits(m):
            if g.adj[v] & outside != outside:
                raise PartitionError(f"vertex {v} of part {i} is not complete to the other parts")
        if not is_triangle_free(_sub(g, m)):
            raise PartitionError(f"part {i} contains a triangle")
    return masks


def _sub(g: Graph, mask: int) -> Graph:
    rows = tuple(g.adj[v] & mask if mask >> v & 1 else 0 for v in range(g.n))
    return Graph(g.n, rows)


def _multipartite_minus_star(n: int, parts: list[int], m: int) -> Graph:
    full = (1 << n) - 1
    rows = [0] * n
    for p in parts:
        for v in bits(p):
            rows[v] = full & ~p
    if m:
        centre = parts[-1] & -parts[-1]
        c = centre.bit_length() - 1
        leaves = list(bits(parts[-2]))[:m]
        for y in leaves:
            rows[c] &= ~(1 << y)
            rows[y] &= ~(1 << c)
    return Graph(n, tuple(rows))


def symmetrise_h0_parts(g: Graph, partition) -> tuple[Graph, list[tuple[int, ...]]]:
    """Like :func:`symmetrise_h0`, also returning the output's parts (largest first, star last two)."""
    masks = validate_h0_partition(g, partition)
    n = g.n
    sizes = [m.bit_count() for m in masks]
    counts = [g.induced_edges(m) for m in masks]

    # step 1 and 2: redistribute the interiors of partially full parts
    partial = [i for i, (b, c) in enumerate(zip(sizes, counts)) if 0 < c < _t2(b)]
    pool = sum(counts[i] for i in partial)
    for i in sorted(partial, key=lambda i: (-sizes[i], i)):
        counts[i] = min(_t2(sizes[i]), pool)
        pool -= counts[i]

    # step 3: choose B
    still_partial = [i for i in partial if 0 < counts[i] < _t2(sizes[i])]
    if still_partial:
        b_idx = still_partial[0]
    else:
        full_parts = [i for i in range(len(masks)) if counts[i] == _t2(sizes[i]) > 0]
        if not full_parts:
            raise PartitionError("no part carries interior edges; the graph is not above the "
                                 "Turán threshold for its partition")
        b_idx = full_parts[0]

    # step 4: the parts outside B (full parts split into their two halves)
    others: list[int] = []
    for i, m in enumerate(masks):
        if i == b_idx:
            continue
        if counts[i] == 0:
            others.append(m)
        else:
            verts = sorted(bits(m))
            if counts[i] == _t2(sizes[i]) and g.induced_edges(m) == counts[i]:
                # the original interior is already complete bipartite; keep its sides
                halves = co_components(_induced_graph(g, verts))
                others.extend(mask_of(verts[j] for j in bits(h)) for h in halves)
            else:
                half = (len(verts) + 1) // 2
                others.append(mask_of(verts[:half]))
                others.append(mask_of(verts[half:]))
    others.sort(key=lambda m: (-m.bit_count(), m & -m))

    # step 5: split B
    bmask = masks[b_idx]
    b = sizes[b_idx]
    f = counts[b_idx]
    bverts = sorted(bits(bmask))
    a_t = next(a for a in range(b // 2, 0, -1)
               if (b - a) * a >= f and (b - a + 1) * (a - 1) < f)
    if f == _t2(b) and g.induced_edges(bmask) == f:
        halves = co_components(_induced_graph(g, bverts))
        sides = sorted((mask_of(bverts[j] for j in bits(h)) for h in halves),
                       key=lambda m: (-m.bit_count(), m & -m))
    else:
        sides = [mask_of(bverts[:b - a_t]), mask_of(bverts[b - a_t:])]

    # step 6: complete multipartite minus a star
    parts = others + sides
    m_out = (b - a_t) * a_t - f
    h = _multipartite_minus_star(n, parts, m_out)
    return h, [tuple(bits(p)) for p in parts]


def _induced_graph(g: Graph, verts: list[int]) -> Graph:
    pos = {v: i for i, v in enumerate(verts)}
    vmask = mask_of(verts)
    rows = tuple(mask_of(pos[u] for u in bits(g.adj[v] & vmask)) for v in verts)
    return Graph(len(verts), rows)


def symmetrise_h0(g: Graph, partition) -> Graph:
    """Run the reshaping procedure on an H0 member with its witness partition."""
    return symmetrise_h0_parts(g, partition)[0]


def triangle_change(g: Graph, partition) -> int:
    """Triangles of the output minus triangles of the input (never positive)."""
    return count_triangles(symmetrise_h0(g, partition)) - count_triangles(g)
