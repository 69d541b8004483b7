"""Partition diagnostics, the k-partite comparison bound and exact triangle identities.

Relative to a partition V_1..V_k (the last part playing a special role):

* a *missing edge* is a non-adjacent pair in different parts;
* a *bad edge* lies inside a part;
* the *missing degree* of v counts its non-neighbours outside its own part;
* the *missing vector* has m_i = number of missing pairs between V_i and V_k.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import HypothesisError, PartitionError, TriminError, UnsupportedSizeError
from .graph import Graph, bits, count_triangles, mask_of, three_profile
from .turan import c_value

EXACT_COST_LIMIT = 10 ** 8


@dataclass(frozen=True)
class PartitionAnalysis:
    parts: tuple[tuple[int, ...], ...]
    missing: tuple[int, ...]
    bad: int
    missing_degrees: tuple[int, ...]
    Z: tuple[int, ...]
    cut_edges: int

    def to_dict(self) -> dict:
        return {"parts": [list(p) for p in self.parts], "missing": list(self.missing),
                "bad": self.bad, "missing_degrees": list(self.missing_degrees),
                "Z": list(self.Z), "cut_edges": self.cut_edges}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _masks(g: Graph, parts) -> list[int]:
    masks = []
    seen = 0
    for p in parts:
        m = mask_of(p)
        if m & seen or any(not 0 <= v < g.n for v in p):
            raise PartitionError(f"part {list(p)} overlaps another part or leaves [0, {g.n})")
        seen |= m
        masks.append(m)
    if seen != g.full_mask:
        raise PartitionError("parts do not cover every vertex")
    return masks


def missing_degrees(g: Graph, parts) -> list[int]:
    masks = _masks(g, parts)
    out = [0] * g.n
    for m in masks:
        outside = g.full_mask & ~m
        for v in bits(m):
            out[v] = (outside & ~g.adj[v]).bit_count()
    return out


def analyze_partition(g: Graph, parts, z_threshold: float = 0.1) -> PartitionAnalysis:
    """Bookkeeping for a given partition; Z holds vertices with missing degree >= z_threshold * n."""
    masks = _masks(g, parts)
    last = masks[-1]
    missing = tuple(m.bit_count() * last.bit_count() - g.cross_edges(m, last) for m in masks[:-1])
    bad = sum(g.induced_edges(m) for m in masks)
    dm = missing_degrees(g, parts)
    z = tuple(v for v in range(g.n) if dm[v] >= z_threshold * g.n)
    return PartitionAnalysis(tuple(tuple(bits(m)) for m in masks), missing, bad, tuple(dm), z,
                             g.edge_count - bad)


def _normalise(assign: list[int], k: int, n: int) -> list[list[int]]:
    parts = [[v for v in range(n) if assign[v] == i] for i in range(k)]
    return sorted(parts, key=lambda p: (-len(p), p[0] if p else n))


def _fill_and_polish(g: Graph, assign: list[int], k: int) -> list[int]:
    """Local search: improving single-vertex moves, plus zero-loss moves into empty parts."""
    n = g.n
    while True:
        moved = False
        for v in range(n):
            counts = [0] * k
            for u in bits(g.adj[v]):
                counts[assign[u]] += 1
            own = assign[v]
            best = min(range(k), key=lambda i: (counts[i], i))
            if counts[best] < counts[own]:
                assign[v] = best
                moved = True
        if moved:
            continue
        sizes = [assign.count(i) for i in range(k)]
        empty = [i for i in range(k) if sizes[i] == 0]
        if not empty or n < k:
            return assign
        # a vertex leaving a part of size >= 2 for an empty part never loses cut edges
        donor = next(v for v in range(n) if sizes[assign[v]] >= 2)
        assign[donor] = empty[0]


def _exact_max_cut(g: Graph, k: int) -> list[int]:
    n = g.n
    adj = g.adj
    total = g.edge_count
    assign = [-1] * n
    best = [-1, None]
    # edges from v to earlier vertices, used for the bound
    back = [(adj[v] & ((1 << v) - 1)).bit_count() for v in range(n)]
    remaining_back = [0] * (n + 1)
    for v in range(n - 1, -1, -1):
        remaining_back[v] = remaining_back[v + 1] + back[v]

    def rec(v: int, used: int, cut: int) -> None:
        if cut + remaining_back[v] <= best[0]:
            return
        if v == n:
            best[0], best[1] = cut, list(assign)
            return
        counts = [0] * k
        for u in bits(adj[v] & ((1 << v) - 1)):
            counts[assign[u]] += 1
        for i in sorted(range(min(used + 1, k)), key=lambda i: counts[i]):
            assign[v] = i
            rec(v + 1, max(used, i + 1), cut + back[v] - counts[i])
        assign[v] = -1

    rec(0, 0, 0)
    assert best[1] is not None and best[0] <= total
    return best[1]


def max_cut_partition(g: Graph, k: int, mode: str = "exact",
                      z_threshold: float = 0.1, seed: int = 0) -> PartitionAnalysis:
    """Partition into k parts (largest first) maximising, or locally maximising, cross edges."""
    if k < 1:
        raise TriminError(f"part count must be positive, got {k}")
    n = g.n
    if mode == "exact":
        if k ** n > EXACT_COST_LIMIT:
            raise UnsupportedSizeError(
                f"exact max-cut needs k^n = {k}^{n} <= {EXACT_COST_LIMIT:.0e}; use heuristic mode"
            )
        assign = _fill_and_polish(g, _exact_max_cut(g, k), k)
    elif mode == "heuristic":
        rng = random.Random(seed)
        assign = [rng.randrange(k) for _ in range(n)]
        assign = _fill_and_polish(g, assign, k)
    else:
        raise TriminError(f"unknown max-cut mode {mode!r}; choose exact or heuristic")
    parts = _normalise(assign, k, n)
    return analyze_partition(g, parts, z_threshold)


def has_improving_move(g: Graph, parts) -> bool:
    """True if moving one vertex to another part would increase the number of cross edges."""
    masks = _masks(g, parts)
    for i, m in enumerate(masks):
        for v in bits(m):
            own = (g.adj[v] & m).bit_count()
            if any((g.adj[v] & o).bit_count() < own for j, o in enumerate(masks) if j != i):
                return True
    return False


@dataclass(frozen=True)
class PropertyFlags:
    P1: bool
    P2: bool
    P3: bool
    P4: bool
    P5: bool
    U: tuple[int, ...]

    def all(self) -> bool:
        return self.P1 and self.P2 and self.P3 and self.P4 and self.P5


def check_partition_properties(g: Graph, parts, beta: float, gamma1: float, gamma2: float,
                               delta: float, c: float | None = None,
                               U: Sequence[int] | None = None) -> PropertyFlags:
    """Evaluate the five partition properties for parts V_1..V_k (V_k last).

    U defaults to the vertices of missing degree at least gamma1 * n.  The U∩V_k
    split asked for by P4 exists exactly when every such vertex is non-complete
    to at most one of V_1..V_{k-1}, so P4 is decided vertex by vertex.
    """
    masks = _masks(g, parts)
    n, k = g.n, len(masks)
    if c is None:
        c = c_value(n, g.edge_count)
    dm = missing_degrees(g, parts)
    u_set = set(v for v in range(n) if dm[v] >= gamma1 * n) if U is None else set(U)
    u_mask = mask_of(u_set)

    sizes = [m.bit_count() for m in masks]
    p1 = all(abs(s - c * n) <= beta * n for s in sizes[:-1]) and \
        abs(sizes[-1] - (1 - (k - 1) * c) * n) <= beta * n

    p2 = all(g.cross_edges(masks[i], masks[j]) == sizes[i] * sizes[j]
             for i in range(k - 1) for j in range(i + 1, k - 1))

    p3 = len(u_set) <= delta * n
    for m in masks:
        for v in bits(m):
            inner = g.adj[v] & m
            if inner.bit_count() > delta * n:
                p3 = False
            if not (u_mask >> v & 1) and inner & ~u_mask:
                p3 = False  # a bad edge with neither end in U

    p4 = True
    for v in bits(u_mask & masks[-1]):
        if sum(1 for m in masks[:-1] if g.adj[v] & m != m) > 1:
            p4 = False

    p5 = all((dm[v] >= gamma1 * n) if v in u_set else (dm[v] < gamma2 * n) for v in range(n))
    return PropertyFlags(p1, p2, p3, p4, p5, tuple(sorted(u_set)))


# ---------------------------------------------------------------------------
# comparison of k-partite graphs


@dataclass(frozen=True)
class GapResult:
    bound: Fraction
    holds: bool
    difference: int  # K3(g) - K3(f)


def _independent_parts(g: Graph, masks: list[int]) -> bool:
    return all(not (g.adj[v] & m) for m in masks for v in bits(m))


def kpartite_gap_bound(g: Graph, g_parts, f: Graph, f_parts, d: int) -> GapResult:
    """Lower bound on K3(g) - K3(f) for two k-partite graphs of equal size, evaluated exactly.

    g has parts A_1..A_k, complete between any two of the first k-1.  f has parts
    B_1..B_k with |B_1| = ... = |B_{k-1}| = l > |B_k| = l_k, complete except for at
    most d missing pairs between B_{k-1} and B_k.  With d_i = |A_i| - |B_i| each
    |d_i| <= (l - l_k) / (12 k^3) and d_k >= 0.  Violations raise
    HypothesisError naming the clause.
    """
    if g.n != f.n:
        raise HypothesisError("orders", f"g has {g.n} vertices, f has {f.n}")
    a = _masks(g, g_parts)
    b = _masks(f, f_parts)
    k = len(a)
    n = g.n
    if len(b) != k:
        raise HypothesisError("(i)/(iii)", f"g has {k} parts, f has {len(b)}")
    if not (n >= k >= 3):
        raise HypothesisError("n >= k >= 3", f"n = {n}, k = {k}")
    if not (isinstance(d, int) and d > 0):
        raise HypothesisError("d > 0", f"d = {d}")
    if g.edge_count != f.edge_count:
        raise HypothesisError("e(G) = e(F)", f"{g.edge_count} != {f.edge_count}")
    if not _independent_parts(g, a):
        raise HypothesisError("(i)", "a part of g contains an edge")
    if not _independent_parts(f, b):
        raise HypothesisError("(iii)", "a part of f contains an edge")
    s = [m.bit_count() for m in a]
    ell = [m.bit_count() for m in b]
    for i in range(k - 1):
        for j in range(i + 1, k - 1):
            if g.cross_edges(a[i], a[j]) != s[i] * s[j]:
                raise HypothesisError("(ii)", f"g is not complete between parts {i + 1} and {j + 1}")
    l, lk = ell[0], ell[-1]
    if any(x != l for x in ell[:-1]) or not l > lk:
        raise HypothesisError("(iii)", f"f part sizes {ell} are not l,...,l,l_k with l > l_k")
    for i in range(k):
        for j in range(i + 1, k):
            if (i, j) == (k - 2, k - 1):
                continue
            if f.cross_edges(b[i], b[j]) != ell[i] * ell[j]:
                raise HypothesisError("(iv)", f"f is not complete between parts {i + 1} and {j + 1}")
    d0 = ell[-2] * ell[-1] - f.cross_edges(b[-2], b[-1])
    if d0 > d:
        raise HypothesisError("(iv)", f"f misses {d0} > d = {d} pairs between its last two parts")
    gap = l - lk
    dev = [s[i] - ell[i] for i in range(k)]
    cap = Fraction(gap, 12 * k ** 3)
    for i, di in enumerate(dev):
        if abs(di) > cap:
            raise HypothesisError("(v)", f"|d_{i + 1}| = {abs(di)} exceeds (l - l_k)/(12k^3) = {cap}")
    if dev[-1] < 0:
        raise HypothesisError("(v)", f"d_k = {dev[-1]} is negative")
    ms = [s[i] * s[-1] - g.cross_edges(a[i], a[-1]) for i in range(k - 1)]
    m = sum(ms)
    if m <= 0:
        raise HypothesisError("m > 0", "g has no missing pairs towards its last part")
    bound = Fraction(0)
    for t in range(k - 1):
        sq = (dev[t] + dev[-1]) ** 2 + sum(dev[i] ** 2 for i in range(k - 1) if i != t)
        bound += Fraction(ms[t], m) * Fraction(gap, 4) * sq
    bound -= Fraction(12 * d * d, gap)
    diff = count_triangles(g) - count_triangles(f)
    return GapResult(bound, diff >= bound, diff)


@dataclass(frozen=True)
class GapInstance:
    g: Graph
    g_parts: list[list[int]]
    f: Graph
    f_parts: list[list[int]]
    d: int


def _shuffled_parts(sizes: list[int], rng: random.Random, n: int) -> list[list[int]]:
    verts = list(range(n))
    rng.shuffle(verts)
    parts, pos = [], 0
    for s in sizes:
        parts.append(sorted(verts[pos:pos + s]))
        pos += s
    return parts


def _complete_parts(n: int, parts: list[list[int]]) -> list[int]:
    full = (1 << n) - 1
    rows = [0] * n
    for p in parts:
        pm = mask_of(p)
        for v in p:
            rows[v] = full & ~pm
    return rows


def random_gap_instance(rng: random.Random, n_max: int = 30) -> GapInstance:
    """A random instance meeting every hypothesis of :func:`kpartite_gap_bound`.

    The deviation cap (l - l_k)/(12k^3) is below 1 whenever n <= 30 (it would
    need l - l_k >= 324 already for k = 3), so the part sizes of g and f agree.
    What varies is where g's missing pairs towards its last part sit and how
    many pairs f misses.
    """
    while True:
        k = rng.randint(3, 6)
        lk = rng.randint(1, 6)
        l = rng.randint(lk + 1, 12)
        n = (k - 1) * l + lk
        if n <= n_max:
            break
    sizes = [l] * (k - 1) + [lk]
    g_parts = _shuffled_parts(sizes, rng, n)
    f_parts = _shuffled_parts(sizes, rng, n)
    d0 = rng.randint(1, l * lk)
    # f: remove d0 pairs between its last two parts
    f_rows = _complete_parts(n, f_parts)
    pairs = [(x, y) for x in f_parts[-2] for y in f_parts[-1]]
    for x, y in rng.sample(pairs, d0):
        f_rows[x] &= ~(1 << y)
        f_rows[y] &= ~(1 << x)
    # g: remove d0 pairs between its last part and the others
    g_rows = _complete_parts(n, g_parts)
    pairs = [(x, y) for p in g_parts[:-1] for x in p for y in g_parts[-1]]
    for x, y in rng.sample(pairs, d0):
        g_rows[x] &= ~(1 << y)
        g_rows[y] &= ~(1 << x)
    d = d0 + rng.randint(0, 3)
    return GapInstance(Graph(n, tuple(g_rows)), g_parts, Graph(n, tuple(f_rows)), f_parts, d)


# ---------------------------------------------------------------------------
# exact identities


@dataclass(frozen=True)
class IdentityResult:
    triple_ok: bool
    s_identity_ok: bool | None  # None when s is undefined (e >= n^2/2)
    note: str = ""


def ls_identities(g: Graph) -> IdentityResult:
    """Check two exact identities relating triangles, triple types and degrees.

    * e(n-2) = 3 N3 + 2 N2 + N1, with N_i the triples spanning exactly i edges;
    * K3 = C(s,3)(n/s)^3 + (1/3)(sum_x q(x)^2 + N1), where e = (1 - 1/s) n^2/2,
      q(x) = 2e/n - deg(x) and C(s,3) = s(s-1)(s-2)/6 as a rational polynomial.
    """
    n, e = g.n, g.edge_count
    prof = three_profile(g)
    triple_ok = e * (n - 2) == 3 * prof.n3 + 2 * prof.n2 + prof.n1
    if n == 0 or 2 * e >= n * n:
        return IdentityResult(triple_ok, None, "s undefined: e >= n^2/2")
    s = Fraction(n * n, n * n - 2 * e)
    cs3 = s * (s - 1) * (s - 2) / 6
    avg = Fraction(2 * e, n)
    qsum = sum((avg - dg) ** 2 for dg in g.degrees())
    rhs = cs3 * (n / s) ** 3 + (qsum + prof.n1) / 3
    return IdentityResult(triple_ok, rhs == prof.n3)
