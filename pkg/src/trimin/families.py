"""Structured candidate families for the triangle-minimisation problem.

With ``k = k(n, e)``:

* ``H0``: a complete (k-1)-partite graph (nonempty parts) plus a triangle-free
  graph placed inside the parts.
* ``H1``: parts ``A_1..A_{k-2}`` and ``B``; the ``A_i`` are independent and
  complete to everything else, and ``G[B]`` is triangle-free.
* ``H2``: k independent parts with ``|A_1| >= ... >= |A_k|``; the first k-1 are
  pairwise complete and each vertex of ``A_k`` is non-complete to at most one
  other part.

The starred families are the members with exactly h*(n, e) triangles, described
constructively from the extremal profile.  Each starred family has two
independent implementations: a structural test (:func:`family_membership`) and a
constructive enumerator (:func:`enumerate_family`).  The test suite checks that
they agree.

Because cross pairs between different parts are all edges, every part of an
``H0``/``H1``/first-(k-1)-parts-of-``H2`` witness is a union of connected
components of the complement.  That turns the existential partition searches
into small combinatorial choices over those components.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from typing import Iterator

from .canon import CanonicalForm, canonical_code
from .errors import TriminError, UnsupportedSizeError
from .extremal import ExtremalProfile, extremal_profile
from .generate import all_graph_levels, triangle_free_graphs
from .graph import (
    Graph,
    bits,
    co_components,
    complete_multipartite,
    count_triangles,
    is_independent,
    mask_of,
)

MAX_SEARCH_ORDER = 12
MAX_ENUM_ORDER = 9

Partition = tuple[tuple[int, ...], ...]


class FamilyId(enum.Enum):
    HSTAR = "hstar"
    H0STAR = "h0star"
    H1STAR = "h1star"
    H2STAR = "h2star"
    H0 = "h0"
    H1 = "h1"
    H2 = "h2"

    @classmethod
    def parse(cls, text: str | FamilyId) -> FamilyId:
        if isinstance(text, FamilyId):
            return text
        try:
            return cls(text.strip().lower())
        except ValueError:
            names = ", ".join(f.value for f in cls)
            raise TriminError(f"unknown family {text!r}; choose one of {names}") from None

    @property
    def starred(self) -> bool:
        return self.value.endswith("star")


@dataclass(frozen=True)
class Membership:
    member: bool
    witness: Partition | None = None

    def __bool__(self) -> bool:
        return self.member

    def to_dict(self) -> dict:
        return {"member": self.member,
                "witness": None if self.witness is None else [list(p) for p in self.witness]}


# ---------------------------------------------------------------------------
# witness searches


def _tuple(mask: int) -> tuple[int, ...]:
    return tuple(bits(mask))


def _sorted_parts(masks) -> list[int]:
    """Nonincreasing by size, ties broken by lowest vertex."""
    return sorted(masks, key=lambda m: (-m.bit_count(), m & -m))


def _co_components_within(g: Graph, mask: int) -> list[int]:
    co = [(~g.adj[v] & mask) & ~(1 << v) if mask >> v & 1 else 0 for v in range(g.n)]
    seen = 0
    comps = []
    for v in bits(mask):
        if seen >> v & 1:
            continue
        comp = frontier = 1 << v
        while frontier:
            nxt = 0
            for u in bits(frontier):
                nxt |= co[u]
            frontier = nxt & ~comp
            comp |= nxt
        seen |= comp
        comps.append(comp)
    return comps


def _triangle_free_on(g: Graph, mask: int) -> bool:
    for v in bits(mask):
        row = g.adj[v] & mask
        for u in bits(row):
            if u > v and row & g.adj[u]:
                return False
    return True


def _pairings(items: list[int], p: int) -> Iterator[list[tuple[int, int]]]:
    """All ways to pick p disjoint unordered pairs from ``items``."""
    if p == 0:
        yield []
        return
    if len(items) < 2 * p:
        return
    first, rest = items[0], items[1:]
    # first item unpaired
    yield from _pairings(rest, p)
    for j, other in enumerate(rest):
        remaining = rest[:j] + rest[j + 1:]
        for tail in _pairings(remaining, p - 1):
            yield [(first, other)] + tail


def h0_witnesses(g: Graph, k: int) -> Iterator[list[int]]:
    """Every partition into k-1 nonempty parts with all cross pairs present and triangle-free parts."""
    comps = co_components(g)
    if any(not _triangle_free_on(g, c) for c in comps):
        return
    p = len(comps) - (k - 1)
    if p < 0:
        return
    indep = [i for i, c in enumerate(comps) if is_independent(g, c)]
    for pairs in _pairings(indep, p):
        used = {i for pair in pairs for i in pair}
        parts = [comps[i] | comps[j] for i, j in pairs]
        parts += [c for i, c in enumerate(comps) if i not in used]
        yield _sorted_parts(parts)


def h1_witnesses(g: Graph, k: int) -> Iterator[list[int]]:
    """Every (A_1..A_{k-2}, B) split; each A_i is an independent complement component."""
    comps = co_components(g)
    r = len(comps) - (k - 2)
    if r not in (1, 2):
        return
    for b_idx in combinations(range(len(comps)), r):
        b = 0
        for i in b_idx:
            b |= comps[i]
        a_parts = [c for i, c in enumerate(comps) if i not in b_idx]
        if all(is_independent(g, a) for a in a_parts) and _triangle_free_on(g, b):
            yield _sorted_parts(a_parts) + [b]


def h2_witnesses(g: Graph, k: int) -> Iterator[list[int]]:
    """Every (A_1..A_k) split meeting the H2 conditions, found by choosing the independent set A_k."""
    n = g.n
    full = g.full_mask
    adj = g.adj
    for size in range(1, n // k + 1):
        for last in combinations(range(n), size):
            ak = mask_of(last)
            if not is_independent(g, ak):
                continue
            rest = full & ~ak
            comps = _co_components_within(g, rest)
            if len(comps) != k - 1 or min(c.bit_count() for c in comps) < size:
                continue
            if not all(is_independent(g, c) for c in comps):
                continue
            ok = True
            for x in last:
                if sum(1 for c in comps if adj[x] & c != c) > 1:
                    ok = False
                    break
            if ok:
                yield _sorted_parts(comps) + [ak]


# ---------------------------------------------------------------------------
# starred structural tests


def _missing_between(g: Graph, a: int, b: int) -> int:
    return sum((b & ~g.adj[v]).bit_count() for v in bits(a))


def _h1star_sizes(p: ExtremalProfile) -> list[tuple[list[int], int]]:
    """Admissible (sorted A-sizes, |B|) pairs for H*_1."""
    a, k = p.a_star, p.k
    choices = range(k - 1) if p.m_star == 0 else [k - 2]
    out = []
    for i in choices:
        rest = sorted((a[j] for j in range(k - 1) if j != i), reverse=True)
        pair = (rest, a[i] + a[-1])
        if pair not in out:
            out.append(pair)
    return out


def _is_h1star(g: Graph, p: ExtremalProfile) -> Membership:
    targets = _h1star_sizes(p)
    for parts in h1_witnesses(g, p.k):
        sizes = [m.bit_count() for m in parts]
        if (sizes[:-1], sizes[-1]) in targets:
            return Membership(True, tuple(_tuple(m) for m in parts))
    return Membership(False)


def _is_h0star_extra(g: Graph, p: ExtremalProfile) -> Membership:
    k, a = p.k, p.a_star
    if a[-1] != 1:
        return Membership(False)
    big = a[k - 2] + 1
    target = sorted(list(a[:k - 2]) + [big], reverse=True)
    for parts in h0_witnesses(g, k):
        if [m.bit_count() for m in parts] != target:
            continue
        if all(m.bit_count() == big or is_independent(g, m) for m in parts):
            return Membership(True, tuple(_tuple(m) for m in parts))
    return Membership(False)


def _h2star_vectors(p: ExtremalProfile) -> list[tuple[tuple[int, ...], int]]:
    a, k = p.a_star, p.k
    out = [(a, p.m_star)]
    if p.m_star == 0 and k >= 2 and a[0] >= a[-1] + 2:
        out.append((a[1:k - 1] + (a[0] - 1, a[-1] + 1), a[0] - a[-1] - 1))
    return out


def _is_h2star_core(g: Graph, p: ExtremalProfile) -> Membership:
    k = p.k
    vectors = _h2star_vectors(p)
    for parts in h2_witnesses(g, k):
        first, ak = parts[:-1], parts[-1]
        sizes = sorted((m.bit_count() for m in first), reverse=True)
        missing = sum(_missing_between(g, ak, m) for m in first)
        for vec, m in vectors:
            if (sorted(vec[:-1], reverse=True) != sizes or ak.bit_count() != vec[-1]
                    or missing != m):
                continue
            ref = vec[k - 2]
            if all(g.adj[x] & c == c or c.bit_count() == ref for x in bits(ak) for c in first):
                return Membership(True, tuple(_tuple(c) for c in parts))
    return Membership(False)


def is_k_colourable(g: Graph, k: int) -> tuple[int, ...] | None:
    """A proper colouring with colours 0..k-1 (first-use order), or None."""
    n = g.n
    colour = [-1] * n
    order = sorted(range(n), key=lambda v: -g.degree(v))

    def place(idx: int, used: int) -> bool:
        if idx == n:
            return True
        v = order[idx]
        banned = {colour[u] for u in bits(g.adj[v]) if colour[u] >= 0}
        for c in range(min(used + 1, k)):
            if c not in banned:
                colour[v] = c
                if place(idx + 1, max(used, c + 1)):
                    return True
        colour[v] = -1
        return False

    return tuple(colour) if place(0, 0) else None


# ---------------------------------------------------------------------------
# public membership


def _prepare(g: Graph, e: int | None) -> ExtremalProfile:
    if e is None:
        e = g.edge_count
    if g.edge_count != e:
        raise TriminError(f"graph has {g.edge_count} edges, expected {e}")
    if g.n < 1:
        raise TriminError("families are defined for graphs with at least one vertex")
    return extremal_profile(g.n, e)


def family_membership(g: Graph, family: FamilyId | str, e: int | None = None) -> Membership:
    """Decide membership of ``g`` in the named family; the witness lists the parts.

    Witness layout: H0 gives its k-1 parts; H1 gives A_1..A_{k-2} then B; H2 gives
    A_1..A_k.  Starred families report the witness of the underlying structure.
    """
    fam = FamilyId.parse(family)
    p = _prepare(g, e)
    if g.n > MAX_SEARCH_ORDER:
        raise UnsupportedSizeError(
            f"membership search for {fam.value} supports n <= {MAX_SEARCH_ORDER}, got n = {g.n}"
        )
    if p.k == 1:
        return Membership(True, (tuple(range(g.n)),))
    if fam is FamilyId.H0:
        return _first(h0_witnesses(g, p.k))
    if fam is FamilyId.H1:
        return _first(h1_witnesses(g, p.k))
    if fam is FamilyId.H2:
        return _first(h2_witnesses(g, p.k))
    if count_triangles(g) != p.h_star:
        return Membership(False)
    if fam is FamilyId.H1STAR:
        return _is_h1star(g, p)
    if fam is FamilyId.H0STAR:
        res = _is_h1star(g, p)
        return res if res else _is_h0star_extra(g, p)
    if fam is FamilyId.H2STAR:
        return _is_h2star(g, p)
    for sub in (FamilyId.H0STAR, FamilyId.H2STAR):
        res = family_membership(g, sub, p.e)
        if res:
            return res
    return Membership(False)


def _is_h2star(g: Graph, p: ExtremalProfile) -> Membership:
    res = _is_h2star_core(g, p)
    if res:
        return res
    if is_k_colourable(g, p.k) is not None:
        return _is_h1star(g, p)
    return Membership(False)


def _first(it: Iterator[list[int]]) -> Membership:
    for parts in it:
        return Membership(True, tuple(_tuple(m) for m in parts))
    return Membership(False)


# ---------------------------------------------------------------------------
# constructive enumeration


def _place(base: Graph, block: list[int], inner: Graph) -> Graph:
    rows = list(base.adj)
    for u, v in inner.edges():
        x, y = block[u], block[v]
        rows[x] |= 1 << y
        rows[y] |= 1 << x
    return Graph(base.n, tuple(rows))


def _h1star_codes(p: ExtremalProfile) -> set[int]:
    out = set()
    for rest, b in _h1star_sizes(p):
        inner_edges = p.e - _multi_edges(rest + [b])
        base, parts = complete_multipartite(rest + [b])
        for f in triangle_free_graphs(b, inner_edges):
            out.add(canonical_code(_place(base, parts[-1], f)))
    return out


def _multi_edges(sizes) -> int:
    total = sum(sizes)
    return (total * total - sum(s * s for s in sizes)) // 2


def _h0star_extra_codes(p: ExtremalProfile) -> set[int]:
    k, a = p.k, p.a_star
    if a[-1] != 1:
        return set()
    big = a[k - 2] + 1
    sizes = list(a[:k - 2]) + [big]
    base, parts = complete_multipartite(sizes)
    slots = [parts[i] for i, s in enumerate(sizes) if s == big]
    budget = a[k - 2] - p.m_star
    cap = big * big // 4
    out = set()
    for split in product(range(min(budget, cap) + 1), repeat=len(slots)):
        if sum(split) != budget:
            continue
        options = [triangle_free_graphs(big, c) for c in split]
        for choice in product(*options):
            g = base
            for block, inner in zip(slots, choice):
                g = _place(g, block, inner)
            out.add(canonical_code(g))
    return out


def _h2star_core_codes(p: ExtremalProfile) -> set[int]:
    out = set()
    k = p.k
    for vec, m in _h2star_vectors(p):
        base, parts = complete_multipartite(vec)
        ref = vec[k - 2]
        targets = [parts[i] for i in range(k - 1) if vec[i] == ref]
        last = parts[-1]
        # each vertex of the last part drops a subset of one target part
        options: list[tuple[int, int]] = [(0, 0)]
        for block in targets:
            for r in range(1, len(block) + 1):
                for sub in combinations(block, r):
                    options.append((r, mask_of(sub)))

        def rec(idx: int, left: int, rows: list[int]) -> None:
            if idx == len(last):
                if left == 0:
                    out.add(canonical_code(Graph(base.n, tuple(rows))))
                return
            x = last[idx]
            for cost, sub in options:
                if cost > left:
                    continue
                new = list(rows)
                new[x] &= ~sub
                for y in bits(sub):
                    new[y] &= ~(1 << x)
                rec(idx + 1, left - cost, new)

        rec(0, m, list(base.adj))
    return out


def _starred_codes(p: ExtremalProfile, fam: FamilyId) -> set[int]:
    if p.k == 1:
        return {0}
    if fam is FamilyId.H1STAR:
        return _h1star_codes(p)
    if fam is FamilyId.H0STAR:
        return _h1star_codes(p) | _h0star_extra_codes(p)
    if fam is FamilyId.H2STAR:
        from .canon import graph_from_code

        kpart = {c for c in _h1star_codes(p)
                 if is_k_colourable(graph_from_code(p.n, c), p.k) is not None}
        return kpart | _h2star_core_codes(p)
    return _starred_codes(p, FamilyId.H0STAR) | _starred_codes(p, FamilyId.H2STAR)


@lru_cache(maxsize=4096)
def family_codes(n: int, e: int, family: FamilyId | str) -> frozenset[int]:
    """Canonical codes of every isomorphism class in the family."""
    fam = FamilyId.parse(family)
    if n > MAX_ENUM_ORDER:
        raise UnsupportedSizeError(
            f"enumeration of {fam.value} supports n <= {MAX_ENUM_ORDER}, got n = {n}"
        )
    p = extremal_profile(n, e)
    if fam.starred:
        return frozenset(_starred_codes(p, fam))
    from .canon import graph_from_code

    level = all_graph_levels(n)[e]
    return frozenset(c for c in level
                     if family_membership(graph_from_code(n, c), fam, e))


def enumerate_family(n: int, e: int, family: FamilyId | str) -> list[CanonicalForm]:
    """Every isomorphism class in the family, sorted by canonical code."""
    return [CanonicalForm(n, c) for c in sorted(family_codes(n, e, family))]


def audit_minimum(n: int, e: int) -> int:
    """Least triangle count over enumerated H1 and H2 members (n <= 7)."""
    if n > 7:
        raise UnsupportedSizeError(f"family audit supports n <= 7, got n = {n}")
    counts = [f.graph for fam in (FamilyId.H1, FamilyId.H2) for f in enumerate_family(n, e, fam)]
    if not counts:
        raise TriminError(f"no H1 or H2 member at (n={n}, e={e})")
    return min(count_triangles(g) for g in counts)

