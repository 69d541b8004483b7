from __future__ import annotations

from itertools import product
from math import comb

import pytest

from trimin.canon import canonical_code, graph_from_code, is_isomorphic
from trimin.errors import TriminError, UnsupportedSizeError
from trimin.extremal import build_h_star, extremal_profile
from trimin.families import (
    FamilyId,
    enumerate_family,
    family_codes,
    family_membership,
    is_k_colourable,
)
from trimin.generate import all_graph_levels
from trimin.graph import (
    build_graph,
    complete_graph,
    complete_multipartite,
    count_triangles,
    cycle_graph,
    empty_graph,
)


# --- definitional brute force ------------------------------------------------------------

def _classes(g, labels, r):
    return [[v for v in range(g.n) if labels[v] == i] for i in range(r)]


def _complete_between(g, a, b):
    return all(g.has_edge(u, v) for u in a for v in b)


def _independent(g, a):
    return not any(g.has_edge(u, v) for i, u in enumerate(a) for v in a[i + 1:])


def _triangle_free(g, a):
    return not any(g.has_edge(x, y) and g.has_edge(x, z) and g.has_edge(y, z)
                   for i, x in enumerate(a) for j, y in enumerate(a[i + 1:], i + 1)
                   for z in a[j + 1:])


def brute_h0(g, k):
    for labels in product(range(k - 1), repeat=g.n):
        parts = _classes(g, labels, k - 1)
        if all(parts) and all(_complete_between(g, parts[i], parts[j])
                              for i in range(k - 1) for j in range(i + 1, k - 1)) \
                and all(_triangle_free(g, p) for p in parts):
            return True
    return False


def brute_h1(g, k):
    for labels in product(range(k - 1), repeat=g.n):
        parts = _classes(g, labels, k - 1)
        if all(parts) and all(_complete_between(g, parts[i], parts[j])
                              for i in range(k - 1) for j in range(i + 1, k - 1)) \
                and all(_independent(g, p) for p in parts[:-1]) and _triangle_free(g, parts[-1]):
            return True
    return False


def brute_h2(g, k):
    for labels in product(range(k), repeat=g.n):
        parts = _classes(g, labels, k)
        sizes = [len(p) for p in parts]
        if not all(parts) or sizes != sorted(sizes, reverse=True):
            continue
        if not all(_independent(g, p) for p in parts):
            continue
        if not all(_complete_between(g, parts[i], parts[j])
                   for i in range(k - 1) for j in range(i + 1, k - 1)):
            continue
        if all(sum(not _complete_between(g, [x], parts[j]) for j in range(k - 1)) <= 1
               for x in parts[-1]):
            return True
    return False


BRUTE = {FamilyId.H0: brute_h0, FamilyId.H1: brute_h1, FamilyId.H2: brute_h2}


@pytest.mark.parametrize("fam", [FamilyId.H0, FamilyId.H1, FamilyId.H2])
def test_unstarred_membership_matches_definition(fam):
    for n in range(1, 6):
        for e, level in enumerate(all_graph_levels(n)):
            if e == 0:
                continue
            k = extremal_profile(n, e).k
            for code in level:
                g = graph_from_code(n, code)
                got = family_membership(g, fam, e)
                assert bool(got) == BRUTE[fam](g, k), (n, e, g.edges(), fam)


@pytest.mark.parametrize("fam", [FamilyId.H0, FamilyId.H1])
def test_unstarred_membership_matches_definition_order_six(fam):
    for e, level in enumerate(all_graph_levels(6)):
        if e == 0:
            continue
        k = extremal_profile(6, e).k
        for code in level:
            g = graph_from_code(6, code)
            assert bool(family_membership(g, fam, e)) == BRUTE[fam](g, k), (e, g.edges())


def test_witnesses_are_valid_partitions():
    for n in range(2, 7):
        for e, level in enumerate(all_graph_levels(n)):
            if e == 0:
                continue
            k = extremal_profile(n, e).k
            for code in level:
                g = graph_from_code(n, code)
                for fam in (FamilyId.H0, FamilyId.H1, FamilyId.H2):
                    res = family_membership(g, fam, e)
                    if not res:
                        continue
                    parts = [list(p) for p in res.witness]
                    assert sorted(v for p in parts for v in p) == list(range(n))
                    assert len(parts) == (k if fam is FamilyId.H2 else k - 1)
                    assert all(_complete_between(g, parts[i], parts[j])
                               for i in range(len(parts) - (fam is FamilyId.H2))
                               for j in range(i + 1, len(parts) - (fam is FamilyId.H2)))


def test_h1_is_contained_in_h0():
    for n in range(1, 8):
        for e in range(1, comb(n, 2) + 1):
            assert family_codes(n, e, "h1") <= family_codes(n, e, "h0")


# --- examples -------------------------------------------------------------------------

def test_membership_examples():
    assert family_membership(cycle_graph(5), FamilyId.H1, 5)
    h = build_h_star(6, 10)
    for fam in FamilyId:
        assert family_membership(h, fam, 10), fam
    k5e = complete_graph(5).remove_edge(0, 1)
    res = family_membership(k5e, "h2", 9)
    assert res and sorted(len(p) for p in res.witness) == [1, 1, 1, 2]
    assert res.to_dict()["member"] is True


def test_membership_errors():
    with pytest.raises(TriminError, match="expected 4"):
        family_membership(cycle_graph(5), "h1", 4)
    with pytest.raises(TriminError, match="unknown family"):
        family_membership(cycle_graph(5), "h7")
    with pytest.raises(UnsupportedSizeError):
        family_membership(empty_graph(13).add_edge(0, 1), "h0")
    with pytest.raises(UnsupportedSizeError):
        enumerate_family(10, 30, "h1star")


def test_h1star_of_six_ten():
    members = enumerate_family(6, 10, "h1star")
    assert members
    for f in members:
        g = f.graph
        assert g.edge_count == 10 and count_triangles(g) == 3
    assert any(is_isomorphic(f.graph, build_h_star(6, 10)) for f in members)


def test_h0star_extra_only_when_last_part_is_single():
    for n in range(2, 9):
        for e in range(1, comb(n, 2) + 1):
            p = extremal_profile(n, e)
            extra = family_codes(n, e, "h0star") - family_codes(n, e, "h1star")
            if extra:
                assert p.a_star[-1] == 1, (n, e)


def test_h2star_five_nine():
    members = family_codes(5, 9, "h2star")
    k2111, _ = complete_multipartite([2, 1, 1, 1])
    assert canonical_code(k2111) in members


def test_h2star_variant_vector():
    # (7, 15): a* = (3,3,1), m* = 0 and a*_1 >= a*_k + 2, so (3,2,2) minus one edge joins in
    p = extremal_profile(7, 15)
    assert p.a_star == (3, 3, 1) and p.m_star == 0
    g, parts = complete_multipartite([3, 2, 2])
    g = g.remove_edge(parts[2][0], parts[1][0])
    assert g.edge_count == 15 and count_triangles(g) == p.h_star
    assert canonical_code(g) in family_codes(7, 15, "h2star")
    assert family_membership(g, "h2star", 15)


def test_structural_and_constructive_starred_families_agree():
    for n in range(1, 8):
        for e in range(1, comb(n, 2) + 1):
            for fam in ("h0star", "h1star", "h2star", "hstar"):
                built = family_codes(n, e, fam)
                level = all_graph_levels(n)[e]
                found = {c for c in level if family_membership(graph_from_code(n, c), fam, e)}
                assert built == found, (n, e, fam)


def test_starred_members_have_h_star_triangles():
    for n in range(1, 8):
        for e in range(1, comb(n, 2) + 1):
            h = extremal_profile(n, e).h_star
            for code in family_codes(n, e, "hstar"):
                g = graph_from_code(n, code)
                assert g.edge_count == e and count_triangles(g) == h


def test_is_k_colourable():
    assert is_k_colourable(cycle_graph(5), 2) is None
    colouring = is_k_colourable(cycle_graph(5), 3)
    assert colouring is not None
    g = cycle_graph(5)
    assert all(colouring[u] != colouring[v] for u, v in g.edges())
    assert is_k_colourable(complete_graph(4), 3) is None
    assert is_k_colourable(build_graph(3, []), 1) is not None
