from __future__ import annotations

from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import brute_key, brute_triangles, graphs, labelled_graphs
from trimin.canon import (
    CanonicalForm,
    canonical_code,
    canonical_form,
    canonical_labeling,
    graph_from_code,
    is_isomorphic,
)
from trimin.errors import Graph6Error, GraphError, UnsupportedSizeError
from trimin.generate import GRAPH_COUNTS, TRIANGLE_FREE_COUNTS, all_graph_levels, generate_levels, triangle_free_levels
from trimin.graph import (
    build_graph,
    co_components,
    codegree,
    complete_graph,
    complete_multipartite,
    count_cliques,
    count_triangles,
    cycle_graph,
    edit_distance,
    empty_graph,
    from_json,
    is_triangle_free,
    three_profile,
    to_json,
)
from trimin.graph6 import decode, encode, read_lines


# --- construction and validation -------------------------------------------------

def test_build_graph_rejects_bad_input():
    with pytest.raises(GraphError, match=r"\(0, 0\)"):
        build_graph(3, [(0, 0)])
    with pytest.raises(GraphError, match="repeated"):
        build_graph(3, [(0, 1), (1, 0)])
    with pytest.raises(GraphError, match="outside"):
        build_graph(3, [(0, 3)])
    with pytest.raises(GraphError):
        build_graph(0, [])
    with pytest.raises(GraphError):
        build_graph(65, [])


def test_json_round_trip():
    g = cycle_graph(5)
    assert from_json(to_json(g)) == g
    with pytest.raises(GraphError):
        from_json('{"n": 3}')


@given(graphs())
def test_check_passes_on_built_graphs(g):
    g.check()
    assert g.edge_count == len(g.edges())
    assert g.edge_count + len(g.non_edges()) == g.n * (g.n - 1) // 2


# --- counting --------------------------------------------------------------------

def test_clique_counts_of_small_graphs():
    assert count_triangles(complete_graph(4)) == 4
    assert count_cliques(complete_graph(6), 4) == 15
    assert count_triangles(cycle_graph(5)) == 0
    k222, _ = complete_multipartite([2, 2, 2])
    assert count_triangles(k222) == 8
    assert count_cliques(k222, 4) == 0
    assert count_cliques(complete_graph(5), 6) == 0


@given(graphs())
def test_triangle_count_matches_triple_scan(g):
    assert count_triangles(g) == brute_triangles(g)
    assert count_cliques(g, 3) == brute_triangles(g)


@given(graphs())
def test_three_profile_accounts_for_every_triple(g):
    prof = three_profile(g)
    assert sum(prof) == g.n * (g.n - 1) * (g.n - 2) // 6
    assert prof.n3 == count_triangles(g)


@given(graphs(min_n=2))
def test_codegree_sum_counts_each_triangle_three_times(g):
    total = sum(codegree(g, u, v) for u, v in g.edges())
    assert total == 3 * count_triangles(g)


@given(graphs())
def test_complement_involution_and_edit_distance(g):
    h = g.complement()
    assert h.complement() == g
    assert edit_distance(g, h) == g.n * (g.n - 1) // 2
    assert is_triangle_free(g) == (count_triangles(g) == 0)


def test_co_components_of_multipartite_graph_are_the_parts():
    g, parts = complete_multipartite([3, 2, 1])
    comps = co_components(g)
    assert [sorted(b for b in range(6) if c >> b & 1) for c in comps] == parts


# --- graph6 ----------------------------------------------------------------------

def test_graph6_known_strings():
    # K4 and the 5-cycle as printed by standard tools
    assert encode(complete_graph(4)) == "C~"
    assert encode(cycle_graph(5)) == "Dhc"
    assert decode("C~") == complete_graph(4)
    assert decode(">>graph6<<C~") == complete_graph(4)
    assert encode(empty_graph(1)) == "@"


@given(graphs(max_n=20))
def test_graph6_round_trip(g):
    assert decode(encode(g)) == g


def test_graph6_errors_report_offsets():
    with pytest.raises(Graph6Error) as exc:
        decode("C~~")
    assert exc.value.offset == 2
    with pytest.raises(Graph6Error):
        decode("B~")  # n=3 uses three of the six bits; the padding must be zero
    with pytest.raises(Graph6Error):
        decode("C\x01")
    assert list(read_lines(["C~\n", "\n", "Dhc\n"])) == [complete_graph(4), cycle_graph(5)]


# --- canonical forms ---------------------------------------------------------------

@settings(max_examples=60)
@given(graphs(max_n=8), st.randoms(use_true_random=False))
def test_canonical_form_is_relabelling_invariant(g, r):
    perm = list(range(g.n))
    r.shuffle(perm)
    assert canonical_code(g.relabel(perm)) == canonical_code(g)


@settings(max_examples=60)
@given(graphs(max_n=8))
def test_canonical_graph_is_isomorphic_and_automorphisms_are_valid(g):
    code, order, autos = canonical_labeling(g)
    h = graph_from_code(g.n, code)
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    assert g.relabel(pos) == h
    for perm in autos:
        assert g.relabel(perm) == g


def test_canonical_form_separates_exactly_the_isomorphism_classes():
    # compare against brute force over all relabellings on every labelled 5-vertex graph
    for e in range(0, 11):
        by_canon = {}
        by_brute = {}
        for g in labelled_graphs(5, e):
            by_canon.setdefault(canonical_code(g), set()).add(brute_key(g))
            by_brute.setdefault(brute_key(g), set()).add(canonical_code(g))
        assert all(len(v) == 1 for v in by_canon.values())
        assert all(len(v) == 1 for v in by_brute.values())


def test_canonical_form_object():
    f = canonical_form(cycle_graph(5))
    assert isinstance(f, CanonicalForm)
    assert f.edge_count == 5
    assert len(f.bitstring) == 10
    assert is_isomorphic(decode(f.graph6()), cycle_graph(5))


def test_canonical_form_rejects_large_orders():
    with pytest.raises(UnsupportedSizeError):
        canonical_code(empty_graph(11))


# --- generation --------------------------------------------------------------------

def test_class_counts_match_published_totals():
    for n in range(0, 8):
        levels = generate_levels(n)
        assert sum(len(lv) for lv in levels) == GRAPH_COUNTS[n]
    assert sum(len(lv) for lv in all_graph_levels(8)) == 12346


def test_small_levels():
    levels = all_graph_levels(4)
    assert len(levels[3]) == 3  # path, star, triangle plus isolated vertex
    assert len(all_graph_levels(5)[10]) == 1


def test_per_level_counts_against_labelled_enumeration():
    for n in range(1, 6):
        levels = all_graph_levels(n)
        for e in range(n * (n - 1) // 2 + 1):
            keys = {brute_key(g) for g in labelled_graphs(n, e)}
            assert len(levels[e]) == len(keys), (n, e)


def test_triangle_free_counts():
    for n in range(0, 9):
        assert sum(len(lv) for lv in triangle_free_levels(n)) == TRIANGLE_FREE_COUNTS[n]


def test_generation_refuses_large_orders():
    with pytest.raises(UnsupportedSizeError, match="long-running"):
        generate_levels(10)


def test_parallel_generation_matches_serial():
    serial = generate_levels(6)
    parallel = generate_levels(6, jobs=2)
    assert serial == parallel
