from itertools import combinations, permutations

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from bgpoly.graphs import (
    Graph, LoopGraph, bg_occ, bipartition, canonical_form, chordless_cycles, complement, complete_bipartite,
    complete_graph, components, cycle_graph, disjoint_union, empty_graph, format_edge_list, graph_classes,
    hat, is_bipartite, is_bipartite_permutation, is_chordal_bipartite, is_connected, is_forest,
    matching_profile, parse_edge_list, path_graph, satisfies_occ, tilde, all_graphs,
)
from bgpoly.limits import InputError, ResourceLimitError

from conftest import two_triangles


@st.composite
def graphs(draw, max_d=7):
    d = draw(st.integers(0, max_d))
    pairs = list(combinations(range(1, d + 1), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(d, tuple(p for p, m in zip(pairs, mask) if m))


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from(g.edges)
    return h


def test_graph_validation():
    with pytest.raises(InputError):
        Graph(2, ((1, 1),))
    with pytest.raises(InputError):
        Graph(2, ((1, 2), (2, 1)))
    with pytest.raises(InputError):
        Graph(2, ((1, 3),))
    assert Graph(3, ((3, 1), (2, 1))).edges == ((1, 2), (1, 3))


def test_parse_edge_list():
    g = parse_edge_list("# comment\n3\n1 2\n\n# another\n3 2\n")
    assert g == Graph(3, ((1, 2), (2, 3)))
    assert parse_edge_list(format_edge_list(g)) == g
    for bad in ("", "x\n", "2\n1 1\n", "2\n1 2\n2 1\n", "2\n1 3\n", "2\n1 2 3\n", "2\na b\n"):
        with pytest.raises(InputError):
            parse_edge_list(bad)


def test_bipartition_examples():
    b = bipartition(cycle_graph(4))
    assert b.left == frozenset({1, 3}) and b.right == frozenset({2, 4})
    assert bipartition(complete_graph(3)) is None
    # smallest vertex of every component goes left
    b = bipartition(disjoint_union(path_graph(2), path_graph(2)))
    assert b.left == frozenset({1, 3})


def test_components_relabel():
    g = Graph(5, ((1, 4), (2, 5)))
    parts = components(g)
    assert [verts for _, verts in parts] == [[1, 4], [2, 5], [3]]
    assert all(h.d == len(v) for h, v in parts)


def test_chordless_cycles_examples():
    assert len(chordless_cycles(complete_graph(4))) == 4
    assert chordless_cycles(cycle_graph(6)) == [(1, 2, 3, 4, 5, 6)]
    assert chordless_cycles(path_graph(5)) == []
    assert chordless_cycles(complete_bipartite(2, 3), 6) == []
    with pytest.raises(ResourceLimitError):
        chordless_cycles(complete_graph(7), cap=10)


@settings(max_examples=80, deadline=None)
@given(graphs())
def test_chordless_cycles_match_networkx(g):
    ours = {frozenset(c) for c in chordless_cycles(g)}
    theirs = {frozenset(c) for c in nx.chordless_cycles(to_nx(g)) if len(c) >= 3}
    assert ours == theirs


@settings(max_examples=80, deadline=None)
@given(graphs())
def test_bipartite_iff_no_odd_chordless_cycle(g):
    assert is_bipartite(g) == (not any(len(c) % 2 for c in chordless_cycles(g)))
    assert is_bipartite(g) == nx.is_bipartite(to_nx(g))
    if is_bipartite(g):
        assert satisfies_occ(g) and bg_occ(g)


def test_occ_examples():
    assert satisfies_occ(complete_graph(5))
    t2 = two_triangles()
    assert satisfies_occ(t2) and not bg_occ(t2)
    bridged = Graph(6, t2.edges + ((1, 4),))
    assert satisfies_occ(bridged) and bg_occ(bridged)
    # two triangles in one component, not adjacent to each other
    apex = Graph(7, t2.edges + ((1, 7), (4, 7)))
    assert not satisfies_occ(apex) and not bg_occ(apex)


def brute_occ(g, same_component):
    """Odd cycle condition over all odd cycles (not only chordless ones)."""
    h = to_nx(g)
    cyc = [set(c) for c in nx.simple_cycles(h) if len(c) % 2 and len(c) >= 3]
    comp = {v: i for i, cc in enumerate(nx.connected_components(h)) for v in cc}
    for a, b in combinations(cyc, 2):
        if a & b:
            continue
        if same_component and comp[next(iter(a))] != comp[next(iter(b))]:
            continue
        if not any(g.has_edge(u, v) for u in a for v in b):
            return False
    return True


def test_occ_chordless_reduction_exhaustive_7():
    for g in graph_classes(7):
        assert satisfies_occ(g) == brute_occ(g, True)
        assert bg_occ(g) == brute_occ(g, False)


def test_chordal_bipartite():
    assert is_chordal_bipartite(cycle_graph(4))
    assert not is_chordal_bipartite(cycle_graph(6))
    assert not is_chordal_bipartite(complete_graph(3))
    assert is_chordal_bipartite(complete_bipartite(3, 3))


def test_trees_are_chordal_bipartite():
    for d in range(1, 9):
        for g in graph_classes(d) if d <= 7 else []:
            if is_forest(g):
                assert is_chordal_bipartite(g)
    # 8-vertex trees via networkx
    for t in nx.nonisomorphic_trees(8):
        g = Graph(8, tuple((u + 1, v + 1) for u, v in t.edges()))
        assert is_chordal_bipartite(g)


def test_tilde_and_hat():
    p = path_graph(3)
    t = tilde(p)
    assert isinstance(t, LoopGraph) and t.loops == (4,)
    assert set(t.edges) == {(1, 2), (2, 3), (1, 4), (2, 4), (3, 4)}
    h = hat(p)
    assert h.d == 5 and is_connected(h) and is_bipartite(h)
    assert set(h.edges) == {(1, 2), (2, 3), (1, 4), (3, 4), (2, 5), (4, 5)}
    with pytest.raises(InputError):
        hat(complete_graph(3))


def test_hat_connected_bipartite_exhaustive():
    for d in range(0, 7):
        for g in graph_classes(d) if d else [empty_graph(0)]:
            if is_bipartite(g):
                h = hat(g)
                assert is_connected(h) and is_bipartite(h)


def brute_profile(g):
    sets, counts = {}, {}
    for k in range(g.d // 2 + 1):
        for es in combinations(g.edges, k):
            vs = [v for e in es for v in e]
            if len(set(vs)) == 2 * k:
                counts[k] = counts.get(k, 0) + 1
                sets.setdefault(k, set()).add(frozenset(vs))
    top = max(counts)
    return tuple(len(sets[k]) for k in range(top + 1)), tuple(counts[k] for k in range(top + 1))


def test_matching_profile_examples():
    mp = matching_profile(cycle_graph(4))
    assert mp.set_counts == (1, 4, 1) and mp.matching_counts == (1, 4, 2)
    assert matching_profile(path_graph(2)).set_counts == (1, 1)


@settings(max_examples=80, deadline=None)
@given(graphs())
def test_matching_profile_matches_brute_force(g):
    mp = matching_profile(g)
    assert (mp.set_counts, mp.matching_counts) == brute_profile(g)
    assert all(s <= m for s, m in zip(mp.set_counts, mp.matching_counts))
    if is_forest(g):
        assert mp.set_counts == mp.matching_counts


@settings(max_examples=50, deadline=None)
@given(graphs())
def test_complement_involution(g):
    assert complement(complement(g)) == g
    assert len(complement(g).edges) + len(g.edges) == g.d * (g.d - 1) // 2


def strong_ordering_holds(g, o1, o2):
    r1 = {v: i for i, v in enumerate(o1)}
    r2 = {v: i for i, v in enumerate(o2)}
    for i, ip in permutations(o1, 2):
        for j, jp in permutations(o2, 2):
            if r1[i] < r1[ip] and r2[j] < r2[jp] and g.has_edge(i, j) and g.has_edge(ip, jp):
                if not (g.has_edge(i, jp) and g.has_edge(ip, j)):
                    return False
    return True


def test_bipartite_permutation_examples():
    assert is_bipartite_permutation(cycle_graph(4)) is not None
    assert is_bipartite_permutation(path_graph(2)) is not None
    assert is_bipartite_permutation(cycle_graph(6)) is None
    with pytest.raises(InputError):
        is_bipartite_permutation(complete_graph(3))
    with pytest.raises(ResourceLimitError):
        is_bipartite_permutation(complete_bipartite(9, 1))


def test_bipartite_permutation_witness_and_brute_force():
    for d in range(1, 7):
        for g in graph_classes(d):
            b = bipartition(g)
            if b is None:
                continue
            res = is_bipartite_permutation(g)
            v1, v2 = sorted(b.left), sorted(b.right)
            brute = any(strong_ordering_holds(g, o1, o2)
                        for o1 in permutations(v1) for o2 in permutations(v2))
            assert (res is not None) == brute
            if res is not None:
                assert sorted(res[0]) == v1 and sorted(res[1]) == v2
                assert strong_ordering_holds(g, *res)
                assert is_chordal_bipartite(g)


def test_graph_class_counts():
    assert [len(graph_classes(d)) for d in range(1, 8)] == [1, 2, 4, 11, 34, 156, 1044]
    assert len({canonical_form(g) for g in all_graphs(5)}) == 34
    assert sum(1 for _ in all_graphs(4)) == 64
