from itertools import product
from math import factorial

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy.optimize import linprog
from scipy.spatial import ConvexHull

from bgpoly.graphs import Graph, complete_bipartite, complete_graph, cycle_graph, empty_graph, path_graph, tilde
from bgpoly.limits import InputError, ResourceLimitError
from bgpoly.polytope import (
    LatticePolytope, build_bg, count_lattice_points, cross_polytope, edge_polytope, ehrhart_hstar,
    facet_description, hstar_from_counts, is_idp, is_reflexive, lattice_points, normalized_volume,
    orthant_restriction,
)

from conftest import two_triangles


def in_hull_lp(gens, x):
    """Feasibility of x = sum l_i g_i, sum l_i = 1, l >= 0."""
    G = np.array(gens, dtype=float).T
    A = np.vstack([G, np.ones((1, G.shape[1]))])
    b = np.concatenate([np.array(x, dtype=float), [1.0]])
    res = linprog(np.zeros(G.shape[1]), A_eq=A, b_eq=b, bounds=(0, None), method="highs")
    return res.status == 0


def brute_points(p, n=1):
    gens = np.array(p.generators)
    lo, hi = n * gens.min(axis=0), n * gens.max(axis=0)
    out = []
    for x in product(*[range(a, b + 1) for a, b in zip(lo, hi)]):
        if in_hull_lp([[n * c for c in q] for q in p.generators], x):
            out.append(x)
    return sorted(out)


point_sets = st.lists(st.tuples(*[st.integers(-2, 2)] * 3), min_size=4, max_size=8)


def test_bg_k11_points_and_invariants():
    p = build_bg(Graph(2, ((1, 2),)))
    pts = sorted(map(tuple, lattice_points(p).tolist()))
    assert pts == sorted(product((-1, 0, 1), repeat=2))
    assert is_reflexive(p)
    assert ehrhart_hstar(p).hstar == [1, 6, 1]
    dim, facets, eqs = facet_description(p)
    assert dim == 2 and len(facets) == 4 and all(f.rhs == 1 for f in facets) and eqs == ()


def test_segment_facets():
    dim, facets, _ = facet_description(LatticePolytope([(0,), (2,)]))
    assert dim == 1 and [(f.normal, f.rhs) for f in facets] == [((-1,), 0), ((1,), 2)]


def test_known_hstars():
    assert ehrhart_hstar(cross_polytope(4)).hstar == [1, 4, 6, 4, 1]
    cube = LatticePolytope(list(product((0, 1), repeat=3)))
    assert ehrhart_hstar(cube).hstar == [1, 4, 1]
    simplex = LatticePolytope([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)])
    assert ehrhart_hstar(simplex).hstar == [1]
    reeve = LatticePolytope([(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 3)])
    assert ehrhart_hstar(reeve).hstar == [1, 0, 2]
    assert ehrhart_hstar(build_bg(path_graph(3))).hstar == [1, 11, 11, 1]
    assert ehrhart_hstar(build_bg(cycle_graph(4))).hstar == [1, 20, 54, 20, 1]
    assert ehrhart_hstar(build_bg(complete_graph(3))).hstar == [1, 15, 23, 1]


def test_hstar_from_counts_roundtrip():
    counts = [1, 9, 25, 49]
    assert hstar_from_counts(counts, 2) == [1, 6, 1]


def test_lower_dimensional_edge_polytopes():
    p = edge_polytope(complete_bipartite(2, 3))
    # product of simplices, dimension p + q - 2
    assert p.affine_dim == 3
    _, _, eqs = facet_description(p)
    assert len(eqs) == 2
    assert ehrhart_hstar(p).hstar == [1, 2]
    t = edge_polytope(tilde(Graph(2, ((1, 2),))))
    assert t.affine_dim == 2 and ehrhart_hstar(t).hstar == [1, 1]
    with pytest.raises(InputError):
        edge_polytope(empty_graph(3))


@settings(max_examples=30, deadline=None)
@given(point_sets)
def test_facets_match_scipy(pts):
    arr = np.array(pts)
    if np.linalg.matrix_rank(arr[1:] - arr[0]) < 3:
        return
    p = LatticePolytope(pts)
    ours = sorted((f.normal, f.rhs) for f in p.facets)
    hull = ConvexHull(arr)
    theirs = set()
    for eq in hull.equations:
        normal, off = eq[:-1], -eq[-1]
        # rescale to the primitive integer normal
        k = 1.0 / np.min(np.abs(normal[np.abs(normal) > 1e-9]))
        for m in range(1, 50):
            cand = normal * k * m
            if np.allclose(cand, np.round(cand), atol=1e-7):
                break
        n_int = tuple(int(round(c)) for c in cand)
        from math import gcd
        g = 0
        for c in n_int:
            g = gcd(g, c)
        n_int = tuple(c // g for c in n_int)
        theirs.add((n_int, int(round(off * k * m / g))))
    assert ours == sorted(theirs)
    assert normalized_volume(p) == round(hull.volume * factorial(3))


@settings(max_examples=25, deadline=None)
@given(point_sets, st.integers(1, 2))
def test_lattice_points_match_lp_oracle(pts, n):
    p = LatticePolytope(pts)
    ours = sorted(map(tuple, lattice_points(p, n).tolist()))
    assert ours == brute_points(p, n)
    assert count_lattice_points(p, n) == len(ours)


def test_lower_dim_points_match_lp_oracle():
    p = edge_polytope(tilde(path_graph(3)))
    for n in (1, 2):
        assert sorted(map(tuple, lattice_points(p, n).tolist())) == brute_points(p, n)


def test_contains_dilates():
    p = build_bg(path_graph(3))
    assert p.contains((1, 1, 0)) and not p.contains((1, 0, 1))
    assert p.contains((1, 0, 1), 2)
    e = edge_polytope(complete_bipartite(1, 2))
    assert e.contains((2, 1, 1), 2) and not e.contains((1, 1, 1), 2)


def test_reflexive_examples_and_errors():
    assert is_reflexive(build_bg(cycle_graph(4)))
    assert not is_reflexive(build_bg(complete_graph(3)))
    with pytest.raises(InputError):
        is_reflexive(edge_polytope(complete_bipartite(1, 2)))
    with pytest.raises(InputError):
        is_reflexive(LatticePolytope([(0, 0), (1, 0), (0, 1)]))


def brute_idp(p, k):
    base = {tuple(x) for x in lattice_points(p, 1).tolist()}
    sums = set(base)
    for _ in range(k - 1):
        sums = {tuple(a + b for a, b in zip(s, t)) for s in sums for t in base}
    return {tuple(x) for x in lattice_points(p, k).tolist()} <= sums


def test_idp_examples():
    r = is_idp(build_bg(complete_graph(5)), 3)
    assert r and r.witness is None
    reeve = LatticePolytope([(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 3)])
    r = is_idp(reeve, 2)
    assert not r and r.witness_k == 2 and reeve.contains(r.witness, 2)
    assert not brute_idp(reeve, 2)
    r = is_idp(build_bg(two_triangles()), 3)
    assert not r and r.witness_k == 3 and r.witness == (-1,) * 6
    with pytest.raises(InputError):
        is_idp(reeve, 1)


@settings(max_examples=20, deadline=None)
@given(point_sets)
def test_idp_matches_set_oracle(pts):
    p = LatticePolytope(pts)
    assert bool(is_idp(p, 2)) == brute_idp(p, 2)


def test_orthant_restriction():
    p = build_bg(path_graph(2))
    q = orthant_restriction(p, (1, 1))
    assert q.generators == ((0, 0), (0, 1), (1, 0), (1, 1))
    with pytest.raises(InputError):
        orthant_restriction(p, (1, 0))


def test_point_budget():
    import os
    os.environ["BGPOLY_MAX_POINTS"] = "5"
    try:
        with pytest.raises(ResourceLimitError):
            count_lattice_points(build_bg(path_graph(3)), 1)
    finally:
        del os.environ["BGPOLY_MAX_POINTS"]
