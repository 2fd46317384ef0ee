"""Interior polynomials of hypergraphs and the three routes to h*(B_G).

* ``interior_polynomial_oracle`` walks every spanning tree of Bip H, collects
  hypertrees and counts internally inactive hyperedges.  Slow, definition-level.
* ``interior_hat_via_matchings`` reads I of G-hat off the k-matching vertex sets of G.
* ``hstar_bg_fast`` feeds that into the gamma substitution;
  ``hstar_bg_subgraph_formula`` sums Ehrhart data of edge polytopes of
  G-tilde over induced subgraphs.  Both are cross-checked against
  ``polytope.ehrhart_hstar(build_bg(G))``.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence

from .graphs import Graph, bipartition, components, is_connected, matching_profile, tilde
from .limits import InputError, ResourceLimitError, budget
from .poly import IntPolynomial, gamma_substitute
from .polytope import edge_polytope, ehrhart_hstar


@dataclass(frozen=True)
class Hypergraph:
    """Hyperedges over vertices 1..vertex_count, in their activity order."""

    vertex_count: int
    hyperedges: tuple

    def __post_init__(self):
        hs = tuple(tuple(sorted(e)) for e in self.hyperedges)
        for e in hs:
            if not e:
                raise InputError("hyperedges must be nonempty")
            if not all(1 <= v <= self.vertex_count for v in e):
                raise InputError(f"hyperedge {e} uses a vertex outside 1..{self.vertex_count}")
        object.__setattr__(self, "hyperedges", hs)
        if not is_connected(self.bip()):
            raise InputError("Bip H is disconnected")

    def bip(self) -> Graph:
        """Incidence graph: vertices 1..m, hyperedge j is vertex m + j."""
        m = self.vertex_count
        es = [(v, m + j) for j, e in enumerate(self.hyperedges, 1) for v in e]
        return Graph(m + len(self.hyperedges), tuple(es))

    def reorder(self, order: Sequence[int]) -> "Hypergraph":
        """Hypergraph with hyperedges listed as ``order`` (0-based indices)."""
        return Hypergraph(self.vertex_count, tuple(self.hyperedges[i] for i in order))

    def transpose(self) -> "Hypergraph":
        n = len(self.hyperedges)
        inc = [tuple(j for j in range(1, n + 1) if v in self.hyperedges[j - 1]) for v in range(1, self.vertex_count + 1)]
        return Hypergraph(n, tuple(inc))


def hypergraph_from_bipartite(b: Graph, edge_side=2) -> Hypergraph:
    """Read a connected bipartite graph as a hypergraph.

    ``edge_side`` is 1 or 2 (a side of the canonical bipartition) or an
    explicit vertex collection; those vertices become hyperedges, taken in
    ascending label order.
    """
    part = bipartition(b)
    if part is None:
        raise InputError("graph is not bipartite")
    if not is_connected(b):
        raise InputError("graph is not connected")
    if edge_side in (1, 2):
        hside = part.left if edge_side == 1 else part.right
    else:
        hside = frozenset(edge_side)
        if hside not in (part.left, part.right):
            raise InputError("edge_side is not a side of the bipartition")
    vside = sorted(set(b.vertices) - set(hside))
    index = {v: i + 1 for i, v in enumerate(vside)}
    adj = b.adjacency()
    edges = tuple(tuple(sorted(index[v] for v in adj[e])) for e in sorted(hside))
    return Hypergraph(len(vside), edges)


# ---------------------------------------------------------------------------
# spanning trees and hypertrees


class _DSU:
    def __init__(self, n):
        self.parent = list(range(n))
        self.history = []

    def find(self, x):
        while self.parent[x] != x:
            x = self.parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[rb] = ra
        self.history.append(rb)
        return True

    def undo(self):
        rb = self.history.pop()
        self.parent[rb] = rb


def spanning_trees(n: int, edges: Sequence[tuple], cap: Optional[int] = None):
    """Yield every spanning tree (as a tuple of edge indices) exactly once.

    Include/exclude recursion over the edge list; excluding an edge is only
    explored while the remaining edges can still connect the graph.
    """
    cap = budget("MAX_TREES") if cap is None else cap
    m = len(edges)
    dsu = _DSU(n)
    chosen = []
    produced = 0

    def connectable(start):
        probe = _DSU(n)
        for k in chosen:
            probe.union(*edges[k])
        comps = n - len(chosen)
        for k in range(start, m):
            if probe.union(*edges[k]):
                comps -= 1
                if comps == 1:
                    return True
        return comps == 1

    def rec(i):
        nonlocal produced
        if len(chosen) == n - 1:
            produced += 1
            if produced > cap:
                raise ResourceLimitError(f"more than {cap} spanning trees")
            yield tuple(chosen)
            return
        if m - i < n - 1 - len(chosen):
            return
        u, v = edges[i]
        if dsu.union(u, v):
            chosen.append(i)
            yield from rec(i + 1)
            chosen.pop()
            dsu.undo()
        if connectable(i + 1):
            yield from rec(i + 1)

    if n <= 1:
        yield ()
        return
    yield from rec(0)


def hypertrees(h: Hypergraph, cap: Optional[int] = None) -> frozenset:
    """All hypertrees f, as tuples indexed like ``h.hyperedges``."""
    bip = h.bip()
    m = h.vertex_count
    edges = [(u - 1, v - 1) for u, v in bip.edges]
    out = set()
    for tree in spanning_trees(bip.d, edges, cap):
        deg = [0] * len(h.hyperedges)
        for k in tree:
            deg[edges[k][1] - m] += 1
        out.add(tuple(x - 1 for x in deg))
    return frozenset(out)


def internal_inactivity(f: tuple, trees: frozenset) -> int:
    """Number of hyperedges whose value can move to an earlier hyperedge."""
    count = 0
    for j in range(1, len(f)):
        if f[j] == 0:
            continue
        for jp in range(j):
            g = list(f)
            g[j] -= 1
            g[jp] += 1
            if tuple(g) in trees:
                count += 1
                break
    return count


def interior_polynomial_oracle(h: Hypergraph, order: Optional[Sequence[int]] = None,
                               cap: Optional[int] = None) -> IntPolynomial:
    """I_H(x) = sum over hypertrees f of x^(number of internally inactive hyperedges)."""
    if order is not None:
        h = h.reorder(order)
    trees = hypertrees(h, cap)
    coeffs = [0] * (len(h.hyperedges) + 1)
    for f in trees:
        coeffs[internal_inactivity(f, trees)] += 1
    return IntPolynomial(coeffs)


# ---------------------------------------------------------------------------
# the h*(B_G) pipelines


def interior_hat_via_matchings(g: Graph) -> IntPolynomial:
    """I of G-hat as sum_k |M(G, k)| x^k."""
    if bipartition(g) is None:
        raise InputError("graph is not bipartite")
    return IntPolynomial(matching_profile(g).set_counts)


def hstar_bg_fast(g: Graph) -> IntPolynomial:
    return gamma_substitute(interior_hat_via_matchings(g), g.d)


def hstar_bg_subgraph_formula(g: Graph) -> IntPolynomial:
    """sum_j 2^j (x-1)^(d-j) sum over induced H on j vertices of h*(P of H-tilde).

    Each inner h* comes from brute-force lattice point counting; isomorphic
    induced subgraphs share one computation.
    """
    d = g.d
    cache = {}
    total = IntPolynomial()
    xm1 = IntPolynomial([-1, 1])
    for j in range(d + 1):
        inner = IntPolynomial()
        for vs in combinations(g.vertices, j):
            sub = g.induced(vs)
            key = (sub.d, sub.edges)
            if key not in cache:
                cache[key] = ehrhart_hstar(edge_polytope(tilde(sub))).hstar
            inner = inner + cache[key]
        total = total + IntPolynomial([2**j]) * xm1 ** (d - j) * inner
    return total


def hstar_bg_components(g: Graph) -> IntPolynomial:
    """Product of hstar_bg_fast over connected components."""
    out = IntPolynomial([1])
    for comp, _ in components(g):
        out = out * hstar_bg_fast(comp)
    return out
