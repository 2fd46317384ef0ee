"""Simple graphs on [d], their predicates, and the G-tilde / G-hat constructions."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Iterable, Optional

from .limits import InputError, ResourceLimitError, budget


def _edge(u: int, v: int) -> tuple:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Finite simple undirected graph on the vertices 1..d."""

    d: int
    edges: tuple = ()

    def __post_init__(self):
        if self.d < 0:
            raise InputError("vertex count must be nonnegative")
        seen = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise InputError(f"loop at vertex {u}")
            if not (1 <= u <= self.d and 1 <= v <= self.d):
                raise InputError(f"edge {e} has an endpoint outside 1..{self.d}")
            key = _edge(u, v)
            if key in seen:
                raise InputError(f"duplicate edge {key}")
            seen.add(key)
        object.__setattr__(self, "edges", tuple(sorted(seen)))

    @classmethod
    def from_edges(cls, d: int, edges: Iterable) -> "Graph":
        return cls(d, tuple(tuple(e) for e in edges))

    @property
    def vertices(self) -> range:
        return range(1, self.d + 1)

    def adjacency(self) -> dict:
        adj = {v: set() for v in self.vertices}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def has_edge(self, u: int, v: int) -> bool:
        return _edge(u, v) in self._edge_set

    @property
    def _edge_set(self) -> frozenset:
        cached = self.__dict__.get("_es")
        if cached is None:
            cached = frozenset(self.edges)
            object.__setattr__(self, "_es", cached)
        return cached

    def induced(self, vertices: Iterable[int]) -> "Graph":
        """Induced subgraph, relabelled to 1..k preserving vertex order."""
        vs = sorted(vertices)
        index = {v: i + 1 for i, v in enumerate(vs)}
        es = [(index[u], index[v]) for u, v in self.edges if u in index and v in index]
        return Graph(len(vs), tuple(es))

    def relabel(self, perm) -> "Graph":
        """Graph with vertex v renamed perm[v-1]."""
        return Graph(self.d, tuple(_edge(perm[u - 1], perm[v - 1]) for u, v in self.edges))


@dataclass(frozen=True)
class LoopGraph:
    """Graph that may carry at most one loop per vertex."""

    d: int
    edges: tuple = ()
    loops: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "edges", Graph(self.d, self.edges).edges)
        loops = tuple(sorted(set(self.loops)))
        if len(loops) != len(self.loops):
            raise InputError("at most one loop per vertex")
        for v in loops:
            if not 1 <= v <= self.d:
                raise InputError(f"loop at {v} outside 1..{self.d}")
        object.__setattr__(self, "loops", loops)


@dataclass(frozen=True)
class Bipartition:
    left: frozenset
    right: frozenset

    def side_of(self, v: int) -> int:
        return 1 if v in self.left else 2


@dataclass(frozen=True)
class MatchingProfile:
    set_counts: tuple
    matching_counts: tuple

    def __post_init__(self):
        assert self.set_counts[0] == 1 and self.matching_counts[0] == 1
        assert all(s <= m for s, m in zip(self.set_counts, self.matching_counts))


# ---------------------------------------------------------------------------
# structure


def components(g: Graph) -> list:
    """Connected components as (Graph, vertex list) pairs, ordered by smallest vertex.

    The component graph uses labels 1..k; ``vertex list[i-1]`` is the original
    label of its vertex i.
    """
    adj = g.adjacency()
    seen = set()
    out = []
    for s in g.vertices:
        if s in seen:
            continue
        comp = []
        queue = deque([s])
        seen.add(s)
        while queue:
            u = queue.popleft()
            comp.append(u)
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        comp.sort()
        out.append((g.induced(comp), comp))
    return out


def is_connected(g: Graph) -> bool:
    return g.d <= 1 or len(components(g)) == 1


def bipartition(g: Graph) -> Optional[Bipartition]:
    """Canonical 2-colouring, or None when g has an odd cycle.

    Within each component the side holding its smallest vertex is the left side.
    """
    adj = g.adjacency()
    colour = {}
    for s in g.vertices:
        if s in colour:
            continue
        colour[s] = 1
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if w not in colour:
                    colour[w] = 3 - colour[u]
                    queue.append(w)
                elif colour[w] == colour[u]:
                    return None
    left = frozenset(v for v, c in colour.items() if c == 1)
    right = frozenset(v for v, c in colour.items() if c == 2)
    return Bipartition(left, right)


def is_bipartite(g: Graph) -> bool:
    return bipartition(g) is not None


def is_forest(g: Graph) -> bool:
    return len(g.edges) == g.d - len(components(g))


def complement(g: Graph) -> Graph:
    es = [e for e in combinations(g.vertices, 2) if not g.has_edge(*e)]
    return Graph(g.d, tuple(es))


# ---------------------------------------------------------------------------
# cycles and the parity predicates


def chordless_cycles(g: Graph, min_len: int = 3, cap: Optional[int] = None) -> list:
    """All induced cycles of length >= min_len.

    Each cycle is reported once, as a tuple starting at its smallest vertex
    and continuing toward the smaller of that vertex's two cycle neighbours.
    """
    if min_len < 3:
        raise InputError("min_len must be at least 3")
    cap = budget("MAX_CYCLES") if cap is None else cap
    adj = g.adjacency()
    found = []

    def extend(path, on_path):
        s = path[0]
        last = path[-1]
        interior = path[1:-1]
        for w in sorted(adj[last]):
            if w <= s or w in on_path:
                continue
            if any(w in adj[x] for x in interior):
                continue
            if s in adj[w]:
                if len(path) >= 2 and path[1] < w and len(path) + 1 >= min_len:
                    found.append(tuple(path) + (w,))
                    if len(found) > cap:
                        raise ResourceLimitError(f"more than {cap} chordless cycles")
                continue
            on_path.add(w)
            path.append(w)
            extend(path, on_path)
            path.pop()
            on_path.discard(w)

    for s in g.vertices:
        for v in sorted(adj[s]):
            if v > s:
                extend([s, v], {s, v})
    found.sort(key=lambda c: (len(c), c))
    return found


def satisfies_occ(g: Graph, same_component: bool = True) -> bool:
    """Odd cycle condition: vertex-disjoint odd cycles in one component are joined by an edge.

    With ``same_component=False`` every pair of vertex-disjoint odd cycles must
    be joined, wherever they sit.  That is the odd cycle condition of G-tilde,
    whose apex merges the components.

    Checking chordless odd cycles is enough, since every odd cycle contains a
    chordless odd cycle on a subset of its vertices.
    """
    odd = [c for c in chordless_cycles(g, 3) if len(c) % 2]
    if len(odd) < 2:
        return True
    comp_of = {}
    for i, (_, verts) in enumerate(components(g)):
        for v in verts:
            comp_of[v] = i
    adj = g.adjacency()
    sets = [frozenset(c) for c in odd]
    for a, b in combinations(range(len(odd)), 2):
        ca, cb = sets[a], sets[b]
        if ca & cb:
            continue
        if same_component and comp_of[odd[a][0]] != comp_of[odd[b][0]]:
            continue
        if not any(adj[u] & cb for u in ca):
            return False
    return True


def bg_occ(g: Graph) -> bool:
    """Odd cycle condition of G-tilde, read off G."""
    return satisfies_occ(g, same_component=False)


def is_chordal_bipartite(g: Graph) -> bool:
    return is_bipartite(g) and not chordless_cycles(g, 6)


# ---------------------------------------------------------------------------
# constructions


def tilde(g: Graph) -> LoopGraph:
    """G plus an apex d+1 joined to every vertex and carrying a loop."""
    apex = g.d + 1
    es = list(g.edges) + [(i, apex) for i in g.vertices]
    return LoopGraph(apex, tuple(es), (apex,))


def hat(g: Graph, b: Optional[Bipartition] = None) -> Graph:
    """Connected bipartite graph on [d+2]: d+1 joins the left side, d+2 joins the right side and d+1."""
    canon = bipartition(g)
    if b is None:
        b = canon
    if b is None:
        raise InputError("hat() needs a bipartite graph")
    if set(b.left) | set(b.right) != set(g.vertices) or b.left & b.right:
        raise InputError("bipartition does not cover the vertex set")
    for u, v in g.edges:
        if (u in b.left) == (v in b.left):
            raise InputError(f"edge {(u, v)} lies inside one side of the bipartition")
    a1, a2 = g.d + 1, g.d + 2
    es = list(g.edges)
    es += [(i, a1) for i in sorted(b.left)]
    es += [(j, a2) for j in sorted(b.right)] + [(a1, a2)]
    return Graph(g.d + 2, tuple(es))


# ---------------------------------------------------------------------------
# matchings


def matching_profile(g: Graph, cap: Optional[int] = None) -> MatchingProfile:
    """Counts of k-matchings and of the distinct vertex sets they cover."""
    cap = budget("MAX_MATCHING_STATES") if cap is None else cap
    adj = g.adjacency()
    bit = {v: 1 << (v - 1) for v in g.vertices}
    counts: list = [0] * (g.d // 2 + 1)
    sets: list = [set() for _ in range(g.d // 2 + 1)]
    visited = 0

    # choose, for the smallest undecided vertex, to skip it or match it upward
    def rec(v, used, k):
        nonlocal visited
        visited += 1
        if visited > cap:
            raise ResourceLimitError(f"matching enumeration exceeded {cap} states")
        while v <= g.d and used & bit[v]:
            v += 1
        if v > g.d:
            counts[k] += 1
            sets[k].add(used)
            return
        rec(v + 1, used, k)
        for w in adj[v]:
            if w > v and not used & bit[w]:
                rec(v + 1, used | bit[v] | bit[w], k + 1)

    rec(1, 0, 0)
    while len(counts) > 1 and counts[-1] == 0:
        counts.pop()
        sets.pop()
    return MatchingProfile(tuple(len(s) for s in sets), tuple(counts))


def matching_polynomial_coeffs(g: Graph) -> tuple:
    return matching_profile(g).matching_counts


# ---------------------------------------------------------------------------
# bipartite permutation graphs


def _strong_ok(order1, g, prefix_j):
    """Check the strong-ordering implication for the new last element of the V2 prefix."""
    jn = prefix_j[-1]
    for jo in prefix_j[:-1]:
        # jo <_2 jn
        for a, i in enumerate(order1):
            for ip in order1[a + 1:]:
                if g.has_edge(i, jo) and g.has_edge(ip, jn):
                    if not (g.has_edge(i, jn) and g.has_edge(ip, jo)):
                        return False
    return True


def is_bipartite_permutation(g: Graph, max_side: Optional[int] = None):
    """Witness orderings (of V1, of V2) for the strong-ordering condition, or None.

    Exhaustive search: every ordering of V1, then a backtracking extension of
    an ordering of V2 rejected as soon as a prefix violates the implication.
    """
    b = bipartition(g)
    if b is None:
        raise InputError("graph is not bipartite")
    max_side = budget("MAX_PERMUTATION_SIDE") if max_side is None else max_side
    v1, v2 = sorted(b.left), sorted(b.right)
    if max(len(v1), len(v2)) > max_side:
        raise ResourceLimitError(f"side size exceeds brute-force bound {max_side}")

    def extend(order1, prefix, remaining):
        if not remaining:
            return list(prefix)
        for j in list(remaining):
            prefix.append(j)
            if _strong_ok(order1, g, prefix):
                remaining.remove(j)
                res = extend(order1, prefix, remaining)
                remaining.add(j)
                if res is not None:
                    return res
            prefix.pop()
        return None

    for order1 in permutations(v1):
        res = extend(order1, [], set(v2))
        if res is not None:
            return list(order1), res
    return None


# ---------------------------------------------------------------------------
# enumeration helpers for exhaustive checks


def canonical_form(g: Graph) -> tuple:
    best = None
    for perm in permutations(range(1, g.d + 1)):
        key = tuple(sorted(_edge(perm[u - 1], perm[v - 1]) for u, v in g.edges))
        if best is None or key < best:
            best = key
    return best


def all_graphs(d: int):
    """Every labelled simple graph on [d]."""
    pairs = list(combinations(range(1, d + 1), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(d, tuple(p for i, p in enumerate(pairs) if mask >> i & 1))


def graph_classes(d: int) -> list:
    """One representative per isomorphism class of graphs on exactly d vertices (d <= 7)."""
    if d > 7:
        raise InputError("graph atlas covers at most 7 vertices")
    import networkx as nx

    out = []
    for h in nx.graph_atlas_g():
        if h.number_of_nodes() == d:
            out.append(Graph(d, tuple((u + 1, v + 1) for u, v in h.edges())))
    return out


# named families


def path_graph(n: int) -> Graph:
    return Graph(n, tuple((i, i + 1) for i in range(1, n)))


def cycle_graph(n: int) -> Graph:
    return Graph(n, tuple((i, i + 1) for i in range(1, n)) + ((1, n),))


def complete_graph(n: int) -> Graph:
    return Graph(n, tuple(combinations(range(1, n + 1), 2)))


def complete_bipartite(p: int, q: int) -> Graph:
    return Graph(p + q, tuple((i, p + j) for i in range(1, p + 1) for j in range(1, q + 1)))


def empty_graph(n: int) -> Graph:
    return Graph(n, ())


def disjoint_union(*gs: Graph) -> Graph:
    es, off = [], 0
    for h in gs:
        es += [(u + off, v + off) for u, v in h.edges]
        off += h.d
    return Graph(off, tuple(es))


# ---------------------------------------------------------------------------
# text format


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield lineno, line


def parse_edge_list(text: str) -> Graph:
    """First non-comment line ``d``, then one ``u v`` pair per line."""
    lines = list(_content_lines(text))
    if not lines:
        raise InputError("empty edge list")
    lineno, head = lines[0]
    try:
        d = int(head)
    except ValueError:
        raise InputError(f"line {lineno}: expected the vertex count, got {head!r}") from None
    if d < 0:
        raise InputError(f"line {lineno}: negative vertex count")
    seen = set()
    edges = []
    for lineno, line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise InputError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise InputError(f"line {lineno}: non-integer vertex in {line!r}") from None
        if u == v:
            raise InputError(f"line {lineno}: loop at vertex {u}")
        if not (1 <= u <= d and 1 <= v <= d):
            raise InputError(f"line {lineno}: vertex outside 1..{d}")
        e = _edge(u, v)
        if e in seen:
            raise InputError(f"line {lineno}: duplicate edge {e}")
        seen.add(e)
        edges.append(e)
    return Graph(d, tuple(edges))


def format_edge_list(g: Graph) -> str:
    return "\n".join([str(g.d)] + [f"{u} {v}" for u, v in g.edges]) + "\n"
