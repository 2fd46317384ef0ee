"""Naturally labelled posets, P-Eulerian and order polynomials, and the K_{p,q} closed forms."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Optional

from .graphs import Graph, is_bipartite
from .limits import InputError, ResourceLimitError, budget
from .poly import IntPolynomial, gamma_substitute


@dataclass(frozen=True)
class Poset:
    """Strict order on 1..d generated by ``covers``; u < v as integers for every relation."""

    d: int
    covers: tuple = ()

    def __post_init__(self):
        rels = set()
        for u, v in self.covers:
            if not (1 <= u <= self.d and 1 <= v <= self.d):
                raise InputError(f"relation {u} < {v} leaves 1..{self.d}")
            if u >= v:
                raise InputError(f"relation {u} < {v} is not naturally labelled")
            rels.add((u, v))
        object.__setattr__(self, "covers", tuple(sorted(rels)))
        # below[v]: bitmask of all elements strictly below v
        below = [0] * (self.d + 1)
        for v in range(1, self.d + 1):
            for u, w in self.covers:
                if w == v:
                    below[v] |= (1 << (u - 1)) | below[u]
        object.__setattr__(self, "_below", tuple(below))
        object.__setattr__(self, "covers", self.cover_relations())

    def less(self, u: int, v: int) -> bool:
        return bool(self._below[v] >> (u - 1) & 1)

    def comparable(self, u: int, v: int) -> bool:
        return self.less(u, v) or self.less(v, u)

    def cover_relations(self) -> tuple:
        """Irredundant covers of the transitive closure."""
        out = []
        for u, v in combinations(range(1, self.d + 1), 2):
            if self.less(u, v) and not any(self.less(u, w) and self.less(w, v) for w in range(u + 1, v)):
                out.append((u, v))
        return tuple(out)


def relabel_naturally(d: int, relations) -> tuple:
    """Return (poset, mapping) after renumbering along a linear extension.

    This changes W(P) in general, so callers must opt in explicitly.
    """
    preds = {v: set() for v in range(1, d + 1)}
    for u, v in relations:
        preds[v].add(u)
    order, placed = [], set()
    while len(order) < d:
        ready = [v for v in range(1, d + 1) if v not in placed and preds[v] <= placed]
        if not ready:
            raise InputError("relations contain a cycle")
        order.append(ready[0])
        placed.add(ready[0])
    new = {v: i + 1 for i, v in enumerate(order)}
    return Poset(d, tuple((new[u], new[v]) for u, v in relations)), new


def linear_extensions(p: Poset, cap: Optional[int] = None):
    """Yield linear extensions as words pi(1)..pi(d), smallest available element first."""
    cap = budget("MAX_EXTENSIONS") if cap is None else cap
    below = p._below
    full = (1 << p.d) - 1
    word = []
    count = 0

    def rec(placed):
        nonlocal count
        if placed == full:
            count += 1
            if count > cap:
                raise ResourceLimitError(f"more than {cap} linear extensions")
            yield tuple(word)
            return
        for v in range(1, p.d + 1):
            bit = 1 << (v - 1)
            if not placed & bit and below[v] & placed == below[v]:
                word.append(v)
                yield from rec(placed | bit)
                word.pop()

    yield from rec(0)


def descents(word) -> int:
    return sum(1 for a, b in zip(word, word[1:]) if a > b)


def eulerian_polynomial(p: Poset, cap: Optional[int] = None) -> IntPolynomial:
    """W(P)(x) = sum over linear extensions of x^(number of descents)."""
    coeffs = [0] * max(p.d, 1)
    for w in linear_extensions(p, cap):
        coeffs[descents(w)] += 1
    return IntPolynomial(coeffs)


def down_sets(p: Poset) -> list:
    """All order ideals as bitmasks."""
    ideals = [0]
    for v in range(1, p.d + 1):
        bit = 1 << (v - 1)
        # natural labelling: everything below v is already decided
        ideals += [I | bit for I in ideals if p._below[v] & I == p._below[v]]
    return sorted(ideals)


def order_polynomial_values(p: Poset, m_max: int) -> list:
    """[Omega(P, 1), ..., Omega(P, m_max)] by counting multichains of order ideals.

    An order-preserving map to [m] is the chain of ideals {sigma <= t}, t = 1..m.
    """
    ideals = down_sets(p)
    if len(ideals) ** 2 * m_max > budget("MAX_EXTENSIONS") * 10:
        raise ResourceLimitError("order polynomial DP too large")
    full = (1 << p.d) - 1
    idx = {I: k for k, I in enumerate(ideals)}
    subsets = [[idx[J] for J in ideals if J & I == J] for I in ideals]
    ways = [1] * len(ideals)  # chains of length 1 ending at each ideal
    out = []
    for m in range(1, m_max + 1):
        if m > 1:
            ways = [sum(ways[j] for j in subsets[k]) for k in range(len(ideals))]
        out.append(ways[idx[full]])
    return out


def two_chain_poset(p: int, q: int) -> Poset:
    """Disjoint chains 1 < ... < p and p+1 < ... < p+q."""
    if p < 1 or q < 1:
        raise InputError("chain lengths must be positive")
    rels = [(i, i + 1) for i in range(1, p)] + [(p + i, p + i + 1) for i in range(1, q)]
    return Poset(p + q, tuple(rels))


def chain_union_poset(lengths) -> Poset:
    rels, off = [], 0
    for n in lengths:
        rels += [(off + i, off + i + 1) for i in range(1, n)]
        off += n
    return Poset(off, tuple(rels))


def chain_poset(d: int) -> Poset:
    return chain_union_poset([d])


def antichain(d: int) -> Poset:
    return Poset(d, ())


def complement_comparability_graph(p: Poset) -> Graph:
    """Incomparability graph of p."""
    return Graph(p.d, tuple((u, v) for u, v in combinations(range(1, p.d + 1), 2) if not p.comparable(u, v)))


def kpq_w(p: int, q: int) -> IntPolynomial:
    return IntPolynomial(comb(p, i) * comb(q, i) for i in range(min(p, q) + 1))


def kpq_hstar(p: int, q: int) -> IntPolynomial:
    """sum_i 4^i C(p,i) C(q,i) x^i (x+1)^(p+q-2i)."""
    if p < 1 or q < 1:
        raise InputError("p and q must be positive")
    total = IntPolynomial()
    for i in range(min(p, q) + 1):
        total = total + IntPolynomial.monomial(i, 4**i * comb(p, i) * comb(q, i)) * IntPolynomial.binomial_power(p + q - 2 * i)
    return total


def kpq_gamma_route(p: int, q: int) -> IntPolynomial:
    return gamma_substitute(kpq_w(p, q), p + q)


def all_natural_posets(d: int):
    """Every naturally labelled poset on [d], as a relation set (each exactly once)."""

    def rec(k, below):
        if k == d:
            rels = tuple((u, v) for v in range(1, d + 1) for u in range(1, v) if below[v - 1] >> (u - 1) & 1)
            yield Poset(d, rels)
            return
        current = Poset(k, tuple((u, v) for v in range(1, k + 1) for u in range(1, v) if below[v - 1] >> (u - 1) & 1))
        for ideal in down_sets(current):
            yield from rec(k + 1, below + [ideal])

    yield from rec(0, [])


def is_narrow(p: Poset) -> bool:
    return is_bipartite(complement_comparability_graph(p))


def parse_poset(text: str) -> Poset:
    """First non-comment line ``d``, then cover lines ``u < v``."""
    lines = [(i, ln.strip()) for i, ln in enumerate(text.splitlines(), 1)
             if ln.strip() and not ln.strip().startswith("#")]
    if not lines:
        raise InputError("empty poset file")
    lineno, head = lines[0]
    try:
        d = int(head)
    except ValueError:
        raise InputError(f"line {lineno}: expected the element count, got {head!r}") from None
    if d < 0:
        raise InputError(f"line {lineno}: negative element count")
    rels = []
    for lineno, line in lines[1:]:
        parts = line.split("<")
        try:
            u, v = (int(x) for x in parts)
        except ValueError:
            raise InputError(f"line {lineno}: expected 'u < v', got {line!r}") from None
        if u >= v:
            raise InputError(f"line {lineno}: {u} < {v} breaks the natural labelling (need u < v as integers)")
        rels.append((u, v))
    return Poset(d, tuple(rels))
