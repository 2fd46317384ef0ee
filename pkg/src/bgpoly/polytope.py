"""Lattice polytopes: B_G and edge polytopes, exact facets, lattice points, Ehrhart data.

Lower-dimensional polytopes are handled through a lattice chart: an affine
isomorphism between the affine lattice aff(P) cap Z^N and Z^D.  Facets are
computed and points are scanned in chart coordinates, where the polytope is
full-dimensional, then mapped back.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import comb, gcd
from typing import Optional

import numpy as np

from . import _accel, _exact
from .graphs import Graph
from .limits import InputError, IntegrityError, ResourceLimitError, budget
from .poly import IntPolynomial


@dataclass(frozen=True)
class Halfspace:
    """normal . x <= rhs"""

    normal: tuple
    rhs: int

    def contains(self, x) -> bool:
        return sum(a * c for a, c in zip(self.normal, x)) <= self.rhs


@dataclass(frozen=True)
class Chart:
    origin: tuple  # a lattice point of P
    basis: tuple  # N x D integer, columns span the direction lattice
    coords: tuple  # D x N integer, coords @ basis = I

    def to_chart(self, x, n: int = 1):
        x0 = self.origin
        return tuple(sum(c * (xi - n * oi) for c, xi, oi in zip(row, x, x0)) for row in self.coords)


@dataclass(frozen=True)
class HullData:
    affine_dim: int
    facets: tuple  # Halfspace in ambient coordinates
    equations: tuple  # (normal, rhs): normal . x == rhs on aff(P)
    chart: Chart
    chart_facets: tuple  # (a, b) with a . y <= b in chart coordinates


@dataclass(frozen=True)
class EhrhartData:
    dimension: int
    counts: tuple  # L(0), L(1), ..., L(D) (plus L(D+1) when checked)
    hstar: IntPolynomial

    @property
    def volume(self) -> int:
        return self.hstar(1)


class LatticePolytope:
    """Convex hull of finitely many integer points; immutable."""

    def __init__(self, generators, ambient_dim: Optional[int] = None):
        pts = sorted({tuple(int(c) for c in p) for p in generators})
        if not pts:
            raise InputError("a polytope needs at least one generator")
        dims = {len(p) for p in pts}
        if len(dims) != 1:
            raise InputError("generators have mixed dimensions")
        self.ambient_dim = dims.pop() if ambient_dim is None else ambient_dim
        self.generators = tuple(pts)

    def __repr__(self):
        return f"LatticePolytope(N={self.ambient_dim}, #gens={len(self.generators)})"

    def __eq__(self, other):
        return isinstance(other, LatticePolytope) and self.generators == other.generators

    def __hash__(self):
        return hash(self.generators)

    @cached_property
    def hull(self) -> HullData:
        return _compute_hull(self)

    @property
    def affine_dim(self) -> int:
        return self.hull.affine_dim

    @property
    def facets(self) -> tuple:
        return self.hull.facets

    def contains(self, x, n: int = 1) -> bool:
        """Membership of the integer point x in the n-th dilate."""
        h = self.hull
        for a, c in h.equations:
            if sum(ai * xi for ai, xi in zip(a, x)) != n * c:
                return False
        y = h.chart.to_chart(x, n)
        return all(sum(ai * yi for ai, yi in zip(a, y)) <= n * b for a, b in h.chart_facets)

    def generator_array(self) -> np.ndarray:
        return np.array(self.generators, dtype=np.int64).reshape(len(self.generators), self.ambient_dim)


# ---------------------------------------------------------------------------
# constructions


def _unit(N, i, s=1):
    v = [0] * N
    v[i - 1] = s
    return v


def build_bg(g: Graph) -> LatticePolytope:
    """conv of 0, +-e_i and +-e_i +- e_j over the edges of g."""
    d = g.d
    pts = [[0] * d]
    for i in range(1, d + 1):
        pts += [_unit(d, i, 1), _unit(d, i, -1)]
    for i, j in g.edges:
        for si in (1, -1):
            for sj in (1, -1):
                v = [0] * d
                v[i - 1], v[j - 1] = si, sj
                pts.append(v)
    return LatticePolytope(pts, d)


def edge_polytope(h) -> LatticePolytope:
    """conv of e_i + e_j over edges, and 2 e_i over loops."""
    loops = getattr(h, "loops", ())
    if not h.edges and not loops:
        raise InputError("edge polytope of an edgeless graph")
    pts = []
    for i, j in h.edges:
        v = [0] * h.d
        v[i - 1] += 1
        v[j - 1] += 1
        pts.append(v)
    for i in loops:
        pts.append(_unit(h.d, i, 2))
    return LatticePolytope(pts, h.d)


def cross_polytope(d: int) -> LatticePolytope:
    return build_bg(Graph(d, ()))


def orthant_restriction(p: LatticePolytope, signs) -> LatticePolytope:
    """conv of the generators lying in the closed orthant with the given signs."""
    if len(signs) != p.ambient_dim or any(s not in (1, -1) for s in signs):
        raise InputError("signs must be a +-1 vector of the ambient dimension")
    pts = [q for q in p.generators if all(c * s >= 0 for c, s in zip(q, signs))]
    return LatticePolytope(pts, p.ambient_dim)


# ---------------------------------------------------------------------------
# hull


def _compute_hull(p: LatticePolytope) -> HullData:
    N = p.ambient_dim
    if N > budget("MAX_HULL_DIM"):
        raise ResourceLimitError(f"ambient dimension {N} exceeds hull bound {budget('MAX_HULL_DIM')}")
    gens = p.generators
    x0 = gens[0]
    diffs = [[a - b for a, b in zip(q, x0)] for q in gens[1:]]
    D = _exact.rank(diffs) if diffs else 0

    if D == N:
        eqs = []
        chart = Chart((0,) * N, tuple(tuple(int(i == j) for j in range(N)) for i in range(N)),
                      tuple(tuple(int(i == j) for j in range(N)) for i in range(N)))
    else:
        eq_rows = _exact.left_nullspace_int(diffs, N) if diffs else [[int(i == j) for j in range(N)] for i in range(N)]
        eqs = [(tuple(a), sum(ai * xi for ai, xi in zip(a, x0))) for a in eq_rows]
        chart = _make_chart(eq_rows, x0, N, D)

    if D == 0:
        return HullData(0, (), tuple(eqs), chart, ())

    ys = sorted({chart.to_chart(q) for q in gens})
    chart_facets = _exact.facets_full_dim([list(y) for y in ys])

    facets = []
    C = chart.coords
    for a, b in chart_facets:
        normal = [sum(a[k] * C[k][j] for k in range(D)) for j in range(N)]
        rhs = b + sum(nj * oj for nj, oj in zip(normal, chart.origin))
        g = 0
        for c in normal + [rhs]:
            g = gcd(g, c)
        if g > 1:
            normal = [c // g for c in normal]
            rhs //= g
        facets.append(Halfspace(tuple(normal), rhs))
    facets.sort(key=lambda h: (h.normal, h.rhs))
    return HullData(D, tuple(facets), tuple(eqs), chart, tuple(chart_facets))


def _make_chart(eq_rows, x0, N, D) -> Chart:
    U, Ui, r = _exact.kernel_lattice(eq_rows, N)
    if N - r != D:
        raise IntegrityError("equation rank does not match affine dimension")
    B = [row[r:] for row in U]  # N x D
    C = Ui[r:]  # D x N
    S = _exact.unimodular_coordinate_subset(B)
    if S is not None:
        # re-base so that chart coordinates are plain coordinates x_S - x0_S
        BS_inv = _exact.inverse_int([B[i] for i in S])
        B = [[sum(B[i][k] * BS_inv[k][j] for k in range(D)) for j in range(D)] for i in range(N)]
        C = [[int(j == S[k]) for j in range(N)] for k in range(D)]
    return Chart(tuple(x0), tuple(tuple(r_) for r_ in B), tuple(tuple(r_) for r_ in C))


def facet_description(p: LatticePolytope):
    """(affine dimension, facets, affine-span equations) in ambient coordinates."""
    h = p.hull
    return h.affine_dim, h.facets, h.equations


# ---------------------------------------------------------------------------
# lattice points


def _chart_box(p: LatticePolytope, n: int):
    h = p.hull
    ys = np.array([h.chart.to_chart(q) for q in p.generators], dtype=np.int64)
    lo = n * ys.min(axis=0)
    hi = n * ys.max(axis=0)
    return lo, hi


def _chart_system(p: LatticePolytope, n: int):
    h = p.hull
    A = np.array([a for a, _ in h.chart_facets], dtype=np.int64).reshape(len(h.chart_facets), h.affine_dim)
    b = np.array([n * b for _, b in h.chart_facets], dtype=np.int64)
    return A, b


def _check_box(lo, hi):
    size = 1
    for a, b in zip(lo, hi):
        size *= int(b - a + 1)
    limit = budget("MAX_POINTS")
    if size > limit:
        raise ResourceLimitError(f"bounding box holds {size} points, budget is {limit}")


def count_lattice_points(p: LatticePolytope, n: int = 1) -> int:
    if n < 0:
        raise InputError("dilation must be nonnegative")
    if n == 0:
        return 1
    h = p.hull
    if h.affine_dim == 0:
        return 1
    lo, hi = _chart_box(p, n)
    _check_box(lo, hi)
    A, b = _chart_system(p, n)
    return _accel.count_points(A, b, lo, hi)


def lattice_points(p: LatticePolytope, n: int = 1) -> np.ndarray:
    """All integer points of n*p in ambient coordinates, sorted lexicographically."""
    if n < 0:
        raise InputError("dilation must be nonnegative")
    h = p.hull
    N = p.ambient_dim
    if n == 0:
        return np.zeros((1, N), dtype=np.int64)
    if h.affine_dim == 0:
        return np.array([[n * c for c in p.generators[0]]], dtype=np.int64)
    lo, hi = _chart_box(p, n)
    _check_box(lo, hi)
    A, b = _chart_system(p, n)
    ys = _accel.list_points(A, b, lo, hi)
    B = np.array(h.chart.basis, dtype=np.int64).reshape(N, h.affine_dim)
    xs = ys @ B.T + n * np.array(h.chart.origin, dtype=np.int64)
    order = np.lexsort(xs.T[::-1])
    return xs[order]


# ---------------------------------------------------------------------------
# Ehrhart


def hstar_from_counts(counts, D: int) -> IntPolynomial:
    """h*_k = sum_i (-1)^i C(D+1, i) L(k-i) for k = 0..D."""
    return IntPolynomial(
        sum((-1) ** i * comb(D + 1, i) * counts[k - i] for i in range(k + 1)) for k in range(D + 1)
    )


def ehrhart_count_from_hstar(hstar, D: int, n: int) -> int:
    return sum(c * comb(n + D - i, D) for i, c in enumerate(hstar))


def ehrhart_hstar(p: LatticePolytope, check_extra: bool = True) -> EhrhartData:
    """h* by counting lattice points of the dilates 1..D and inverting the binomial transform.

    With ``check_extra`` one more dilate (D+1) is counted and must agree with
    the interpolated Ehrhart polynomial.
    """
    D = p.affine_dim
    top = D + 1 if check_extra else D
    counts = [1] + [count_lattice_points(p, n) for n in range(1, top + 1)]
    hstar = hstar_from_counts(counts, D)
    if any(c < 0 for c in hstar):
        raise IntegrityError(f"negative h* coefficient in {hstar.coeffs}")
    for n, L in enumerate(counts):
        if ehrhart_count_from_hstar(hstar, D, n) != L:
            raise IntegrityError(f"h* does not reproduce L({n}) = {L}")
    return EhrhartData(D, tuple(counts), hstar)


def normalized_volume(p: LatticePolytope) -> int:
    return ehrhart_hstar(p).volume


# ---------------------------------------------------------------------------
# reflexivity and IDP


def is_reflexive(p: LatticePolytope) -> bool:
    """Every primitive facet inequality has right-hand side exactly 1."""
    h = p.hull
    if h.affine_dim != p.ambient_dim:
        raise InputError("reflexivity needs a full-dimensional polytope")
    if any(f.rhs <= 0 for f in h.facets):
        raise InputError("the origin is not an interior point")
    return all(f.rhs == 1 for f in h.facets)


@dataclass(frozen=True)
class IDPResult:
    is_idp: bool
    kmax: int
    witness: Optional[tuple] = None
    witness_k: Optional[int] = None

    def __bool__(self):
        return self.is_idp


def is_idp(p: LatticePolytope, kmax: int = 3) -> IDPResult:
    """Check that every lattice point of k*p splits into k lattice points of p, for k <= kmax.

    The k-fold sums are formed as iterated Minkowski sums of the lattice point
    set; a point of k*p missing from them is returned as a witness.
    """
    if kmax < 2:
        raise InputError("kmax must be at least 2")
    base = lattice_points(p, 1)
    lo = base.min(axis=0)
    hi = base.max(axis=0)
    radix = kmax * int((hi - lo).max()) + 1
    weights = np.array([radix**i for i in range(p.ambient_dim)], dtype=np.int64)
    if radix ** p.ambient_dim >= 2**62:
        raise ResourceLimitError("point encoding exceeds 64 bits")
    limit = budget("MAX_IDP_POINTS")

    def keys(pts, k):
        return (pts - k * lo) @ weights

    base_keys = keys(base, 1)
    sums = base_keys
    for k in range(2, kmax + 1):
        if sums.size * base_keys.size > limit:
            raise ResourceLimitError(f"Minkowski sum of {sums.size} x {base_keys.size} points exceeds budget")
        sums = _accel.minkowski_keys(sums, base_keys)
        target_pts = lattice_points(p, k)
        target = keys(target_pts, k)
        missing = ~np.isin(target, sums)
        if missing.any():
            w = target_pts[np.argmax(missing)]
            return IDPResult(False, kmax, tuple(int(c) for c in w), k)
    return IDPResult(True, kmax)
