"""Exact integer linear algebra and the double description method.

Everything works on lists of Python ints (or Fractions internally), so no
result depends on floating-point rounding.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import gcd

from .limits import IntegrityError


def primitive(v):
    g = 0
    for c in v:
        g = gcd(g, c)
    if g <= 1:
        return list(v)
    return [c // g for c in v]


def rref(rows):
    """Reduced row echelon form over Q; returns (rows, pivot columns)."""
    m = [[Fraction(c) for c in r] for r in rows]
    pivots = []
    r = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        lead = m[r][c]
        m[r] = [x / lead for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows) -> int:
    if not rows:
        return 0
    return len(rref(rows)[1])


def left_nullspace_int(rows, ncols):
    """Integer basis (primitive rows) of {a : a . r = 0 for every row r}."""
    if not rows:
        return [[int(i == j) for j in range(ncols)] for i in range(ncols)]
    red, piv = rref(rows)
    free = [c for c in range(ncols) if c not in piv]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for i, p in enumerate(piv):
            v[p] = -red[i][f]
        den = 1
        for x in v:
            den = den * x.denominator // gcd(den, x.denominator)
        basis.append(primitive([int(x * den) for x in v]))
    return basis


def det_int(m) -> int:
    """Determinant of a square integer matrix (Bareiss fraction-free elimination)."""
    n = len(m)
    if n == 0:
        return 1
    a = [list(r) for r in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            sw = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if sw is None:
                return 0
            a[k], a[sw] = a[sw], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def inverse_int(m):
    """Inverse of a unimodular integer matrix."""
    n = len(m)
    aug = [[Fraction(c) for c in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    red, piv = rref(aug)
    if piv[:n] != list(range(n)):
        raise IntegrityError("matrix is singular")
    out = [[r[n + j] for j in range(n)] for r in red]
    if any(x.denominator != 1 for row in out for x in row):
        raise IntegrityError("matrix is not unimodular")
    return [[int(x) for x in row] for row in out]


def kernel_lattice(eqs, ncols):
    """Column reduction E U = [L | 0] with U unimodular.

    Returns (U, U^-1); the last ncols - rank columns of U are a basis of the
    integer kernel lattice of E.
    """
    m = [list(r) for r in eqs]
    U = [[int(i == j) for j in range(ncols)] for i in range(ncols)]
    Ui = [[int(i == j) for j in range(ncols)] for i in range(ncols)]

    def colop(j, i, q):
        # column j -= q * column i  (inverse: row i += q * row j)
        for r in m:
            r[j] -= q * r[i]
        for r in U:
            r[j] -= q * r[i]
        Ui[i] = [a + q * b for a, b in zip(Ui[i], Ui[j])]

    def swap(i, j):
        for r in m:
            r[i], r[j] = r[j], r[i]
        for r in U:
            r[i], r[j] = r[j], r[i]
        Ui[i], Ui[j] = Ui[j], Ui[i]

    col = 0
    for row in m:
        if col >= ncols:
            break
        while True:
            nz = [j for j in range(col, ncols) if row[j] != 0]
            if not nz:
                break
            j0 = min(nz, key=lambda j: abs(row[j]))
            swap(col, j0)
            done = True
            for j in range(col + 1, ncols):
                if row[j]:
                    colop(j, col, row[j] // row[col])
                    if row[j]:
                        done = False
            if done:
                break
        if any(row[j] for j in range(col, ncols)):
            col += 1
    return U, Ui, col


# ---------------------------------------------------------------------------
# double description


def facets_full_dim(points):
    """Facet inequalities a.y <= b of conv(points), points full-dimensional in Z^D.

    Extreme rays of the cone {(b, a) : b - a.q >= 0 for every point q} are
    enumerated by the double description method with the combinatorial
    adjacency test.  Returns sorted primitive (a, b) pairs.
    """
    D = len(points[0])
    if D == 0:
        return []
    rows = [[1] + [-c for c in q] for q in points]
    n = len(rows)

    # initial simplicial cone on D+1 independent rows
    chosen = []
    for i in range(n):
        if rank([rows[j] for j in chosen + [i]]) == len(chosen) + 1:
            chosen.append(i)
            if len(chosen) == D + 1:
                break
    if len(chosen) < D + 1:
        raise IntegrityError("points are not full-dimensional")
    H0 = [rows[i] for i in chosen]
    inv = inverse_rational(H0)
    rays = []
    for k in range(D + 1):
        col = [inv[i][k] for i in range(D + 1)]
        den = 1
        for x in col:
            den = den * x.denominator // gcd(den, x.denominator)
        rays.append(primitive([int(x * den) for x in col]))

    processed = list(chosen)
    bit = {idx: 1 << pos for pos, idx in enumerate(range(n))}

    def tight_mask(r, idxs):
        mask = 0
        for idx in idxs:
            if _dot(rows[idx], r) == 0:
                mask |= bit[idx]
        return mask

    masks = [tight_mask(r, processed) for r in rays]
    rest = [i for i in range(n) if i not in chosen]
    for idx in rest:
        h = rows[idx]
        vals = [_dot(h, r) for r in rays]
        pos = [k for k, v in enumerate(vals) if v > 0]
        neg = [k for k, v in enumerate(vals) if v < 0]
        zer = [k for k, v in enumerate(vals) if v == 0]
        new_rays, new_masks = [], []
        if neg:
            need = D - 1
            for p in pos:
                for q in neg:
                    common = masks[p] & masks[q]
                    if bin(common).count("1") < need:
                        continue
                    adjacent = True
                    for k in range(len(rays)):
                        if k != p and k != q and masks[k] & common == common:
                            adjacent = False
                            break
                    if not adjacent:
                        continue
                    vp, vq = vals[p], vals[q]
                    r = primitive([vp * a - vq * b for a, b in zip(rays[q], rays[p])])
                    new_rays.append(r)
                    new_masks.append(common | bit[idx])
        keep = pos + zer
        rays = [rays[k] for k in keep] + new_rays
        masks = [masks[k] | (bit[idx] if vals[k] == 0 else 0) for k in keep] + new_masks
        processed.append(idx)

    out = set()
    for r in rays:
        b, a = r[0], r[1:]
        if not any(a):
            continue
        g = 0
        for c in a:
            g = gcd(g, c)
        out.add((tuple(c // g for c in a), b // g))
    return sorted(out)


def inverse_rational(m):
    n = len(m)
    aug = [[Fraction(c) for c in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    red, piv = rref(aug)
    if piv[:n] != list(range(n)):
        raise IntegrityError("matrix is singular")
    return [[r[n + j] for j in range(n)] for r in red]


def _dot(u, v) -> int:
    return sum(a * b for a, b in zip(u, v))


def unimodular_coordinate_subset(B):
    """Row subset S of the N x D integer matrix B with det(B_S) = +-1, or None."""
    N = len(B)
    D = len(B[0]) if B else 0
    for S in combinations(range(N), D):
        if abs(det_int([B[i] for i in S])) == 1:
            return list(S)
    return None
