"""Lattice-point kernels with a numba path and a pure-numpy fallback.

Set ``BGPOLY_NO_NUMBA=1`` to force the numpy path (or run without numba
installed).  Both paths take the same arguments and return identical results.

A polytope here is {y in Z^D : A y <= b} intersected with the box [lo, hi].
The innermost coordinate is never scanned point by point: for a fixed prefix
every facet bounds it to an interval, so one prefix costs O(#facets).
"""
import os

import numpy as np

try:
    from numba import njit

    HAS_NUMBA = True
except ImportError:  # pragma: no cover
    HAS_NUMBA = False


def numba_enabled() -> bool:
    return HAS_NUMBA and os.environ.get("BGPOLY_NO_NUMBA", "") not in ("1", "true", "yes")


# ---------------------------------------------------------------------------
# numpy path


def _prefix_grid(lo, hi):
    axes = [np.arange(a, b + 1, dtype=np.int64) for a, b in zip(lo, hi)]
    if not axes:
        return np.zeros((1, 0), dtype=np.int64)
    mesh = np.meshgrid(*axes, indexing="ij")
    return np.stack([m.ravel() for m in mesh], axis=1)


def _last_bounds_np(A, b, prefix, lo_last, hi_last):
    base = prefix @ A[:, :-1].T if A.shape[1] > 1 else np.zeros((prefix.shape[0], A.shape[0]), np.int64)
    slack = b[None, :] - base
    a = A[:, -1]
    tlo = np.full(prefix.shape[0], lo_last, dtype=np.int64)
    thi = np.full(prefix.shape[0], hi_last, dtype=np.int64)
    pos, neg, zero = a > 0, a < 0, a == 0
    if pos.any():
        thi = np.minimum(thi, (slack[:, pos] // a[pos]).min(axis=1))
    if neg.any():
        # a t <= s with a < 0  <=>  t >= ceil(s / a) = -(s // -a)
        tlo = np.maximum(tlo, (-(slack[:, neg] // -a[neg])).max(axis=1))
    if zero.any():
        bad = (slack[:, zero] < 0).any(axis=1)
        thi = np.where(bad, tlo - 1, thi)
    return tlo, thi


def _chunks(lo, hi, chunk=1 << 16):
    """Yield prefix blocks over all but the last coordinate, splitting on the first axis."""
    lo, hi = list(lo[:-1]), list(hi[:-1])
    if not lo:
        yield np.zeros((1, 0), dtype=np.int64)
        return
    inner = 1
    for a, b in zip(lo[1:], hi[1:]):
        inner *= b - a + 1
    step = max(1, chunk // max(inner, 1))
    for start in range(lo[0], hi[0] + 1, step):
        stop = min(hi[0], start + step - 1)
        yield _prefix_grid([start] + lo[1:], [stop] + hi[1:])


def count_points_np(A, b, lo, hi) -> int:
    total = 0
    for prefix in _chunks(lo, hi):
        tlo, thi = _last_bounds_np(A, b, prefix, lo[-1], hi[-1])
        total += int(np.maximum(thi - tlo + 1, 0).sum())
    return total


def list_points_np(A, b, lo, hi) -> np.ndarray:
    out = []
    for prefix in _chunks(lo, hi):
        tlo, thi = _last_bounds_np(A, b, prefix, lo[-1], hi[-1])
        width = np.maximum(thi - tlo + 1, 0)
        keep = width > 0
        if not keep.any():
            continue
        prefix, tlo, width = prefix[keep], tlo[keep], width[keep]
        rows = np.repeat(np.arange(prefix.shape[0]), width)
        offs = np.arange(width.sum()) - np.repeat(np.cumsum(width) - width, width)
        pts = np.concatenate([prefix[rows], (tlo[rows] + offs)[:, None]], axis=1)
        out.append(pts)
    if not out:
        return np.zeros((0, len(lo)), dtype=np.int64)
    return np.concatenate(out, axis=0)


# ---------------------------------------------------------------------------
# numba path

if HAS_NUMBA:

    @njit(cache=True)
    def _scan_nb(A, b, lo, hi, emit, out):
        D = lo.shape[0]
        F = A.shape[0]
        y = lo.copy()
        base = np.zeros(F, dtype=np.int64)
        total = 0
        n_out = 0
        while True:
            for f in range(F):
                s = 0
                for k in range(D - 1):
                    s += A[f, k] * y[k]
                base[f] = s
            tlo = lo[D - 1]
            thi = hi[D - 1]
            for f in range(F):
                a = A[f, D - 1]
                slack = b[f] - base[f]
                if a > 0:
                    t = slack // a
                    if t < thi:
                        thi = t
                elif a < 0:
                    t = -(slack // (-a))
                    if t > tlo:
                        tlo = t
                elif slack < 0:
                    thi = tlo - 1
                    break
            if thi >= tlo:
                total += thi - tlo + 1
                if emit:
                    for t in range(tlo, thi + 1):
                        for k in range(D - 1):
                            out[n_out, k] = y[k]
                        out[n_out, D - 1] = t
                        n_out += 1
            # odometer over the prefix coordinates
            k = D - 2
            while k >= 0:
                if y[k] < hi[k]:
                    y[k] += 1
                    break
                y[k] = lo[k]
                k -= 1
            if k < 0:
                break
        return total


def count_points(A, b, lo, hi) -> int:
    """Number of integer y in [lo, hi] with A y <= b."""
    A = np.ascontiguousarray(A, dtype=np.int64)
    b = np.ascontiguousarray(b, dtype=np.int64)
    lo = np.asarray(lo, dtype=np.int64)
    hi = np.asarray(hi, dtype=np.int64)
    if lo.size == 0:
        return 1 if np.all(b >= 0) else 0
    if np.any(hi < lo):
        return 0
    if numba_enabled():
        return int(_scan_nb(A, b, lo, hi, False, np.zeros((1, lo.size), np.int64)))
    return count_points_np(A, b, lo, hi)


def list_points(A, b, lo, hi) -> np.ndarray:
    """Integer y in [lo, hi] with A y <= b, in lexicographic order."""
    A = np.ascontiguousarray(A, dtype=np.int64)
    b = np.ascontiguousarray(b, dtype=np.int64)
    lo = np.asarray(lo, dtype=np.int64)
    hi = np.asarray(hi, dtype=np.int64)
    if lo.size == 0:
        return np.zeros((1 if np.all(b >= 0) else 0, 0), dtype=np.int64)
    if np.any(hi < lo):
        return np.zeros((0, lo.size), dtype=np.int64)
    if numba_enabled():
        n = int(_scan_nb(A, b, lo, hi, False, np.zeros((1, lo.size), np.int64)))
        out = np.zeros((n, lo.size), dtype=np.int64)
        _scan_nb(A, b, lo, hi, True, out)
        return out
    return list_points_np(A, b, lo, hi)


def minkowski_keys(keys_a: np.ndarray, keys_b: np.ndarray) -> np.ndarray:
    """Distinct pairwise sums of linearly encoded point keys."""
    return np.unique(np.add.outer(keys_a, keys_b).ravel())
