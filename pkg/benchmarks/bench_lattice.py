"""Lattice-point counting: numba kernel vs the pure-numpy fallback.

    python3 benchmarks/bench_lattice.py [--repeat 3]

Each case counts the lattice points of a dilate of B_G; both paths must return
the same count.  The first numba call includes JIT compilation (or cache load)
and is reported separately.
"""
import argparse
import os
import time

from bgpoly import _accel
from bgpoly.graphs import complete_bipartite, complete_graph, cycle_graph, path_graph
from bgpoly.polytope import _chart_box, _chart_system, build_bg

CASES = [
    ("B(K4), n=4", build_bg(complete_graph(4)), 4),
    ("B(C6), n=3", build_bg(cycle_graph(6)), 3),
    ("B(K33), n=3", build_bg(complete_bipartite(3, 3)), 3),
    ("B(P7), n=3", build_bg(path_graph(7)), 3),
    ("B(K5), n=5", build_bg(complete_graph(5)), 5),
    ("B(K33), n=7", build_bg(complete_bipartite(3, 3)), 7),
]


def best_of(fn, repeat):
    times, out = [], None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return out, min(times)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if not _accel.HAS_NUMBA:
        raise SystemExit("numba is not installed")

    systems = [(name, _chart_system(p, n) + _chart_box(p, n)) for name, p, n in CASES]
    os.environ.pop("BGPOLY_NO_NUMBA", None)
    A, b, lo, hi = systems[0][1]
    t0 = time.perf_counter()
    _accel.count_points(A, b, lo, hi)
    print(f"numba first call (compile or cache load): {time.perf_counter() - t0:.3f} s\n")

    print(f"{'case':<14} {'points':>12} {'numba s':>10} {'numpy s':>10} {'speedup':>8}")
    for name, (A, b, lo, hi) in systems:
        os.environ.pop("BGPOLY_NO_NUMBA", None)
        n_nb, t_nb = best_of(lambda: _accel.count_points(A, b, lo, hi), args.repeat)
        os.environ["BGPOLY_NO_NUMBA"] = "1"
        n_np, t_np = best_of(lambda: _accel.count_points(A, b, lo, hi), args.repeat)
        os.environ.pop("BGPOLY_NO_NUMBA", None)
        if n_nb != n_np:
            raise SystemExit(f"{name}: numba {n_nb} != numpy {n_np}")
        print(f"{name:<14} {n_nb:>12} {t_nb:>10.4f} {t_np:>10.4f} {t_np / max(t_nb, 1e-9):>7.1f}x")


if __name__ == "__main__":
    main()
