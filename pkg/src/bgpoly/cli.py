"""Command-line front end.

Exit codes: 0 success, 1 input error, 2 resource limit, 3 failed verification
or internal integrity check.  Coefficients are always constant term first and
are serialized as decimal strings in JSON.
"""
from __future__ import annotations

import argparse
import json
import os
import random
import sys
import time
from typing import Optional

from . import __version__
from .graphs import (
    Graph, bg_occ, bipartition, chordless_cycles, components, hat, is_bipartite, is_chordal_bipartite,
    parse_edge_list, satisfies_occ, tilde,
)
from .interior import (
    hstar_bg_components, hstar_bg_fast, hstar_bg_subgraph_formula, hypergraph_from_bipartite,
    interior_hat_via_matchings, interior_polynomial_oracle,
)
from .limits import BgpolyError, InputError, IntegrityError, ResourceLimitError, budget, set_budget
from .poly import (
    IntPolynomial, gamma_extract, gamma_substitute, interlaces, is_log_concave, is_palindromic,
    is_unimodal, real_root_certificate,
)
from .polytope import build_bg, edge_polytope, ehrhart_hstar, is_idp, is_reflexive, lattice_points
from .posets import complement_comparability_graph, eulerian_polynomial, is_narrow, kpq_hstar, kpq_w, parse_poset

EXIT_OK, EXIT_INPUT, EXIT_LIMIT, EXIT_FAIL = 0, 1, 2, 3


class VerificationFailed(BgpolyError):
    def __init__(self, report):
        super().__init__("verification failed")
        self.report = report


def coeffs_json(f: IntPolynomial) -> list:
    return [str(c) for c in f.coeffs]


def parse_coeffs(text: str) -> IntPolynomial:
    parts = text.replace(",", " ").split()
    if not parts:
        raise InputError("empty coefficient list")
    try:
        return IntPolynomial(int(p) for p in parts)
    except ValueError:
        raise InputError(f"malformed coefficient list {text!r}") from None


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def load_graph(path: str) -> Graph:
    return parse_edge_list(_read(path))


# ---------------------------------------------------------------------------
# reports (plain dicts; rendered at the end)


def _shape(f: IntPolynomial, d: int) -> dict:
    return {
        "palindromic": is_palindromic(f, d),
        "unimodal": is_unimodal(f),
        "log_concave": is_log_concave(f),
        "real_rooted": real_root_certificate(f).is_real_rooted,
    }


def analyze_report(g: Graph, kmax: int = 3, ehrhart: bool = True) -> dict:
    bip = is_bipartite(g)
    rep = {
        "graph": {"d": g.d, "edges": len(g.edges), "components": len(components(g))},
        "predicates": {
            "bipartite": bip,
            "occ": satisfies_occ(g),
            "occ_global": bg_occ(g),
            "chordal_bipartite": is_chordal_bipartite(g),
        },
        "polynomials": {},
        "certificates": {},
        "notes": [],
    }
    polys, certs = rep["polynomials"], rep["certificates"]
    hs = None
    if bip:
        interior = interior_hat_via_matchings(g)
        hs = hstar_bg_fast(g)
        if hs != hstar_bg_components(g):
            raise IntegrityError("component product disagrees with the matching formula")
        gam = gamma_extract(hs, g.d)
        if list(gam.gammas) != [4**k * c for k, c in enumerate(interior.coeffs)]:
            raise IntegrityError("gamma vector disagrees with 4^k I_k")
        polys["interior_hat"] = coeffs_json(interior)
        polys["hstar"] = coeffs_json(hs)
        polys["gamma"] = [str(c) for c in gam.gammas]
        polys["hstar_source"] = "matching formula"
    if ehrhart and g.d > budget("MAX_HULL_DIM"):
        rep["notes"].append(f"Ehrhart data skipped: d={g.d} exceeds MAX_HULL_DIM={budget('MAX_HULL_DIM')}")
        ehrhart = False
    if ehrhart:
        p = build_bg(g)
        data = ehrhart_hstar(p)
        if hs is not None and data.hstar != hs:
            raise IntegrityError(f"Ehrhart h* {data.hstar.coeffs} != formula h* {hs.coeffs}")
        if hs is None:
            hs = data.hstar
            polys["hstar"] = coeffs_json(hs)
            polys["hstar_source"] = "Ehrhart counting"
            try:
                polys["gamma"] = [str(c) for c in gamma_extract(hs, g.d).gammas]
            except InputError:
                polys["gamma"] = None
        certs["normalized_volume"] = str(data.volume)
        certs["facets"] = len(p.facets)
        certs["reflexive"] = is_reflexive(p)
        r = is_idp(p, kmax)
        certs["idp"] = {"kmax": kmax, "holds": r.is_idp,
                        "witness": list(r.witness) if r.witness else None, "witness_k": r.witness_k}
    else:
        rep["notes"].append("Ehrhart, reflexivity and IDP not computed")
        if bip:
            certs["reflexive"] = True
            rep["notes"].append("reflexive by bipartiteness")
    if hs is not None:
        certs["hstar_shape"] = _shape(hs, g.d)
    return rep


def _check(results: list, name: str, left, right, left_name: str, right_name: str):
    ok = left == right
    entry = {"check": name, "ok": ok}
    if not ok:
        entry["values"] = {left_name: _jsonable(left), right_name: _jsonable(right)}
    results.append(entry)


def _jsonable(x):
    if isinstance(x, IntPolynomial):
        return coeffs_json(x)
    if isinstance(x, bool) or x is None:
        return x
    if isinstance(x, int):
        return str(x)
    if isinstance(x, (list, tuple)):
        return [_jsonable(y) for y in x]
    return x


def verify_report(g: Graph, level: str = "fast", kmax: int = 3, seed: int = 0) -> dict:
    results: list = []
    notes: list = []
    bip = bipartition(g) is not None
    if bip:
        via_match = interior_hat_via_matchings(g)
        hg = hypergraph_from_bipartite(hat(g))
        _check(results, "interior(hat G): hypertree oracle = matching formula",
               interior_polynomial_oracle(hg), via_match, "oracle", "formula")
        rng = random.Random(seed)
        order = list(range(len(hg.hyperedges)))
        rng.shuffle(order)
        _check(results, "interior(hat G): oracle independent of hyperedge order",
               interior_polynomial_oracle(hg, order), via_match, "shuffled", "formula")
        fast = hstar_bg_fast(g)
        _check(results, "gamma vector = 4^k I_k", list(gamma_extract(fast, g.d).gammas),
               [4**k * c for k, c in enumerate(via_match.coeffs)], "gamma", "scaled interior")
        _check(results, "h*: product over components", hstar_bg_components(g), fast, "product", "fast")
    else:
        note = "non-bipartite: reflexivity expected false"
        note += ", IDP expected false" if not bg_occ(g) else ", IDP expected true"
        notes.append(note)
        odd = any(len(c) % 2 for c in chordless_cycles(g, 3))
        _check(results, "non-bipartite graph has an odd chordless cycle", odd, True, "found", "expected")
    if level == "full":
        if g.d > budget("MAX_HULL_DIM"):
            raise ResourceLimitError(f"full verification needs d <= MAX_HULL_DIM={budget('MAX_HULL_DIM')}")
        p = build_bg(g)
        data = ehrhart_hstar(p)
        sub = hstar_bg_subgraph_formula(g)
        _check(results, "h*: subgraph formula = Ehrhart", sub, data.hstar, "subgraph", "ehrhart")
        if bip:
            _check(results, "h*: fast formula = Ehrhart", hstar_bg_fast(g), data.hstar, "fast", "ehrhart")
        vol_tilde = ehrhart_hstar(edge_polytope(tilde(g))).volume
        _check(results, "Vol(B_G) = 2^d Vol(P of G-tilde)", data.volume, 2**g.d * vol_tilde, "B_G", "2^d tilde")
        _check(results, "face property", face_property(g), True, "holds", "expected")
        _check(results, "reflexive iff bipartite", is_reflexive(p), bip, "reflexive", "bipartite")
        _check(results, f"IDP up to {kmax} iff global odd cycle condition",
               is_idp(p, kmax).is_idp, bg_occ(g), "idp", "occ_global")
    rep = {"level": level, "passed": all(r["ok"] for r in results), "results": results, "notes": notes}
    if level == "full":
        rep["hstar"] = coeffs_json(data.hstar)
    return rep


def face_property(g: Graph) -> bool:
    """Max of sum x_i over B_G is 2, attained exactly at e_i + e_j for edges ij (1 and e_i when edgeless)."""
    pts = lattice_points(build_bg(g), 1)
    sums = pts.sum(axis=1)
    top = int(sums.max())
    tops = sorted(tuple(int(c) for c in x) for x in pts[sums == top])
    if not g.edges:
        expect = sorted(tuple(int(k == i) for k in range(g.d)) for i in range(g.d))
        return top == (1 if g.d else 0) and (tops == expect or g.d == 0)
    expect = sorted(tuple(int(k in (u - 1, v - 1)) for k in range(g.d)) for u, v in g.edges)
    return top == 2 and tops == expect


def poly_report(sub: str, args) -> dict:
    f = parse_coeffs(args.coeffs)
    if sub == "gamma":
        d = f.degree if args.degree is None else args.degree
        gv = gamma_extract(f, d)
        return {"degree": d, "gamma": [str(c) for c in gv.gammas], "gamma_positive": gv.is_positive()}
    if sub == "substitute":
        if args.degree is None:
            raise InputError("substitute needs --degree")
        return {"degree": args.degree, "coeffs": coeffs_json(gamma_substitute(f, args.degree))}
    if sub == "realrooted":
        cert = real_root_certificate(f)
        return cert.to_dict()
    if sub == "interlaces":
        g = parse_coeffs(args.other)
        return {"interlaces": interlaces(f, g)}
    if sub == "shape":
        d = f.degree if args.degree is None else args.degree
        return {"degree": d, "palindromic": is_palindromic(f, d), "unimodal": is_unimodal(f),
                "log_concave": is_log_concave(f)}
    raise InputError(f"unknown poly subcommand {sub}")


def kpq_report(p: int, q: int) -> dict:
    w, hs = kpq_w(p, q), kpq_hstar(p, q)
    if gamma_substitute(w, p + q) != hs:
        raise IntegrityError("closed form h* disagrees with the gamma route")
    return {"p": p, "q": q, "W": coeffs_json(w), "hstar": coeffs_json(hs)}


def eulerian_report(path: str) -> dict:
    pos = parse_poset(_read(path))
    w = eulerian_polynomial(pos)
    rep = {"d": pos.d, "covers": [list(c) for c in pos.covers], "W": coeffs_json(w), "narrow": is_narrow(pos)}
    if rep["narrow"]:
        g = complement_comparability_graph(pos)
        hs = hstar_bg_fast(g)
        if hs != gamma_substitute(w, pos.d):
            raise IntegrityError("W(P) does not match the interior polynomial of G-hat")
        rep["graph_edges"] = [list(e) for e in g.edges]
        rep["hstar"] = coeffs_json(hs)
    return rep


def interior_report(path: str, side: int, use_hat: bool) -> dict:
    g = load_graph(path)
    b = hat(g) if use_hat else g
    h = hypergraph_from_bipartite(b, side)
    f = interior_polynomial_oracle(h)
    rep = {"vertices": h.vertex_count, "hyperedges": [list(e) for e in h.hyperedges], "interior": coeffs_json(f)}
    if use_hat:
        rep["matching_formula_agrees"] = f == interior_hat_via_matchings(g)
    return rep


def hstar_report(path: str, method: str) -> dict:
    g = load_graph(path)
    out = {"d": g.d}
    vals = {}
    if method in ("fast", "all") and is_bipartite(g):
        vals["fast"] = hstar_bg_fast(g)
    elif method == "fast":
        raise InputError("the fast formula needs a bipartite graph")
    if method in ("subgraph", "all"):
        vals["subgraph"] = hstar_bg_subgraph_formula(g)
    if method in ("ehrhart", "all"):
        vals["ehrhart"] = ehrhart_hstar(build_bg(g)).hstar
    distinct = set(vals.values())
    if len(distinct) > 1:
        raise VerificationFailed({"hstar": {k: coeffs_json(v) for k, v in vals.items()}, "agree": False})
    out["methods"] = sorted(vals)
    out["hstar"] = coeffs_json(next(iter(distinct)))
    return out


# ---------------------------------------------------------------------------
# rendering


def render_text(obj, indent: int = 0) -> str:
    pad = "  " * indent
    lines = []
    for key, val in obj.items():
        if isinstance(val, dict):
            lines.append(f"{pad}{key}:")
            lines.append(render_text(val, indent + 1))
        elif isinstance(val, list) and val and isinstance(val[0], dict):
            lines.append(f"{pad}{key}:")
            for item in val:
                lines.append(f"{pad}  - " + "; ".join(f"{k}={_fmt(v)}" for k, v in item.items()))
        else:
            lines.append(f"{pad}{key}: {_fmt(val)}")
    return "\n".join(x for x in lines if x)


def _fmt(v) -> str:
    if isinstance(v, bool):
        return "yes" if v else "no"
    if v is None:
        return "-"
    if isinstance(v, list):
        return "(" + ", ".join(_fmt(x) for x in v) + ")"
    if isinstance(v, dict):
        return "{" + ", ".join(f"{k}: {_fmt(x)}" for k, x in v.items()) + "}"
    return str(v)


def emit(obj: dict, as_json: bool) -> str:
    if as_json:
        return json.dumps(obj, indent=2) + "\n"
    return render_text(obj) + "\n"


# ---------------------------------------------------------------------------
# argument parsing


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        sys.exit(EXIT_INPUT)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--budget-points", type=int, help="cap on scanned lattice points (MAX_POINTS)")
    common.add_argument("--budget-trees", type=int, help="cap on enumerated spanning trees (MAX_TREES)")
    common.add_argument("--timings", action="store_true", help="append wall-clock timings (breaks byte-identity)")

    ap = _Parser(prog="bgpoly", description="Symmetric edge-type polytopes B_G and their h*-polynomials.")
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    a = sub.add_parser("analyze", parents=[common], help="predicates, h*, reflexivity and IDP of B_G")
    a.add_argument("path")
    a.add_argument("--kmax", type=int, default=3)
    a.add_argument("--no-ehrhart", action="store_true")

    v = sub.add_parser("verify", parents=[common], help="cross-check the independent pipelines")
    v.add_argument("path")
    v.add_argument("--level", choices=("fast", "full"), default="fast")
    v.add_argument("--kmax", type=int, default=3)
    v.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("poly", help="polynomial utilities")
    psub = p.add_subparsers(dest="poly_cmd", required=True, parser_class=_Parser)
    for name, helptext in (("gamma", "gamma vector of a palindromic polynomial"),
                           ("substitute", "(x+1)^d g(4x/(x+1)^2)"),
                           ("realrooted", "exact real-rootedness certificate"),
                           ("interlaces", "decide f <= g in the interlacing order"),
                           ("shape", "palindromic / unimodal / log-concave")):
        sp = psub.add_parser(name, parents=[common], help=helptext)
        sp.add_argument("coeffs", help="constant term first, comma or space separated")
        if name == "interlaces":
            sp.add_argument("other")
        if name in ("gamma", "substitute", "shape"):
            sp.add_argument("--degree", type=int)

    k = sub.add_parser("kpq", parents=[common], help="closed forms for K_{p,q}")
    k.add_argument("p", type=int)
    k.add_argument("q", type=int)

    e = sub.add_parser("eulerian", parents=[common], help="P-Eulerian polynomial of a poset file")
    e.add_argument("path")

    i = sub.add_parser("interior", parents=[common], help="interior polynomial of a bipartite graph")
    i.add_argument("path")
    i.add_argument("--side", type=int, choices=(1, 2), default=2, help="bipartition side read as hyperedges")
    i.add_argument("--hat", action="store_true", help="use G-hat instead of G")

    h = sub.add_parser("hstar", parents=[common], help="h*(B_G) by a chosen pipeline")
    h.add_argument("path")
    h.add_argument("--method", choices=("fast", "subgraph", "ehrhart", "all"), default="all")
    return ap


def run(args) -> tuple:
    if args.cmd == "analyze":
        return analyze_report(load_graph(args.path), args.kmax, not args.no_ehrhart), EXIT_OK
    if args.cmd == "verify":
        rep = verify_report(load_graph(args.path), args.level, args.kmax, args.seed)
        return rep, EXIT_OK if rep["passed"] else EXIT_FAIL
    if args.cmd == "poly":
        return poly_report(args.poly_cmd, args), EXIT_OK
    if args.cmd == "kpq":
        return kpq_report(args.p, args.q), EXIT_OK
    if args.cmd == "eulerian":
        return eulerian_report(args.path), EXIT_OK
    if args.cmd == "interior":
        return interior_report(args.path, args.side, args.hat), EXIT_OK
    if args.cmd == "hstar":
        return hstar_report(args.path, args.method), EXIT_OK
    raise InputError(f"unknown command {args.cmd}")


def main(argv: Optional[list] = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "kmax", 2) < 2:
        sys.stderr.write("bgpoly: error: --kmax must be at least 2\n")
        return EXIT_INPUT
    overrides = {"MAX_POINTS": getattr(args, "budget_points", None), "MAX_TREES": getattr(args, "budget_trees", None)}
    saved = {k: os.environ.get("BGPOLY_" + k) for k in overrides}
    t0 = time.perf_counter()
    try:
        for name, value in overrides.items():
            if value is not None:
                set_budget(name, value)
        report, code = run(args)
    except InputError as exc:
        sys.stderr.write(f"bgpoly: input error: {exc}\n")
        return EXIT_INPUT
    except ResourceLimitError as exc:
        sys.stderr.write(f"bgpoly: resource limit: {exc}\n")
        return EXIT_LIMIT
    except VerificationFailed as exc:
        report, code = exc.report, EXIT_FAIL
    except IntegrityError as exc:
        sys.stderr.write(f"bgpoly: integrity check failed: {exc}\n")
        return EXIT_FAIL
    finally:
        # budgets given as flags apply to this invocation only
        for name, value in saved.items():
            if value is None:
                os.environ.pop("BGPOLY_" + name, None)
            else:
                os.environ["BGPOLY_" + name] = value
    if getattr(args, "timings", False):
        report["timings"] = {"seconds": round(time.perf_counter() - t0, 3)}
    sys.stdout.write(emit(report, getattr(args, "json", False)))
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
