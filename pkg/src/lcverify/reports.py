"""Report builders shared by the CLI subcommands and the corpus runner.

Each ``run_*`` takes a plain dict of arguments (what a manifest entry holds)
and returns a JSON-ready results dict.
"""
from __future__ import annotations

import hashlib
import json
from dataclasses import is_dataclass
from fractions import Fraction
from pathlib import Path

import numpy as np

from . import closed_forms, graphs, schemes
from .codes import (
    DEFAULT_CAPS,
    LinearCode,
    coset_analysis,
    coset_graph,
    delsarte_code_graph,
    is_completely_regular,
    is_projective,
    two_weight_check,
)
from .formats import InputError, graph_from_json, parse_array, parse_relation_matrices, read_code, read_graph
from .seq import IntPolynomial, Verdict, is_log_concave

__all__ = ["jsonable", "dumps", "make_report", "run_graph", "run_power_scan", "run_code",
           "run_scheme", "run_formulas", "RUNNERS"]


def jsonable(obj):
    if isinstance(obj, Verdict):
        return obj.to_json() | ({"side": obj.side} if getattr(obj, "side", None) else {})
    if isinstance(obj, Fraction):
        return f"{obj.numerator}/{obj.denominator}"
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        return float(f"{float(obj):.12g}")
    if isinstance(obj, IntPolynomial):
        return obj.to_json()
    if isinstance(obj, np.ndarray):
        return jsonable(obj.tolist())
    if hasattr(obj, "to_json"):
        return jsonable(obj.to_json())
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(x) for x in obj]
    if obj is None or isinstance(obj, str):
        return obj
    if is_dataclass(obj):
        return jsonable(obj.__dict__)
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def dumps(obj) -> str:
    return json.dumps(jsonable(obj), sort_keys=True, indent=2)


def _digest(args: dict) -> str:
    h = hashlib.sha256(json.dumps(jsonable(args), sort_keys=True).encode())
    for key in ("file", "matrices"):
        val = args.get(key)
        if isinstance(val, str) and Path(val).is_file():
            h.update(Path(val).read_bytes())
    return h.hexdigest()


def make_report(command: str, args: dict, results: dict, timing: float | None = None) -> dict:
    rep = {"command": command, "inputs": jsonable(args), "inputs_digest": _digest(args), "results": results}
    if timing is not None:
        rep["timing_seconds"] = round(timing, 6)
    return rep


# ----------------------------------------------------------------------------
# graphs


def load_graph(args: dict) -> graphs.Graph:
    if "named" in args:
        family, *params = args["named"]
        return graphs.build_named(family, *params)
    if "file" in args:
        return read_graph(args["file"])
    if "graph" in args:
        return graph_from_json(args["graph"])
    raise InputError("graph input needs one of 'named', 'file' or 'graph'")


def run_graph(args: dict) -> dict:
    g = load_graph(args)
    x = int(args.get("vertex", 0))
    prof = graphs.distance_profile(g, x)
    out = {
        "n": g.n,
        "m": g.m,
        "regular": g.is_regular(),
        "vertex": x,
        "profile": prof.counts,
        "polynomial": prof.polynomial(),
        "lc_at": is_log_concave(prof.counts),
        "ddr": graphs.is_ddr(g),
    }
    verdict, witness = graphs.is_lc_graph(g)
    out["lc_graph"] = {"verdict": verdict, "witness": witness}
    ia = graphs.is_distance_regular(g)
    out["intersection_array"] = ia
    inv = {"dr_implies_ddr": ia is None or out["ddr"]}
    if ia is not None and ia.diameter:
        cert = graphs.drg_lc_certificate(ia)
        out["drg_certificate"] = cert
        inv["array_round_trip"] = cert["valencies"] == prof.counts
    srg = graphs.srg_parameters(g)
    if srg is not None:
        lo, hi = graphs.srg_bounds(srg.k)
        out["srg"] = {"parameters": srg, "lower_bound": lo, "moore_bound": hi,
                      "bounds": graphs.srg_bounds_check(srg)}
        comp = graphs.complement(g)
        comp_srg = graphs.srg_parameters(comp)
        if comp_srg is not None:
            out["srg"]["complement"] = comp_srg
        inv["srg_identity"] = srg.counting_identity()
    out["invariants"] = inv
    return out


def run_power_scan(args: dict) -> dict:
    g = load_graph(args)
    x = int(args.get("vertex", 0))
    n_max = int(args.get("n_max", 10))
    rows = graphs.power_scan(g, x, n_max)
    n0 = next((n for n, _, v in rows if v.holds), None)
    out = {
        "vertex": x,
        "n_max": n_max,
        "rows": [{"n": n, "coefficients": p, "lc": v} for n, p, v in rows],
        "minimal_power": n0,
    }
    check_n = n0 or 1
    if args.get("crosscheck", True) and g.n ** check_n <= graphs.POWER_CROSSCHECK_CAP:
        out["crosscheck"] = {"n": check_n, "agrees": graphs.power_profile_crosscheck(g, x, check_n)}
        out["invariants"] = {"power_identity": out["crosscheck"]["agrees"]}
    return out


# ----------------------------------------------------------------------------
# codes


def load_code(args: dict) -> LinearCode:
    if "file" in args:
        return read_code(args["file"])
    if "rows" in args:
        return LinearCode.from_rows(int(args.get("q", 2)), args["rows"])
    raise InputError("code input needs 'file' or 'rows'")


def run_code(args: dict) -> dict:
    c = load_code(args)
    caps = dict(DEFAULT_CAPS)
    for key in ("codewords", "cosets", "vectors", "graph_vertices"):
        if args.get(f"cap_{key}") is not None:
            caps[key] = int(args[f"cap_{key}"])
    tw = two_weight_check(c, caps)
    proj, pair = is_projective(c)
    out = {
        "q": c.q,
        "n": c.n,
        "k": c.k,
        "weight_distribution": tw["distribution"],
        "nonzero_weights": tw["weights"],
        "projective": {"verdict": proj, "columns": pair},
        "two_weight": tw,
    }
    inv = {"weight_sum": sum(tw["distribution"]) == c.q ** c.k}
    if tw["is_two_weight"] and c.q ** c.k <= caps["graph_vertices"]:
        g = delsarte_code_graph(c, tw["w1"], caps)
        try:
            srg = graphs.srg_parameters(g)
        except graphs.DisconnectedGraphError:
            srg = None
        out["delsarte_graph"] = {"n": g.n, "degree": int(g.degrees()[0]), "srg": srg}
        if proj.holds:
            inv["projective_two_weight_srg"] = srg is not None and tw["inequalities"]
    ca = coset_analysis(c, caps)
    cr = is_completely_regular(c, caps, ca)
    out["cosets"] = ca.to_json() | {"d_lc": is_log_concave(ca.d)}
    out["completely_regular"] = cr
    inv["coset_sum"] = sum(ca.d) == c.q ** (c.n - c.k)
    cg = coset_graph(c, caps)
    cgr = {"n": cg.graph.n, "m": cg.graph.m, "flagged": cg.flagged,
           "parallel_collapsed": cg.parallel_collapsed, "loop_dropped": cg.loop_dropped}
    try:
        prof = graphs.distance_profile(cg.graph, 0)
        ia = graphs.is_distance_regular(cg.graph)
        cgr.update(profile=prof.counts, intersection_array=ia, diameter=prof.eccentricity)
        if cr.holds:
            inv["coset_graph_profile_matches_d"] = prof.counts == ca.d
            inv["coset_graph_dr"] = ia is not None and ia.diameter == ca.covering_radius
            if proj.holds:
                inv["projective_cr_d_lc"] = is_log_concave(ca.d).holds
    except graphs.DisconnectedGraphError as exc:
        cgr["error"] = str(exc)
    out["coset_graph"] = cgr
    out["invariants"] = inv
    return out


# ----------------------------------------------------------------------------
# schemes


def _named_array(family: str, params: list[int]) -> tuple[graphs.IntersectionArray, graphs.Graph | None]:
    if family == "johnson":
        n, d = params
        b, c = closed_forms.johnson_intersection_array(n, d)
        size = closed_forms.binom(n, d)
        g = graphs.johnson(n, d) if size <= schemes.EXPLICIT_CAP else None
        return graphs.IntersectionArray(b, c), g
    if family == "hamming":
        n, q = params
        b, c = closed_forms.hamming_intersection_array(n, q)
        g = graphs.hamming(n, q) if q ** n <= schemes.EXPLICIT_CAP else None
        return graphs.IntersectionArray(b, c), g
    g = graphs.build_named(family, *params)
    ia = graphs.is_distance_regular(g)
    if ia is None:
        raise InputError(f"named graph {family} {params} is not distance-regular")
    return ia, g if g.n <= schemes.EXPLICIT_CAP else None


def run_scheme(args: dict) -> dict:
    tol = float(args.get("tol", schemes.DEFAULT_TOL))
    graph = None
    if "array" in args:
        spec = schemes.spectrum_from_intersection_array(parse_array(args["array"]), tol)
        explicit = None
    elif "named" in args:
        family, *params = args["named"]
        ia, graph = _named_array(family, [int(p) for p in params])
        spec = schemes.spectrum_from_intersection_array(ia, tol)
        explicit = None
    elif "matrices" in args:
        explicit = schemes.scheme_from_relation_matrices(parse_relation_matrices(args["matrices"]), tol)
        spec = explicit.spectrum
    else:
        raise InputError("scheme input needs one of 'array', 'named' or 'matrices'")
    if graph is not None:
        explicit = schemes.scheme_from_relation_matrices(schemes.distance_relations(graph), tol)

    kt = schemes.krein_parameters(spec)
    out = {"spectrum": spec}
    kmin = kt.minimum()
    nonneg = kmin >= 0 if spec.mode == "exact" else kmin >= -tol * max(1, spec.n)
    out["krein"] = {"minimum": kmin, "nonnegative": nonneg}
    if spec.d <= 3:
        out["krein"]["tensor"] = kt.values
    order = schemes.find_q_polynomial_ordering(kt) if spec.d <= 8 else None
    out["q_polynomial_ordering"] = order
    if order is not None:
        mlc = schemes.multiplicity_lc(spec, order, kt)
        ka = mlc["krein_array"]
        out["krein_array"] = ka
        out["property_M"] = schemes.property_M(ka)
        out["multiplicity_lc"] = {k: v for k, v in mlc.items() if k != "krein_array"}
    if spec.mode == "exact":
        out["self_dual"] = schemes.self_duality_check(spec, kt)

    d1 = spec.d + 1
    inv = {
        "m0_is_1": spec.close(spec.m[0], 1),
        "sum_m_is_n": spec.close(sum(spec.m), spec.n),
        "krein_nonnegative": nonneg,
        "column_orthogonality": all(
            spec.close(sum(spec.m[i] * spec.P[i][j] * spec.P[i][k] for i in range(d1)),
                       spec.n * spec.v[j] if j == k else 0)
            for j in range(d1) for k in range(d1)),
    }
    if order is not None:
        inv["ratio_identity"] = out["multiplicity_lc"]["ratio_identity"]
        if out["property_M"].holds:
            inv["property_M_implies_lc"] = out["multiplicity_lc"]["lc"].holds
    if explicit is not None and explicit.spectrum is not spec:
        inv["route_agreement"] = schemes.spectra_agree(spec, explicit.spectrum)
        out["explicit_route"] = {"mode": explicit.spectrum.mode,
                                 "krein_crosscheck_max_deviation": explicit.krein_crosscheck}
    elif explicit is not None:
        out["intersection_numbers"] = explicit.intersection if spec.d <= 3 else None
        out["explicit_route"] = {"krein_crosscheck_max_deviation": explicit.krein_crosscheck}
    out["invariants"] = inv
    return out


# ----------------------------------------------------------------------------
# formulas


def _expand(value) -> list[int]:
    """``5`` -> [5]; ``"2:6"`` -> [2..6] inclusive; lists pass through."""
    if isinstance(value, (list, tuple)):
        return [int(v) for v in value]
    s = str(value)
    if ":" in s:
        lo, hi = s.split(":", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(s)]


def run_formulas(args: dict) -> dict:
    family = args["family"]
    if family not in closed_forms.FAMILIES:
        raise InputError(f"unknown formula family {family!r}; known: {', '.join(closed_forms.FAMILIES)}")
    params = {k: _expand(v) for k, v in (args.get("params") or {}).items()}
    where = None
    cond = args.get("condition")
    if cond == "d<(n+1)/2":
        where = lambda **p: 2 * p["d"] < p["n"] + 1 and p["d"] <= p["n"] - 1  # noqa: E731
    elif cond is not None:
        raise InputError(f"unknown condition {cond!r}; supported: 'd<(n+1)/2'")
    rows = []
    for p in closed_forms.grid(**params):
        if where is not None and not where(**p):
            continue
        try:
            rows.append(closed_forms.evaluate(family, **p))
        except closed_forms.FormulaError as exc:
            rows.append({"family": family, "params": p, "error": str(exc)})
    ok = [r for r in rows if "error" not in r]
    return {
        "family": family,
        "rows": rows,
        "all_lc": all(r["lc"].holds for r in ok),
        "invariants": {"sum_checks": all(r["sum_check"] is not False for r in ok)},
    }


RUNNERS = {
    "graph": run_graph,
    "power-scan": run_power_scan,
    "code": run_code,
    "scheme": run_scheme,
    "formulas": run_formulas,
}
