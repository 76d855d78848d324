"""Command-line entry point: ``lcverify {graph,power-scan,code,scheme,formulas,corpus}``."""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from importlib import resources
from pathlib import Path

from .reports import RUNNERS, dumps, jsonable, make_report

BUNDLED_MANIFEST = "reference_examples.json"


def _graph_source(ns) -> dict:
    if ns.file:
        return {"file": ns.file}
    if ns.named:
        return {"named": [ns.named[0], *(int(p) for p in ns.named[1:])]}
    raise SystemExit("error: give --file PATH or --named FAMILY [PARAMS...]")


def _add_graph_source(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--file", help="graph file: JSON {n, edges} or 'n m' edge list")
    src.add_argument("--named", nargs="+", metavar="FAMILY_OR_PARAM",
                     help="named family and integer parameters, e.g. --named johnson 7 3")
    p.add_argument("--vertex", type=int, default=0, help="base vertex x (default 0)")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="lcverify", description=__doc__)
    ap.add_argument("--timing", action="store_true", help="add wall-clock timing to reports")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("graph", help="distance profiles, DDR/DR, LC verdicts, SRG bounds")
    _add_graph_source(p)

    p = sub.add_parser("power-scan", help="LC of Cartesian powers via profile polynomials")
    _add_graph_source(p)
    p.add_argument("--n-max", type=int, default=10)
    p.add_argument("--no-crosscheck", action="store_true", help="skip building the explicit power graph")
    p.add_argument("--csv", action="store_true")

    p = sub.add_parser("code", help="weight distribution, projectivity, cosets, coset graph")
    p.add_argument("file", help="code file: 'q n k' header then k generator rows")
    p.add_argument("--cap-codewords", type=int)
    p.add_argument("--cap-cosets", type=int)

    p = sub.add_parser("scheme", help="spectrum, Krein parameters, Krein array, Property M")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--array", help='intersection array JSON {"b":[..],"c":[..]} or a file holding it')
    src.add_argument("--matrices", help="JSON file with a list of dense 0/1 relation matrices")
    src.add_argument("--named", nargs="+", help="e.g. --named johnson 21 3 | hamming 3 2 | petersen")
    p.add_argument("--tol", type=float, default=1e-9, help="relative tolerance in float mode")

    p = sub.add_parser("formulas", help="closed-form valency/multiplicity families")
    p.add_argument("family")
    p.add_argument("--params", nargs="*", default=[], metavar="NAME=VALUE",
                   help="values or inclusive ranges, e.g. n=21 d=3 or n=2:30 d=1:14")
    p.add_argument("--condition", help="row filter; supported: 'd<(n+1)/2'")
    p.add_argument("--csv", action="store_true")

    p = sub.add_parser("corpus", help="run a manifest of entries and summarise invariants")
    p.add_argument("manifest", nargs="?", help="manifest JSON (default: bundled reference examples)")
    p.add_argument("--workers", type=int, default=4)
    return ap


def _args_from_namespace(ns) -> dict:
    cmd = ns.command
    if cmd == "graph":
        return _graph_source(ns) | {"vertex": ns.vertex}
    if cmd == "power-scan":
        return _graph_source(ns) | {"vertex": ns.vertex, "n_max": ns.n_max,
                                    "crosscheck": not ns.no_crosscheck}
    if cmd == "code":
        args = {"file": ns.file}
        if ns.cap_codewords is not None:
            args["cap_codewords"] = ns.cap_codewords
        if ns.cap_cosets is not None:
            args["cap_cosets"] = ns.cap_cosets
        return args
    if cmd == "scheme":
        args = {"tol": ns.tol}
        if ns.array:
            args["array"] = ns.array
        elif ns.matrices:
            args["matrices"] = ns.matrices
        else:
            args["named"] = [ns.named[0], *(int(p) for p in ns.named[1:])]
        return args
    if cmd == "formulas":
        params = {}
        for item in ns.params:
            if "=" not in item:
                raise ValueError(f"parameter {item!r} must look like NAME=VALUE")
            k, v = item.split("=", 1)
            params[k] = v
        args = {"family": ns.family, "params": params}
        if ns.condition:
            args["condition"] = ns.condition
        return args
    raise ValueError(f"unknown command {cmd}")


def _csv_rows(cmd: str, results: dict) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if cmd == "power-scan":
        w.writerow(["n", "lc", "fail_index", "coefficients"])
        for r in results["rows"]:
            w.writerow([r["n"], r["lc"].holds, r["lc"].index, " ".join(map(str, r["coefficients"].coeffs))])
    else:
        names = sorted({k for r in results["rows"] for k in r["params"]})
        w.writerow(names + ["sequence", "lc", "fail_index", "sum_check", "error"])
        for r in results["rows"]:
            if "error" in r:
                w.writerow([r["params"].get(k) for k in names] + ["", "", "", "", r["error"]])
            else:
                w.writerow([r["params"].get(k) for k in names]
                           + [" ".join(map(str, r["sequence"])), r["lc"].holds, r["lc"].index,
                              r["sum_check"], ""])
    return buf.getvalue()


# ----------------------------------------------------------------------------
# corpus


def _get(obj, dotted: str):
    for part in dotted.split("."):
        if isinstance(obj, list):
            obj = obj[int(part)]
        else:
            obj = obj[part]
    return obj


def _resolve_paths(args: dict, base: Path) -> dict:
    out = dict(args)
    for key in ("file", "matrices", "array"):
        val = out.get(key)
        if isinstance(val, str) and not val.lstrip().startswith("{") and not Path(val).is_absolute():
            out[key] = str(base / val)
    return out


def run_entry(entry: dict, base: Path) -> dict:
    name = entry.get("name", entry.get("command", "?"))
    row = {"name": name}
    try:
        cmd = entry["command"]
        runner = RUNNERS[cmd]
        args = _resolve_paths(entry.get("args", {}), base)
        results = jsonable(runner(args))
        row["status"] = "ok"
        row["report"] = make_report(cmd, entry.get("args", {}), results)
        mismatches = []
        for path, want in (entry.get("expect") or {}).items():
            try:
                got = _get(results, path)
            except (KeyError, IndexError, TypeError, ValueError):
                got = "<missing>"
            if got != want:
                mismatches.append({"path": path, "expected": want, "got": got})
        if entry.get("expect"):
            row["expect"] = {"passed": not mismatches, "mismatches": mismatches}
    except Exception as exc:  # per-entry isolation: record and keep going
        row["status"] = "error"
        row["error"] = f"{type(exc).__name__}: {exc}"
    return row


def run_corpus(manifest: dict | list, base: Path = Path("."), workers: int = 4) -> dict:
    entries = manifest.get("entries", []) if isinstance(manifest, dict) else list(manifest)
    with ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
        rows = list(pool.map(lambda e: run_entry(e, base), entries))
    invariants: dict[str, dict[str, int]] = {}
    for r in rows:
        for k, v in ((r.get("report") or {}).get("results", {}).get("invariants") or {}).items():
            slot = invariants.setdefault(k, {"passed": 0, "failed": 0})
            slot["passed" if v else "failed"] += 1
    checked = [r for r in rows if "expect" in r]
    summary = {
        "entries": len(rows),
        "errors": sum(r["status"] == "error" for r in rows),
        "expectations": {"passed": sum(r["expect"]["passed"] for r in checked),
                         "failed": sum(not r["expect"]["passed"] for r in checked)},
        "invariants": dict(sorted(invariants.items())),
    }
    summary["all_green"] = (summary["errors"] == 0 and summary["expectations"]["failed"] == 0
                            and all(v["failed"] == 0 for v in invariants.values()))
    return {"entries": rows, "summary": summary}


def load_bundled_manifest() -> tuple[dict, Path]:
    ref = resources.files("lcverify") / "data" / BUNDLED_MANIFEST
    with resources.as_file(ref) as path:
        return json.loads(Path(path).read_text()), Path(path).parent


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    ns = ap.parse_args(argv)
    t0 = time.perf_counter()
    try:
        if ns.command == "corpus":
            if ns.manifest:
                path = Path(ns.manifest)
                manifest, base = json.loads(path.read_text()), path.parent
            else:
                manifest, base = load_bundled_manifest()
            out = run_corpus(manifest, base, ns.workers)
            if ns.timing:
                out["timing_seconds"] = round(time.perf_counter() - t0, 6)
            print(dumps(out))
            return 0 if out["summary"]["errors"] == 0 else 1
        args = _args_from_namespace(ns)
        results = RUNNERS[ns.command](args)
        if getattr(ns, "csv", False):
            sys.stdout.write(_csv_rows(ns.command, results))
            return 0
        timing = time.perf_counter() - t0 if ns.timing else None
        print(dumps(make_report(ns.command, args, jsonable(results), timing)))
        return 0
    except (ValueError, KeyError, OSError) as exc:
        print(f"lcverify {ns.command}: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
