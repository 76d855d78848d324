"""Readers for graph, code, intersection-array and relation-matrix inputs."""
from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .codes import LinearCode
from .fields import gf
from .graphs import Graph, GraphError, IntersectionArray

__all__ = [
    "InputError",
    "parse_graph_text",
    "read_graph",
    "parse_code_text",
    "read_code",
    "parse_array",
    "parse_relation_matrices",
]


class InputError(ValueError):
    pass


def parse_graph_text(text: str, source: str = "<input>") -> Graph:
    """JSON ``{"n":..,"edges":[[u,v],..]}`` or an edge list with an ``n m`` header line."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"{source}:{exc.lineno}: invalid JSON ({exc.msg})") from None
        return graph_from_json(data, source)
    lines = [(i + 1, ln.split("#", 1)[0].split()) for i, ln in enumerate(text.splitlines())]
    lines = [(i, toks) for i, toks in lines if toks]
    if not lines:
        raise InputError(f"{source}: empty graph file")
    lineno, header = lines[0]
    if len(header) != 2:
        raise InputError(f"{source}:{lineno}: header must be 'n m', got {' '.join(header)!r}")
    n, m = (_int(t, source, lineno) for t in header)
    body = lines[1:]
    if len(body) != m:
        raise InputError(f"{source}: header promises {m} edges, found {len(body)}")
    edges = []
    for lineno, toks in body:
        if len(toks) != 2:
            raise InputError(f"{source}:{lineno}: edge line needs two vertex ids, got {' '.join(toks)!r}")
        edges.append(tuple(_int(t, source, lineno) for t in toks))
    try:
        return Graph(n, edges)
    except GraphError as exc:
        raise InputError(f"{source}: {exc}") from None


def graph_from_json(data: dict, source: str = "<input>") -> Graph:
    try:
        return Graph(int(data["n"]), data.get("edges", []))
    except KeyError:
        raise InputError(f"{source}: graph JSON needs an 'n' field") from None
    except (GraphError, TypeError, ValueError) as exc:
        raise InputError(f"{source}: {exc}") from None


def read_graph(path: str | Path) -> Graph:
    p = Path(path)
    return parse_graph_text(p.read_text(), str(p))


def _int(tok: str, source: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise InputError(f"{source}:{lineno}: expected an integer, got {tok!r}") from None


def _order(tok: str, source: str, lineno: int) -> int:
    if "^" in tok:
        p, m = tok.split("^", 1)
        return _int(p, source, lineno) ** _int(m, source, lineno)
    return _int(tok, source, lineno)


def parse_code_text(text: str, source: str = "<input>") -> LinearCode:
    """First line ``q n k`` (q may be ``p^m``), then k rows of n field-element codes."""
    lines = [(i + 1, ln.split("#", 1)[0].split()) for i, ln in enumerate(text.splitlines())]
    lines = [(i, toks) for i, toks in lines if toks]
    if not lines:
        raise InputError(f"{source}: empty code file")
    lineno, header = lines[0]
    if len(header) != 3:
        raise InputError(f"{source}:{lineno}: header must be 'q n k', got {' '.join(header)!r}")
    q = _order(header[0], source, lineno)
    n, k = _int(header[1], source, lineno), _int(header[2], source, lineno)
    rows = lines[1:]
    if len(rows) != k:
        raise InputError(f"{source}: header promises {k} generator rows, found {len(rows)}")
    gen = []
    for lineno, toks in rows:
        if len(toks) == 1 and len(toks[0]) == n and q <= 10:
            toks = list(toks[0])
        if len(toks) != n:
            raise InputError(f"{source}:{lineno}: row needs {n} entries, got {len(toks)}")
        row = [_int(t, source, lineno) for t in toks]
        bad = [x for x in row if not 0 <= x < q]
        if bad:
            raise InputError(f"{source}:{lineno}: entry {bad[0]} is not a GF({q}) element code")
        gen.append(row)
    try:
        return LinearCode(gf(q), np.array(gen, dtype=np.int64).reshape(k, n))
    except ValueError as exc:
        raise InputError(f"{source}: {exc}") from None


def read_code(path: str | Path) -> LinearCode:
    p = Path(path)
    return parse_code_text(p.read_text(), str(p))


def parse_array(data, source: str = "<input>") -> IntersectionArray:
    if isinstance(data, str):
        s = data.strip()
        if not s.startswith("{") and Path(s).exists():
            s = Path(s).read_text()
        try:
            data = json.loads(s)
        except json.JSONDecodeError as exc:
            raise InputError(f"{source}: intersection array must be JSON {{\"b\":[..],\"c\":[..]}} ({exc.msg})") from None
    if not isinstance(data, dict) or "b" not in data or "c" not in data:
        raise InputError(f"{source}: intersection array needs 'b' and 'c' lists")
    try:
        return IntersectionArray(data["b"], data["c"])
    except (GraphError, TypeError, ValueError) as exc:
        raise InputError(f"{source}: {exc}") from None


def parse_relation_matrices(data, source: str = "<input>") -> list[np.ndarray]:
    if isinstance(data, (str, Path)):
        data = json.loads(Path(data).read_text())
    if not isinstance(data, list) or not data:
        raise InputError(f"{source}: relation input must be a nonempty list of square 0/1 matrices")
    mats = []
    for i, m in enumerate(data):
        a = np.asarray(m)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise InputError(f"{source}: matrix {i} is not square")
        mats.append(a.astype(np.int64))
    return mats
