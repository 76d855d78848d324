"""Linear codes over small finite fields: weights, cosets, and the two code graphs."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

import numpy as np

from . import kernels
from .fields import FiniteField, gf
from .graphs import Graph
from .seq import Verdict, is_log_concave

__all__ = [
    "LinearCode",
    "CodeError",
    "CapExceededError",
    "CosetAnalysis",
    "CosetGraph",
    "DEFAULT_CAPS",
    "weight_distribution",
    "is_projective",
    "two_weight_check",
    "delsarte_code_graph",
    "coset_analysis",
    "is_completely_regular",
    "coset_graph",
]

DEFAULT_CAPS = {
    "codewords": 10 ** 7,
    "graph_vertices": 2 ** 16,
    "cosets": 10 ** 6,
    "vectors": 10 ** 8,
}


class CodeError(ValueError):
    pass


class CapExceededError(CodeError):
    pass


def _cap(what: str, size: int, caps: dict | None) -> None:
    limit = (caps or {}).get(what, DEFAULT_CAPS[what])
    if size > limit:
        raise CapExceededError(f"{what} enumeration needs {size} items, above cap {limit}")


def _row_reduce(mat: np.ndarray, f: FiniteField) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form over f; returns (rref, pivot columns)."""
    a = mat.copy()
    rows, cols = a.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        p = r + int(nz[0])
        a[[r, p]] = a[[p, r]]
        a[r] = f.mul[f.inv[a[r, c]], a[r]]
        for i in range(rows):
            if i != r and a[i, c]:
                a[i] = f.sub[a[i], f.mul[a[i, c], a[r]]]
        pivots.append(c)
        r += 1
    return a, pivots


@dataclass(frozen=True, eq=False)
class LinearCode:
    field: FiniteField
    generator: np.ndarray

    def __post_init__(self):
        g = np.asarray(self.generator, dtype=np.int64)
        if g.ndim != 2:
            raise CodeError("generator must be a k x n matrix")
        if g.size and (g.min() < 0 or g.max() >= self.field.q):
            raise CodeError(f"generator entries must be field codes 0..{self.field.q - 1}")
        object.__setattr__(self, "generator", g)
        _, piv = _row_reduce(g, self.field)
        if len(piv) != g.shape[0]:
            raise CodeError(f"generator has rank {len(piv)} < k = {g.shape[0]}")

    @classmethod
    def from_rows(cls, q: int, rows: Sequence[Sequence[int]] | Sequence[str]) -> LinearCode:
        parsed = [[int(ch) for ch in r] if isinstance(r, str) else list(r) for r in rows]
        return cls(gf(q), np.array(parsed, dtype=np.int64))

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def n(self) -> int:
        return self.generator.shape[1]

    @property
    def k(self) -> int:
        return self.generator.shape[0]

    @cached_property
    def standard_form(self) -> tuple[np.ndarray, list[int]]:
        """[I | A] and the column permutation ``perm`` (position i holds original column perm[i])."""
        rref, piv = _row_reduce(self.generator, self.field)
        rest = [c for c in range(self.n) if c not in piv]
        perm = piv + rest
        return rref[:, perm], perm

    @cached_property
    def parity_check(self) -> np.ndarray:
        """(n-k) x n matrix H with G H^T = 0, in original coordinates."""
        f = self.field
        std, perm = self.standard_form
        k, n = self.k, self.n
        r = n - k
        a = std[:, k:]
        hp = np.zeros((r, n), dtype=np.int64)
        hp[:, :k] = f.neg[a.T]
        hp[:, k:] = np.eye(r, dtype=np.int64)
        h = np.empty_like(hp)
        h[:, perm] = hp
        return h

    def codewords(self, caps: dict | None = None) -> np.ndarray:
        """All q^k codewords; row i encodes the message with base-q digits of i."""
        _cap("codewords", self.q ** self.k, caps)
        f = self.field
        idx = np.arange(self.q ** self.k, dtype=np.int64)
        digits = (idx[:, None] // (self.q ** np.arange(self.k, dtype=np.int64))[None, :]) % self.q
        cw = np.zeros((idx.size, self.n), dtype=np.int64)
        for j in range(self.k):
            cw = f.add[cw, f.mul[digits[:, j][:, None], self.generator[j][None, :]]]
        return cw

    def __repr__(self):
        return f"LinearCode([{self.n},{self.k}]_{self.q})"


def weight_distribution(c: LinearCode, caps: dict | None = None) -> tuple[int, ...]:
    _cap("codewords", c.q ** c.k, caps)
    f = c.field
    hist = kernels.span_weight_histogram(c.generator, f.add, f.sub, f.mul, c.q)
    return tuple(int(x) for x in hist)


def is_projective(c: LinearCode) -> tuple[Verdict, tuple[int, int | None] | None]:
    """Fails on a zero column (pair (j, None)) or two proportional columns (i, j); 0-based."""
    f = c.field
    rref, _ = _row_reduce(c.generator, f)
    seen: dict[tuple, int] = {}
    for j in range(c.n):
        col = rref[:, j]
        nz = np.flatnonzero(col)
        if nz.size == 0:
            return Verdict(False, j, f"column {j} is zero"), (j, None)
        canon = tuple(f.mul[f.inv[col[nz[0]]], col])
        if canon in seen:
            i = seen[canon]
            return Verdict(False, j, f"columns {i} and {j} are proportional"), (i, j)
        seen[canon] = j
    return Verdict(True), None


def two_weight_check(c: LinearCode, caps: dict | None = None) -> dict:
    dist = weight_distribution(c, caps)
    weights = [w for w in range(1, len(dist)) if dist[w]]
    out = {"distribution": dist, "weights": weights, "is_two_weight": len(weights) == 2}
    if len(weights) == 2:
        w1, w2 = weights
        a1, a2 = dist[w1], dist[w2]
        out.update(w1=w1, w2=w2, first=a1 * a1 >= a2, second=a2 * a2 >= a1)
        out["inequalities"] = out["first"] and out["second"]
    return out


def delsarte_code_graph(c: LinearCode, w1: int, caps: dict | None = None) -> Graph:
    """Cayley graph on codewords; connection set = codewords of weight w1."""
    if w1 <= 0:
        raise CodeError(f"w1 must be a nonzero weight, got {w1}")
    nv = c.q ** c.k
    _cap("graph_vertices", nv, caps)
    cw = c.codewords(caps)
    wt = (cw != 0).sum(axis=1)
    conn = np.flatnonzero(wt == w1)
    if conn.size == 0:
        raise CodeError(f"{w1} is not a weight of {c!r}")
    f = c.field
    place = c.q ** np.arange(c.k, dtype=np.int64)
    digits = (np.arange(nv, dtype=np.int64)[:, None] // place[None, :]) % c.q
    edges = set()
    for s in conn:
        nbr = f.add[digits, digits[s][None, :]] @ place
        for a, b in zip(range(nv), nbr.tolist()):
            if a < b:
                edges.add((a, b))
    return Graph(nv, edges)


@dataclass(frozen=True)
class CosetAnalysis:
    q: int
    n: int
    k: int
    coset_weight: np.ndarray  # indexed by syndrome id
    distributions: np.ndarray  # syndrome id x weight
    d: tuple[int, ...]
    permutation: tuple[int, ...]

    @property
    def num_cosets(self) -> int:
        return len(self.coset_weight)

    @property
    def covering_radius(self) -> int:
        return len(self.d) - 1

    def to_json(self) -> dict:
        return {
            "num_cosets": self.num_cosets,
            "d": list(self.d),
            "covering_radius": self.covering_radius,
            "permutation": list(self.permutation),
            "coset_weights": self.coset_weight.tolist(),
        }


def coset_analysis(c: LinearCode, caps: dict | None = None) -> CosetAnalysis:
    r = c.n - c.k
    _cap("cosets", c.q ** r, caps)
    _cap("vectors", c.q ** c.n, caps)
    f = c.field
    minw, hist = kernels.coset_tables(c.parity_check, f.add, f.sub, f.mul, c.q)
    d = np.bincount(minw)
    return CosetAnalysis(c.q, c.n, c.k, minw, hist, tuple(int(x) for x in d),
                         tuple(c.standard_form[1]))


def is_completely_regular(c: LinearCode, caps: dict | None = None,
                          analysis: CosetAnalysis | None = None) -> Verdict:
    ca = analysis or coset_analysis(c, caps)
    for w in range(len(ca.d)):
        rows = ca.distributions[ca.coset_weight == w]
        bad = np.flatnonzero((rows != rows[0]).any(axis=1))
        if bad.size:
            return Verdict(False, w, f"cosets of weight {w} have differing weight distributions")
    return Verdict(True)


@dataclass(frozen=True)
class CosetGraph:
    graph: Graph
    parallel_collapsed: bool
    loop_dropped: bool

    @property
    def flagged(self) -> bool:
        return self.parallel_collapsed or self.loop_dropped


def coset_graph(c: LinearCode, caps: dict | None = None) -> CosetGraph:
    """Syndromes s ~ s' when s' - s is a nonzero multiple of a parity-check column."""
    r = c.n - c.k
    nv = c.q ** r
    _cap("cosets", nv, caps)
    f = c.field
    h = c.parity_check
    place = c.q ** np.arange(r, dtype=np.int64)
    steps = [f.mul[alpha, h[:, i]] for i in range(c.n) for alpha in range(1, c.q)]
    ids = [int(s @ place) for s in steps]
    loop = 0 in ids
    parallel = len(set(ids) - {0}) < len([i for i in ids if i])
    digits = (np.arange(nv, dtype=np.int64)[:, None] // place[None, :]) % c.q
    edges = set()
    for step, sid in zip(steps, ids):
        if sid == 0:
            continue
        nbr = f.add[digits, step[None, :]] @ place
        for a, b in zip(range(nv), nbr.tolist()):
            edges.add((a, b) if a < b else (b, a))
    return CosetGraph(Graph(nv, edges), parallel, loop)
