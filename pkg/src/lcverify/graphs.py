"""Simple graphs, named families, Cartesian products and distance analysis."""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from . import kernels
from .seq import IntPolynomial, Verdict, is_log_concave, poly_pow

__all__ = [
    "Graph",
    "DistanceProfile",
    "IntersectionArray",
    "SrgParameters",
    "GraphError",
    "DisconnectedGraphError",
    "InfeasibleArrayError",
    "build_named",
    "NAMED_FAMILIES",
    "cartesian_product",
    "cartesian_power",
    "power_vertex",
    "complement",
    "distance_profile",
    "profile_polynomial",
    "is_ddr",
    "is_lc_at",
    "is_lc_graph",
    "minimal_lc_power",
    "power_profile_crosscheck",
    "is_distance_regular",
    "valencies_from_intersection_array",
    "drg_lc_certificate",
    "srg_parameters",
    "srg_bounds",
    "srg_bounds_check",
    "POWER_CROSSCHECK_CAP",
]

POWER_CROSSCHECK_CAP = 10 ** 6


class GraphError(ValueError):
    pass


class DisconnectedGraphError(GraphError):
    pass


class InfeasibleArrayError(GraphError):
    pass


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise GraphError(f"vertex count must be >= 0, got {n}")
        norm = set()
        for e in edges:
            u, v = (int(x) for x in e)
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) has an endpoint outside 0..{n - 1}")
            key = (u, v) if u < v else (v, u)
            if key in norm:
                raise GraphError(f"duplicate edge ({key[0]},{key[1]})")
            norm.add(key)
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "edges", frozenset(norm))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        deg = np.zeros(self.n, dtype=np.int64)
        if self.edges:
            e = np.array(sorted(self.edges), dtype=np.int64)
            src = np.concatenate([e[:, 0], e[:, 1]])
            dst = np.concatenate([e[:, 1], e[:, 0]])
            order = np.lexsort((dst, src))
            src, dst = src[order], dst[order]
            np.add.at(deg, src, 1)
        else:
            dst = np.empty(0, dtype=np.int64)
        indptr = np.zeros(self.n + 1, dtype=np.int64)
        np.cumsum(deg, out=indptr[1:])
        return indptr, dst

    def degree(self, v: int) -> int:
        indptr, _ = self.csr
        return int(indptr[v + 1] - indptr[v])

    def degrees(self) -> np.ndarray:
        return np.diff(self.csr[0])

    def neighbours(self, v: int) -> np.ndarray:
        indptr, indices = self.csr
        return indices[indptr[v]:indptr[v + 1]]

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=np.int64)
        for u, v in self.edges:
            a[u, v] = a[v, u] = 1
        return a

    def is_regular(self) -> bool:
        d = self.degrees()
        return self.n == 0 or bool((d == d[0]).all())

    @cached_property
    def distances(self) -> np.ndarray:
        """All-pairs geodesic distances; raises if the graph is disconnected."""
        indptr, indices = self.csr
        d = kernels.all_pairs_distances(indptr, indices)
        if self.n and (d < 0).any():
            u, v = np.argwhere(d < 0)[0]
            raise DisconnectedGraphError(f"graph is disconnected: vertex {v} unreachable from {u}")
        return d

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in sorted(self.edges)]}

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class DistanceProfile:
    vertex: int
    counts: tuple[int, ...]

    @property
    def eccentricity(self) -> int:
        return len(self.counts) - 1

    def polynomial(self) -> IntPolynomial:
        return IntPolynomial(self.counts)


@dataclass(frozen=True)
class IntersectionArray:
    b: tuple[int, ...]
    c: tuple[int, ...]

    def __init__(self, b: Sequence[int], c: Sequence[int]):
        b, c = tuple(int(x) for x in b), tuple(int(x) for x in c)
        if len(b) != len(c):
            raise InfeasibleArrayError(f"array needs len(b) == len(c), got {len(b)} and {len(c)}")
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)

    @property
    def diameter(self) -> int:
        return len(self.b)

    @property
    def k(self) -> int:
        return self.b[0]

    def a(self, i: int) -> int:
        """a_i = k - b_i - c_i with b_d = 0 and c_0 = 0."""
        bi = self.b[i] if i < self.diameter else 0
        ci = self.c[i - 1] if i > 0 else 0
        return self.k - bi - ci

    def to_json(self) -> dict:
        return {"b": list(self.b), "c": list(self.c)}

    @classmethod
    def from_json(cls, data: dict) -> IntersectionArray:
        return cls(data["b"], data["c"])

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.b)) + ";" + ",".join(map(str, self.c)) + "}"


@dataclass(frozen=True)
class SrgParameters:
    v: int
    k: int
    lam: int
    mu: int

    def counting_identity(self) -> bool:
        return self.k * (self.k - self.lam - 1) == (self.v - self.k - 1) * self.mu

    def to_json(self) -> dict:
        return {"v": self.v, "k": self.k, "lambda": self.lam, "mu": self.mu}


# ----------------------------------------------------------------------------
# named families


def complete(n: int) -> Graph:
    _need(n >= 1, "complete graph needs n >= 1")
    return Graph(n, itertools.combinations(range(n), 2))


def complete_bipartite(m: int, n: int) -> Graph:
    _need(m >= 1 and n >= 1, "complete bipartite graph needs m, n >= 1")
    return Graph(m + n, ((u, m + v) for u in range(m) for v in range(n)))


def cycle(q: int) -> Graph:
    _need(q >= 3, f"cycle needs q >= 3, got {q}")
    return Graph(q, ((i, (i + 1) % q) for i in range(q)))


def path(n: int) -> Graph:
    _need(n >= 1, "path needs n >= 1")
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def johnson(n: int, d: int) -> Graph:
    _need(1 <= d <= n - 1, f"Johnson graph needs 1 <= d <= n-1, got n={n}, d={d}")
    verts = list(itertools.combinations(range(n), d))
    index = {s: i for i, s in enumerate(verts)}
    edges = set()
    for s in verts:
        ss = set(s)
        for out in s:
            for new in range(n):
                if new in ss:
                    continue
                t = tuple(sorted(ss - {out} | {new}))
                a, b = index[s], index[t]
                if a < b:
                    edges.add((a, b))
    return Graph(len(verts), edges)


def kneser(n: int, d: int) -> Graph:
    _need(n >= 2 * d >= 2, f"Kneser graph needs n >= 2d >= 2, got n={n}, d={d}")
    verts = list(itertools.combinations(range(n), d))
    return Graph(len(verts), ((i, j) for i, j in itertools.combinations(range(len(verts)), 2)
                              if not set(verts[i]) & set(verts[j])))


def petersen() -> Graph:
    return kneser(5, 2)


def triangle_replaced(g: Graph) -> Graph:
    """Truncation: every vertex becomes a triangle, one corner per incident edge."""
    corner = {}
    for u, v in sorted(g.edges):
        for a, b in ((u, v), (v, u)):
            corner[(a, b)] = len(corner)
    edges = []
    for v in range(g.n):
        ends = [corner[(v, int(w))] for w in g.neighbours(v)]
        edges.extend(itertools.combinations(ends, 2))
    for u, v in g.edges:
        edges.append((corner[(u, v)], corner[(v, u)]))
    return Graph(len(corner), edges)


def triangle_replaced_petersen() -> Graph:
    return triangle_replaced(petersen())


def hamming(n: int, q: int) -> Graph:
    _need(n >= 1 and q >= 2, f"Hamming graph needs n >= 1, q >= 2, got n={n}, q={q}")
    return cartesian_power(complete(q), n)


def hypercube(n: int) -> Graph:
    return hamming(n, 2)


def theorem1_family(n: int) -> Graph:
    """K_{2,n} plus a pendant-like vertex 0 joined to both vertices of the 2-side.

    Vertex 0 is the distinguished vertex, 1 and 2 form the size-2 part and
    3..n+2 the size-n part.
    """
    _need(n >= 1, f"family needs n >= 1, got {n}")
    edges = [(0, 1), (0, 2)]
    edges += [(a, 3 + j) for a in (1, 2) for j in range(n)]
    return Graph(n + 3, edges)


NAMED_FAMILIES = {
    "complete": complete,
    "complete_bipartite": complete_bipartite,
    "cycle": cycle,
    "path": path,
    "petersen": petersen,
    "triangle_replaced_petersen": triangle_replaced_petersen,
    "hypercube": hypercube,
    "hamming": hamming,
    "johnson": johnson,
    "kneser": kneser,
    "theorem1_family": theorem1_family,
}


def build_named(family: str, *params: int) -> Graph:
    try:
        builder = NAMED_FAMILIES[family]
    except KeyError:
        raise GraphError(f"unknown family {family!r}; known: {', '.join(sorted(NAMED_FAMILIES))}") from None
    try:
        return builder(*(int(p) for p in params))
    except TypeError as exc:
        raise GraphError(f"{family}: wrong number of parameters ({exc})") from None


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise GraphError(msg)


# ----------------------------------------------------------------------------
# products


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Vertex (u, v) is numbered u * h.n + v."""
    if g.n == 0 or h.n == 0:
        raise GraphError("Cartesian product needs nonempty factors")
    nh = h.n
    edges = [(u * nh + a, u * nh + b) for u in range(g.n) for a, b in h.edges]
    edges += [(a * nh + v, b * nh + v) for a, b in g.edges for v in range(nh)]
    return Graph(g.n * nh, edges)


def cartesian_power(g: Graph, n: int) -> Graph:
    if n < 1:
        raise GraphError(f"power must be >= 1, got {n}")
    out = g
    for _ in range(n - 1):
        out = cartesian_product(out, g)
    return out


def power_vertex(g: Graph, x: int, n: int) -> int:
    """Index of the diagonal vertex (x, ..., x) in ``cartesian_power(g, n)``."""
    return x * sum(g.n ** j for j in range(n))


def complement(g: Graph) -> Graph:
    return Graph(g.n, (e for e in itertools.combinations(range(g.n), 2) if e not in g.edges))


# ----------------------------------------------------------------------------
# distance analysis


def _check_vertex(g: Graph, x: int) -> None:
    if not 0 <= x < g.n:
        raise GraphError(f"vertex {x} outside 0..{g.n - 1}")


def distance_profile(g: Graph, x: int) -> DistanceProfile:
    _check_vertex(g, x)
    indptr, indices = g.csr
    dist = kernels.bfs_distances(indptr, indices, x)
    if (dist < 0).any():
        v = int(np.argmax(dist < 0))
        raise DisconnectedGraphError(f"graph is disconnected: vertex {v} unreachable from {x}")
    counts = np.bincount(dist)
    return DistanceProfile(x, tuple(int(c) for c in counts))


def profile_polynomial(g: Graph, x: int) -> IntPolynomial:
    return distance_profile(g, x).polynomial()


def _all_profiles(g: Graph) -> list[tuple[int, ...]]:
    d = g.distances
    width = int(d.max()) + 1 if g.n else 1
    out = []
    for row in d:
        c = np.bincount(row, minlength=width)
        out.append(tuple(int(x) for x in np.trim_zeros(c, "b")))
    return out


def is_ddr(g: Graph) -> bool:
    profiles = _all_profiles(g)
    return all(p == profiles[0] for p in profiles)


def is_lc_at(g: Graph, x: int) -> Verdict:
    return is_log_concave(distance_profile(g, x).counts)


def is_lc_graph(g: Graph) -> tuple[Verdict, int | None]:
    """First vertex (by id) whose profile is log-concave, if any."""
    first_fail = None
    for x, prof in enumerate(_all_profiles(g)):
        v = is_log_concave(prof)
        if v.holds:
            return v, x
        if first_fail is None:
            first_fail = v
    return Verdict(False, first_fail.index if first_fail else None,
                   "no vertex has a log-concave profile"), None


def minimal_lc_power(g: Graph, x: int, n_max: int) -> int | None:
    """Smallest n <= n_max with G^n log-concave at (x,...,x), via polynomial powers."""
    if n_max < 1:
        raise GraphError(f"n_max must be >= 1, got {n_max}")
    base = profile_polynomial(g, x)
    p = base
    for n in range(1, n_max + 1):
        if n > 1:
            p = p * base
        if is_log_concave(p.coeffs).holds:
            return n
    return None


def power_scan(g: Graph, x: int, n_max: int) -> list[tuple[int, IntPolynomial, Verdict]]:
    base = profile_polynomial(g, x)
    rows = []
    p = base
    for n in range(1, n_max + 1):
        if n > 1:
            p = p * base
        rows.append((n, p, is_log_concave(p.coeffs)))
    return rows


def power_profile_crosscheck(g: Graph, x: int, n: int) -> bool:
    """Build G^n explicitly and compare its diagonal profile with f(t)^n."""
    if g.n ** n > POWER_CROSSCHECK_CAP:
        raise GraphError(f"explicit power has {g.n}^{n} vertices, above cap {POWER_CROSSCHECK_CAP}")
    gp = cartesian_power(g, n)
    explicit = profile_polynomial(gp, power_vertex(g, x, n))
    return explicit == poly_pow(profile_polynomial(g, x), n)


def is_distance_regular(g: Graph) -> IntersectionArray | None:
    d = g.distances
    if g.n == 1:
        return IntersectionArray((), ())
    diam = int(d.max())
    indptr, indices = g.csr
    ok, b, c, _, _ = kernels.intersection_counts(d, indptr, indices, diam)
    if not ok:
        return None
    return IntersectionArray([int(x) for x in b[:diam]], [int(x) for x in c[1:]])


def valencies_from_intersection_array(ia: IntersectionArray) -> tuple[int, ...]:
    if any(x <= 0 for x in ia.b + ia.c):
        raise InfeasibleArrayError(f"array {ia} has a nonpositive entry")
    vals = [1]
    for i in range(1, ia.diameter + 1):
        num = vals[-1] * ia.b[i - 1]
        if num % ia.c[i - 1]:
            raise InfeasibleArrayError(
                f"array {ia} is infeasible: v_{i} = {num}/{ia.c[i - 1]} is not an integer")
        vals.append(num // ia.c[i - 1])
    return tuple(vals)


def drg_lc_certificate(ia: IntersectionArray) -> dict:
    vals = valencies_from_intersection_array(ia)
    b_mono = all(ia.b[i] >= ia.b[i + 1] for i in range(len(ia.b) - 1))
    c_mono = all(ia.c[i] <= ia.c[i + 1] for i in range(len(ia.c) - 1))
    return {
        "b_monotone": b_mono,
        "c_monotone": c_mono,
        "valencies": vals,
        "lc": is_log_concave(vals),
    }


def srg_parameters(g: Graph) -> SrgParameters | None:
    try:
        ia = is_distance_regular(g)
    except DisconnectedGraphError:
        return None
    if ia is None or ia.diameter != 2:
        return None
    return SrgParameters(g.n, ia.k, ia.a(1), ia.c[1])


def srg_bounds(k: int) -> tuple[int, int]:
    """(k + 1 + ceil(sqrt k), k^2 + 1) for an SRG of degree k."""
    if k < 1:
        raise GraphError(f"degree must be >= 1, got {k}")
    ceil_sqrt = math.isqrt(k - 1) + 1
    return k + 1 + ceil_sqrt, k * k + 1


def srg_bounds_check(p: SrgParameters) -> Verdict:
    lo, hi = srg_bounds(p.k)
    if p.v < lo:
        return Verdict(False, None, f"v={p.v} below lower bound {lo}")
    if p.v > hi:
        return Verdict(False, None, f"v={p.v} above Moore bound {hi}")
    return Verdict(True, None, f"{lo} <= {p.v} <= {hi}")
