"""Symmetric association schemes: eigenmatrices, Krein parameters, Krein arrays.

Two arithmetic modes. ``exact``: every entry is a ``Fraction`` (used whenever all
eigenvalues are integers). ``float``: numpy floats with a relative tolerance.
The formulas below are written once and run in either mode.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np
from scipy.linalg import eigh_tridiagonal

from .graphs import Graph, IntersectionArray, valencies_from_intersection_array
from .seq import Verdict, is_log_concave

__all__ = [
    "SchemeSpectrum",
    "KreinTensor",
    "KreinArray",
    "SchemeResult",
    "SchemeError",
    "SchemeAxiomError",
    "DEFAULT_TOL",
    "characteristic_polynomial",
    "spectrum_from_intersection_array",
    "spectrum_from_eigenmatrix",
    "krein_parameters",
    "intersection_numbers",
    "krein_array",
    "find_q_polynomial_ordering",
    "property_M",
    "multiplicity_lc",
    "distance_relations",
    "scheme_from_relation_matrices",
    "self_duality_check",
    "spectra_agree",
]

DEFAULT_TOL = 1e-9
EXPLICIT_CAP = 500
DEFINITIONAL_KREIN_CAP = 200


class SchemeError(ValueError):
    pass


class SchemeAxiomError(SchemeError):
    pass


@dataclass(frozen=True)
class SchemeSpectrum:
    """Eigenmatrix data. Row i of P lists the eigenvalues of A_0..A_d on E_i."""

    n: int
    P: tuple
    Q: tuple
    m: tuple
    v: tuple
    mode: str = "exact"
    tol: float = DEFAULT_TOL

    @property
    def d(self) -> int:
        return len(self.v) - 1

    @property
    def theta(self) -> tuple:
        return tuple(row[1] for row in self.P) if self.d else (self.P[0][0],)

    def is_zero(self, x) -> bool:
        if self.mode == "exact":
            return x == 0
        return abs(x) <= self.tol * max(1, self.n)

    def close(self, a, b) -> bool:
        return self.is_zero(a - b)

    def integer_multiplicities(self) -> tuple[int, ...]:
        """Multiplicities as ints; float mode rounds, refusing values off an integer."""
        out = []
        for x in self.m:
            r = round(x)
            if not self.close(x, r):
                raise SchemeError(f"multiplicity {x} is not an integer within tolerance")
            out.append(int(r))
        return tuple(out)

    def to_json(self) -> dict:
        f = _fmt(self.mode)
        return {
            "mode": self.mode,
            "tolerance": None if self.mode == "exact" else self.tol,
            "n": self.n,
            "d": self.d,
            "theta": [f(x) for x in self.theta],
            "multiplicities": [f(x) for x in self.m],
            "valencies": [f(x) for x in self.v],
            "P": [[f(x) for x in row] for row in self.P],
            "Q": [[f(x) for x in row] for row in self.Q],
        }


@dataclass(frozen=True)
class KreinTensor:
    """``values[k][i][j]`` holds q^k_{ij}."""

    values: tuple
    spectrum: SchemeSpectrum

    @property
    def d(self) -> int:
        return len(self.values) - 1

    def q(self, i: int, j: int, k: int):
        return self.values[k][i][j]

    def minimum(self):
        return min(x for plane in self.values for row in plane for x in row)

    def zero_mask(self) -> np.ndarray:
        d1 = self.d + 1
        z = np.zeros((d1, d1, d1), dtype=bool)
        for k in range(d1):
            for i in range(d1):
                for j in range(d1):
                    z[k, i, j] = self.spectrum.is_zero(self.values[k][i][j])
        return z


@dataclass(frozen=True)
class KreinArray:
    bstar: tuple
    cstar: tuple
    mode: str = "exact"

    def to_json(self) -> dict:
        f = _fmt(self.mode)
        return {"bstar": [f(x) for x in self.bstar], "cstar": [f(x) for x in self.cstar]}

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.bstar)) + ";" + ",".join(map(str, self.cstar)) + "}"


@dataclass(frozen=True)
class MonotoneVerdict(Verdict):
    side: str | None = None


def _fmt(mode: str):
    if mode == "exact":
        return lambda x: f"{Fraction(x).numerator}/{Fraction(x).denominator}"
    return lambda x: float(f"{float(x):.12g}")


# ----------------------------------------------------------------------------
# P-polynomial route


def characteristic_polynomial(ia: IntersectionArray) -> list[int]:
    """det(xI - L) for the tridiagonal intersection matrix L, low degree first."""
    d = ia.diameter
    prev, cur = [1], [-ia.a(0), 1]
    for j in range(1, d + 1):
        # f_{j+1} = (x - a_j) f_j - b_{j-1} c_j f_{j-1}
        nxt = [0] * (len(cur) + 1)
        for e, c in enumerate(cur):
            nxt[e + 1] += c
            nxt[e] -= ia.a(j) * c
        w = ia.b[j - 1] * ia.c[j - 1]
        for e, c in enumerate(prev):
            nxt[e] -= w * c
        prev, cur = cur, nxt
    return cur


def _integer_roots(coeffs: list[int], bound: int) -> list[int]:
    def ev(x):
        acc = 0
        for c in reversed(coeffs):
            acc = acc * x + c
        return acc

    return [x for x in range(-bound, bound + 1) if ev(x) == 0]


def spectrum_from_eigenmatrix(P, n: int, mode: str = "exact", tol: float = DEFAULT_TOL) -> SchemeSpectrum:
    d1 = len(P)
    v = tuple(P[0])
    m = []
    for i in range(d1):
        s = sum(P[i][j] * P[i][j] / v[j] for j in range(d1))
        m.append(n / s)
    Q = tuple(tuple(m[j] * P[j][i] / v[i] for j in range(d1)) for i in range(d1))
    return SchemeSpectrum(n, tuple(tuple(r) for r in P), Q, tuple(m), v, mode, tol)


def spectrum_from_intersection_array(ia: IntersectionArray, tol: float = DEFAULT_TOL) -> SchemeSpectrum:
    vals = valencies_from_intersection_array(ia)
    d = ia.diameter
    n = sum(vals)
    roots = _integer_roots(characteristic_polynomial(ia), ia.k)
    if len(roots) == d + 1:
        mode = "exact"
        theta = [Fraction(x) for x in sorted(roots, reverse=True)]
        one = Fraction(1)
    else:
        mode = "float"
        diag = np.array([ia.a(j) for j in range(d + 1)], dtype=float)
        off = np.sqrt(np.array([ia.b[j] * ia.c[j] for j in range(d)], dtype=float))
        try:
            ev = eigh_tridiagonal(diag, off, eigvals_only=True)
        except Exception as exc:  # LinAlgError and friends
            raise SchemeError(f"tridiagonal eigensolver failed for {ia}: {exc}") from exc
        theta = sorted((float(x) for x in ev), reverse=True)
        if abs(theta[0] - ia.k) > tol * max(1, ia.k):
            raise SchemeError(f"largest eigenvalue {theta[0]} differs from k={ia.k}")
        theta[0] = float(ia.k)
        one = 1.0
    P = []
    for t in theta:
        row = [one, t]
        for j in range(1, d):
            # c_{j+1} v_{j+1}(t) = (t - a_j) v_j(t) - b_{j-1} v_{j-1}(t)
            row.append(((t - ia.a(j)) * row[j] - ia.b[j - 1] * row[j - 1]) / ia.c[j])
        P.append(row[: d + 1])
    return spectrum_from_eigenmatrix(P, n, mode, tol)


# ----------------------------------------------------------------------------
# structure constants


def krein_parameters(spec: SchemeSpectrum) -> KreinTensor:
    P, m, v, n = spec.P, spec.m, spec.v, spec.n
    d1 = spec.d + 1
    w = [1 / (v[l] * v[l]) for l in range(d1)] if spec.mode == "float" else [Fraction(1, v[l] * v[l]) for l in range(d1)]
    vals = []
    for k in range(d1):
        plane = []
        for i in range(d1):
            row = []
            for j in range(d1):
                s = sum(P[i][l] * P[j][l] * P[k][l] * w[l] for l in range(d1))
                row.append(m[i] * m[j] * s / n)
            plane.append(tuple(row))
        vals.append(tuple(plane))
    return KreinTensor(tuple(vals), spec)


def intersection_numbers(spec: SchemeSpectrum) -> tuple:
    """``out[k][i][j]`` = p^k_{ij}, computed from the eigenmatrix."""
    P, m, v, n = spec.P, spec.m, spec.v, spec.n
    d1 = spec.d + 1
    out = []
    for k in range(d1):
        plane = []
        for i in range(d1):
            plane.append(tuple(sum(m[l] * P[l][i] * P[l][j] * P[l][k] for l in range(d1)) / (n * v[k])
                               for j in range(d1)))
        out.append(tuple(plane))
    return tuple(out)


def _full(ordering: Sequence[int] | None, d: int) -> tuple[int, ...]:
    if ordering is None:
        return tuple(range(d + 1))
    ordering = tuple(int(x) for x in ordering)
    if sorted(ordering) != list(range(1, d + 1)):
        raise SchemeError(f"ordering must be a permutation of 1..{d}, got {ordering}")
    return (0,) + ordering


def krein_array(kt: KreinTensor, ordering: Sequence[int] | None = None) -> KreinArray:
    """b*_i = q^i_{1,i+1}, c*_i = q^i_{1,i-1}, indices read through ``ordering``."""
    f = _full(ordering, kt.d)
    d = kt.d
    bstar = tuple(kt.q(f[1], f[i + 1], f[i]) for i in range(d))
    cstar = tuple(kt.q(f[1], f[i - 1], f[i]) for i in range(1, d + 1))
    return KreinArray(bstar, cstar, kt.spectrum.mode)


def find_q_polynomial_ordering(kt: KreinTensor, max_classes: int = 8) -> tuple[int, ...] | None:
    """Lexicographically first ordering under which q^k_{ij} vanishes off the triangle pattern."""
    d = kt.d
    if d > max_classes:
        raise SchemeError(f"ordering search limited to d <= {max_classes}, got d={d}")
    zero = kt.zero_mask()

    def ok(f, t):
        # E_1 o E_{t-1} must reach E_t, i.e. q^t_{1,t-1} != 0
        if t >= 2 and zero[f[t], f[1], f[t - 1]]:
            return False
        # all triples that involve position t and earlier positions
        for i in range(t + 1):
            for j in range(t + 1):
                for k in range(t + 1):
                    if t not in (i, j, k):
                        continue
                    if (abs(i - j) > k or k > i + j) and not zero[f[k], f[i], f[j]]:
                        return False
        return True

    def search(f, left):
        if not left:
            return f
        for x in sorted(left):
            g = f + (x,)
            if ok(g, len(g) - 1):
                found = search(g, left - {x})
                if found is not None:
                    return found
        return None

    found = search((0,), frozenset(range(1, d + 1)))
    return None if found is None else found[1:]


def property_M(ka: KreinArray) -> MonotoneVerdict:
    b, c = ka.bstar, ka.cstar
    for i in range(len(b) - 1):
        if b[i] < b[i + 1]:
            return MonotoneVerdict(False, i, f"b*_{i} = {b[i]} < b*_{i + 1} = {b[i + 1]}", "b")
    for i in range(len(c) - 1):
        if c[i] > c[i + 1]:
            return MonotoneVerdict(False, i + 1, f"c*_{i + 1} = {c[i]} > c*_{i + 2} = {c[i + 1]}", "c")
    return MonotoneVerdict(True)


def multiplicity_lc(spec: SchemeSpectrum, ordering: Sequence[int] | None = None,
                    kt: KreinTensor | None = None) -> dict:
    """LC verdict on the ordered multiplicities plus the ratio trace m_i/m_{i-1} = b*_{i-1}/c*_i."""
    kt = kt or krein_parameters(spec)
    f = _full(ordering, spec.d)
    ka = krein_array(kt, f[1:] if spec.d else None)
    m = [spec.m[x] for x in f]
    if spec.mode == "exact":
        ms = m
    else:
        ints = spec.integer_multiplicities()
        ms = [ints[x] for x in f]
    trace = []
    for i in range(1, spec.d + 1):
        lhs = m[i] / m[i - 1]
        if spec.is_zero(ka.cstar[i - 1]):
            trace.append({"i": i, "m_ratio": lhs, "krein_ratio": None, "agree": False})
            continue
        rhs = ka.bstar[i - 1] / ka.cstar[i - 1]
        trace.append({"i": i, "m_ratio": lhs, "krein_ratio": rhs, "agree": spec.close(lhs, rhs)})
    return {
        "multiplicities": tuple(ms),
        "lc": is_log_concave(ms),
        "ratios": trace,
        "ratio_identity": all(t["agree"] for t in trace),
        "krein_array": ka,
    }


def self_duality_check(spec: SchemeSpectrum, kt: KreinTensor | None = None) -> Verdict:
    for i in range(spec.d + 1):
        for j in range(spec.d + 1):
            if not spec.close(spec.P[i][j], spec.Q[i][j]):
                return Verdict(False, i, f"P[{i}][{j}] = {spec.P[i][j]} != Q[{i}][{j}] = {spec.Q[i][j]}")
    kt = kt or krein_parameters(spec)
    p = intersection_numbers(spec)
    d1 = spec.d + 1
    for k in range(d1):
        for i in range(d1):
            for j in range(d1):
                if not spec.close(kt.values[k][i][j], p[k][i][j]):
                    return Verdict(False, k, f"q^{k}_{i}{j} != p^{k}_{i}{j}")
    return Verdict(True)


def spectra_agree(a: SchemeSpectrum, b: SchemeSpectrum) -> bool:
    if a.d != b.d or a.n != b.n:
        return False
    tol = max(a.tol, b.tol) * max(1, a.n)
    for x, y in zip((a.P, a.Q), (b.P, b.Q)):
        for rx, ry in zip(x, y):
            if any(abs(float(p) - float(q)) > tol for p, q in zip(rx, ry)):
                return False
    return all(abs(float(p) - float(q)) <= tol for p, q in zip(a.m, b.m))


# ----------------------------------------------------------------------------
# explicit relation matrices


def distance_relations(g: Graph) -> list[np.ndarray]:
    d = g.distances
    return [(d == i).astype(np.int64) for i in range(int(d.max()) + 1)]


@dataclass(frozen=True)
class SchemeResult:
    spectrum: SchemeSpectrum
    krein: KreinTensor
    intersection: tuple  # p^k_{ij} as ints, [k][i][j]
    krein_crosscheck: float | None = None


def _check_axioms(rels: Sequence[np.ndarray]) -> list[list[list[int]]]:
    if not rels:
        raise SchemeAxiomError("no relation matrices given")
    n = rels[0].shape[0]
    for i, a in enumerate(rels):
        if a.shape != (n, n):
            raise SchemeAxiomError(f"A_{i} has shape {a.shape}, expected ({n}, {n})")
        if not np.isin(a, (0, 1)).all():
            raise SchemeAxiomError(f"A_{i} is not a 0/1 matrix")
    if not (rels[0] == np.eye(n, dtype=rels[0].dtype)).all():
        raise SchemeAxiomError("axiom (1) fails: A_0 is not the identity")
    for i, a in enumerate(rels):
        if not (a == a.T).all():
            u, v = np.argwhere(a != a.T)[0]
            raise SchemeAxiomError(f"axiom (2) fails: A_{i} not symmetric at ({u},{v})")
    total = sum(rels)
    if not (total == 1).all():
        u, v = np.argwhere(total != 1)[0]
        raise SchemeAxiomError(f"relations do not partition X x X: entry ({u},{v}) covered {total[u, v]} times")
    d1 = len(rels)
    reps = [tuple(np.argwhere(a == 1)[0]) for a in rels]
    p = [[[0] * d1 for _ in range(d1)] for _ in range(d1)]
    for i in range(d1):
        for j in range(d1):
            prod = rels[i] @ rels[j]
            for k in range(d1):
                vals = prod[rels[k] == 1]
                if (vals != vals[0]).any():
                    raise SchemeAxiomError(
                        f"axiom (3) fails: A_{i}A_{j} is not constant on relation {k}")
                p[k][i][j] = int(prod[reps[k]])
    return p


def scheme_from_relation_matrices(rels: Sequence, tol: float = DEFAULT_TOL, seed: int = 12345) -> SchemeResult:
    rels = [np.asarray(a, dtype=np.int64) for a in rels]
    n = rels[0].shape[0] if rels else 0
    if n > EXPLICIT_CAP:
        raise SchemeError(f"explicit schemes limited to {EXPLICIT_CAP} points, got {n}")
    p = _check_axioms(rels)
    d1 = len(rels)
    v = [int(a[0].sum()) for a in rels]

    # common eigenspaces from a generic combination of the relations
    rng = np.random.default_rng(seed)
    coef = rng.uniform(1.0, 2.0, size=d1)
    mix = sum(c * a for c, a in zip(coef, rels)).astype(float)
    w, vecs = np.linalg.eigh(mix)
    gap = 1e-6 * max(1.0, float(np.abs(w).max()))
    cuts = np.flatnonzero(np.diff(w) > gap) + 1
    groups = np.split(np.arange(n), cuts)
    if len(groups) != d1:
        raise SchemeError(f"eigenspace separation failed: found {len(groups)} eigenspaces, expected {d1}")
    rows = []
    bases = []
    for g in groups:
        basis = vecs[:, g]
        rows.append([float(np.trace(basis.T @ a @ basis)) / len(g) for a in rels])
        bases.append(basis)
    # E_0 carries the valencies; the rest descend by eigenvalue of A_1, A_2, ...
    order = sorted(range(d1), key=lambda i: (not np.allclose(rows[i], v), [-x for x in rows[i][1:]]))
    rows = [rows[i] for i in order]
    bases = [bases[i] for i in order]
    flat = np.array(rows)
    if np.all(np.abs(flat - np.round(flat)) <= tol * max(1, n)):
        P = [[Fraction(int(round(x))) for x in r] for r in rows]
        spec = spectrum_from_eigenmatrix(P, n, "exact", tol)
    else:
        spec = spectrum_from_eigenmatrix(rows, n, "float", tol)
    for i, b in enumerate(bases):
        if not spec.close(spec.m[i], b.shape[1]):
            raise SchemeError(f"multiplicity of E_{i}: formula gives {spec.m[i]}, eigenspace has {b.shape[1]}")
    kt = krein_parameters(spec)
    dev = None
    if n <= DEFINITIONAL_KREIN_CAP:
        dev = _definitional_krein_deviation(bases, kt, n)
        if dev > tol * max(1, n) * 10:
            raise SchemeError(f"Krein parameters disagree with idempotent expansion (max deviation {dev:.3g})")
    return SchemeResult(spec, kt, tuple(tuple(tuple(r) for r in plane) for plane in p), dev)


def _definitional_krein_deviation(bases: list[np.ndarray], kt: KreinTensor, n: int) -> float:
    """Expand E_i o E_j over the idempotents: q^k_ij = n tr((E_i o E_j) E_k) / m_k."""
    E = [b @ b.T for b in bases]
    worst = 0.0
    for i in range(len(E)):
        for j in range(i, len(E)):
            had = E[i] * E[j]
            for k, ek in enumerate(E):
                val = n * float(np.sum(had * ek)) / bases[k].shape[1]
                worst = max(worst, abs(val - float(kt.q(i, j, k))))
    return worst
