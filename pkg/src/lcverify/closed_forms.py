"""Closed-form valency and multiplicity families, evaluated with exact integers."""
from __future__ import annotations

import itertools
from fractions import Fraction
from math import comb, prod
from typing import Callable, Iterable

from .seq import Verdict, is_log_concave

__all__ = [
    "FormulaError",
    "binom",
    "gaussian_binomial",
    "hamming_valencies",
    "johnson_valencies",
    "johnson_multiplicities",
    "folded_johnson_multiplicities",
    "odd_graph_multiplicities",
    "grassmann_multiplicities",
    "symplectic_valencies",
    "bilinear_valencies",
    "FAMILIES",
    "evaluate",
    "lc_scan",
    "johnson_intersection_array",
    "hamming_intersection_array",
    "grid",
]


class FormulaError(ValueError):
    pass


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise FormulaError(msg)


def binom(n: int, k: int) -> int:
    """C(n, k), zero outside 0 <= k <= n (so C(n, -1) = 0)."""
    return comb(n, k) if 0 <= k <= n else 0


def gaussian_binomial(a: int, b: int, q: int) -> int:
    """[a, b]_q; returns 0 for b < 0 or b > a, matching ``binom``."""
    if q < 2:
        raise FormulaError(f"Gaussian binomial needs q >= 2, got {q}")
    if b < 0 or b > a:
        return 0
    num = prod(q ** (a - i) - 1 for i in range(b))
    den = prod(q ** (i + 1) - 1 for i in range(b))
    out, rem = divmod(num, den)
    assert rem == 0
    return out


def hamming_valencies(n: int, q: int) -> tuple[int, ...]:
    _need(n >= 1 and q >= 2, f"H(n,q) needs n >= 1, q >= 2, got n={n}, q={q}")
    seq = tuple(binom(n, i) * (q - 1) ** i for i in range(n + 1))
    _need(sum(seq) == q ** n, "Hamming valencies do not sum to q^n")
    return seq


def johnson_valencies(n: int, d: int) -> tuple[int, ...]:
    _need(1 <= d <= n - 1, f"J(n,d) needs 1 <= d <= n-1, got n={n}, d={d}")
    top = min(d, n - d)
    seq = tuple(binom(d, i) * binom(n - d, i) for i in range(top + 1))
    _need(sum(seq) == binom(n, d), "Johnson valencies do not sum to C(n,d)")
    return seq


def johnson_multiplicities(n: int, d: int) -> tuple[int, ...]:
    _need(1 <= d <= n - 1, f"J(n,d) needs 1 <= d <= n-1, got n={n}, d={d}")
    diff = tuple(binom(n, i) - binom(n, i - 1) for i in range(d + 1))
    factored = tuple(Fraction(n - 2 * i + 1, n - i + 1) * binom(n, i) for i in range(d + 1))
    _need(all(Fraction(a) == b for a, b in zip(diff, factored)),
          f"difference and factored forms disagree for J({n},{d})")
    return diff


def folded_johnson_multiplicities(m: int) -> tuple[int, ...]:
    _need(m >= 4, f"folded Johnson J(2m,m) needs m >= 4, got {m}")
    return tuple(binom(2 * m, 2 * i) - binom(2 * m, 2 * i - 1) for i in range(m // 2 + 1))


def odd_graph_multiplicities(m: int) -> tuple[int, ...]:
    _need(m >= 2, f"Odd graph O_(m+1) needs m >= 2, got {m}")
    return tuple(binom(2 * m, i) - binom(2 * m, i - 1) for i in range(m + 1))


def grassmann_multiplicities(n: int, d: int, q: int) -> tuple[int, ...]:
    _need(1 <= d <= n - 1 and q >= 2, f"Gr(n,d) needs 1 <= d <= n-1, q >= 2, got n={n}, d={d}, q={q}")
    diff = tuple(gaussian_binomial(n, i, q) - gaussian_binomial(n, i - 1, q) for i in range(d + 1))
    factored = tuple((1 - Fraction(q ** i - 1, q ** (n - i + 1) - 1)) * gaussian_binomial(n, i, q)
                     for i in range(d + 1))
    _need(all(Fraction(a) == b for a, b in zip(diff, factored)),
          f"difference and factored forms disagree for Gr({n},{d}) over GF({q})")
    return diff


def symplectic_valencies(m: int, q: int) -> tuple[int, ...]:
    _need(m >= 2 and q >= 2, f"S(m,q) needs m >= 2, q >= 2, got m={m}, q={q}")
    seq = []
    for j in range(m // 2 + 1):
        num = q ** (j * (j - 1)) * prod(q ** (m - i) - 1 for i in range(2 * j))
        den = prod(q ** (2 * i) - 1 for i in range(1, j + 1))
        v, rem = divmod(num, den)
        _need(rem == 0, f"S({m},{q}) valency v_{j} = {num}/{den} is not an integer")
        seq.append(v)
    total = q ** (m * (m - 1) // 2)
    _need(sum(seq) == total, f"S({m},{q}) valencies sum to {sum(seq)}, expected {total}")
    return tuple(seq)


def bilinear_valencies(d: int, e: int, q: int) -> tuple[int, ...]:
    _need(d >= 1 and e >= 1 and q >= 2, f"B(d,e,q) needs d, e >= 1, q >= 2, got {d},{e},{q}")
    seq = tuple(gaussian_binomial(d, d - j, q) * gaussian_binomial(e, e - j, q)
                * prod(q ** j - q ** i for i in range(j))
                for j in range(min(d, e) + 1))
    _need(sum(seq) == q ** (d * e), f"B({d},{e},{q}) valencies do not sum to q^(de)")
    return seq


def johnson_intersection_array(n: int, d: int) -> tuple[list[int], list[int]]:
    """(b, c) with b_i = (d-i)(n-d-i), c_i = i^2; diameter min(d, n-d)."""
    top = min(d, n - d)
    return [(d - i) * (n - d - i) for i in range(top)], [i * i for i in range(1, top + 1)]


def hamming_intersection_array(n: int, q: int) -> tuple[list[int], list[int]]:
    return [(n - i) * (q - 1) for i in range(n)], list(range(1, n + 1))


# name -> (function, parameter names, sum identity or None)
FAMILIES: dict[str, tuple[Callable, tuple[str, ...], Callable | None]] = {
    "hamming": (hamming_valencies, ("n", "q"), lambda n, q: q ** n),
    "johnson": (johnson_valencies, ("n", "d"), lambda n, d: binom(n, d)),
    "johnson_mult": (johnson_multiplicities, ("n", "d"), None),
    "folded_johnson_mult": (folded_johnson_multiplicities, ("m",), None),
    "odd_mult": (odd_graph_multiplicities, ("m",), None),
    "grassmann_mult": (grassmann_multiplicities, ("n", "d", "q"), None),
    "symplectic": (symplectic_valencies, ("m", "q"), lambda m, q: q ** (m * (m - 1) // 2)),
    "bilinear": (bilinear_valencies, ("d", "e", "q"), lambda d, e, q: q ** (d * e)),
}


def evaluate(family: str, **params: int) -> dict:
    try:
        fn, names, total = FAMILIES[family]
    except KeyError:
        raise FormulaError(f"unknown family {family!r}; known: {', '.join(FAMILIES)}") from None
    missing = [p for p in names if p not in params]
    if missing:
        raise FormulaError(f"{family} needs parameters {', '.join(names)}; missing {', '.join(missing)}")
    args = [int(params[p]) for p in names]
    seq = fn(*args)
    return {
        "family": family,
        "params": dict(zip(names, args)),
        "sequence": seq,
        "lc": is_log_concave(seq),
        "sum_check": None if total is None else sum(seq) == total(*args),
    }


def lc_scan(family: str, grid: Iterable[dict], where: Callable[..., bool] | None = None) -> list[dict]:
    """Evaluate ``family`` on each parameter dict (optionally filtered by ``where``)."""
    rows = []
    for params in grid:
        if where is not None and not where(**params):
            continue
        rows.append(evaluate(family, **params))
    return rows


def grid(**ranges: Iterable[int]) -> list[dict]:
    keys = list(ranges)
    return [dict(zip(keys, vals)) for vals in itertools.product(*(ranges[k] for k in keys))]
