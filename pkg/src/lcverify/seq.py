"""Exact sequences, integer polynomials and log-concavity tests.

Everything here works on ``fractions.Fraction`` and Python ints, so every
comparison is an exact big-integer cross multiplication.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

__all__ = [
    "Verdict",
    "IntPolynomial",
    "rat",
    "rat_sequence",
    "is_log_concave",
    "is_unimodal",
    "poly_mul",
    "poly_pow",
    "coefficients_as_sequence",
    "termwise_product",
    "sequence_to_json",
    "sequence_from_json",
]


@dataclass(frozen=True)
class Verdict:
    """Outcome of a check. ``index`` locates the first violation when it fails."""

    holds: bool
    index: int | None = None
    detail: str | None = None

    def __bool__(self) -> bool:
        return self.holds

    def to_json(self) -> dict:
        out = {"holds": self.holds, "index": self.index}
        if self.detail is not None:
            out["detail"] = self.detail
        return out


def rat(x) -> Fraction:
    """Coerce ints, Fractions and "num/den" strings to a Fraction.

    Floats are refused: they would silently break exactness.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not sequence terms")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot use {type(x).__name__} {x!r} as an exact rational")


def rat_sequence(terms: Iterable) -> tuple[Fraction, ...]:
    seq = tuple(rat(t) for t in terms)
    if not seq:
        raise ValueError("sequence must be nonempty")
    return seq


def is_log_concave(seq: Sequence) -> Verdict:
    """s_i^2 >= s_{i-1} s_{i+1} at every internal index; reports the smallest failure."""
    s = rat_sequence(seq)
    for i in range(1, len(s) - 1):
        a, b, c = s[i - 1], s[i], s[i + 1]
        # cross-multiplied over the common denominator, all integers
        lhs = b.numerator * b.numerator * a.denominator * c.denominator
        rhs = a.numerator * c.numerator * b.denominator * b.denominator
        if lhs < rhs:
            return Verdict(False, i, f"{b}^2 < {a}*{c}")
    return Verdict(True)


def is_unimodal(seq: Sequence) -> Verdict:
    s = rat_sequence(seq)
    i = 0
    while i + 1 < len(s) and s[i] <= s[i + 1]:
        i += 1
    peak = i
    while i + 1 < len(s) and s[i] >= s[i + 1]:
        i += 1
    if i == len(s) - 1:
        return Verdict(True, None, f"peak at {peak}")
    return Verdict(False, i + 1, f"rises again after descending from index {peak}")


@dataclass(frozen=True)
class IntPolynomial:
    """Polynomial in t with big-integer coefficients, ``coeffs[i]`` multiplies t^i."""

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int]):
        c = [int(x) for x in coeffs]
        while len(c) > 1 and c[-1] == 0:
            c.pop()
        if not c:
            c = [0]
        object.__setattr__(self, "coeffs", tuple(c))

    @property
    def degree(self) -> int:
        return -1 if self.is_zero() else len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return self.coeffs == (0,)

    def __mul__(self, other: IntPolynomial) -> IntPolynomial:
        return poly_mul(self, other)

    def __pow__(self, n: int) -> IntPolynomial:
        return poly_pow(self, n)

    def __call__(self, t):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0 and not self.is_zero():
                continue
            terms.append(str(c) if i == 0 else f"{c}*t^{i}")
        return " + ".join(terms)

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence) -> IntPolynomial:
        return cls(int(x) for x in data)


def poly_mul(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    if p.is_zero() or q.is_zero():
        return IntPolynomial([0])
    out = [0] * (len(p.coeffs) + len(q.coeffs) - 1)
    for i, a in enumerate(p.coeffs):
        if a == 0:
            continue
        for j, b in enumerate(q.coeffs):
            out[i + j] += a * b
    return IntPolynomial(out)


def poly_pow(p: IntPolynomial, n: int) -> IntPolynomial:
    if n < 1:
        raise ValueError(f"power must be >= 1, got {n}")
    result = None
    base = p
    while n:
        if n & 1:
            result = base if result is None else poly_mul(result, base)
        n >>= 1
        if n:
            base = poly_mul(base, base)
    return result


def coefficients_as_sequence(p: IntPolynomial) -> tuple[Fraction, ...]:
    return tuple(Fraction(c) for c in p.coeffs)


def termwise_product(a: Sequence, b: Sequence) -> tuple[Fraction, ...]:
    a, b = rat_sequence(a), rat_sequence(b)
    if len(a) != len(b):
        raise ValueError(f"length mismatch {len(a)} != {len(b)}")
    return tuple(x * y for x, y in zip(a, b))


def fmt_rat(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def sequence_to_json(seq: Sequence) -> list[str]:
    return [fmt_rat(x) for x in rat_sequence(seq)]


def sequence_from_json(data: Sequence) -> tuple[Fraction, ...]:
    return rat_sequence(data)
