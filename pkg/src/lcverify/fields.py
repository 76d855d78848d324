"""Small finite fields GF(p^m) as dense lookup tables.

Element codes are integers 0..q-1; code sum_i c_i p^i stands for the
polynomial sum_i c_i x^i reduced modulo the defining polynomial.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field

import numpy as np

__all__ = ["FiniteField", "FieldError", "field", "gf", "DEFAULT_MODULI"]

# monic irreducibles, coefficients low degree first
DEFAULT_MODULI = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (2, 6): (1, 1, 0, 0, 0, 0, 1),
    (3, 2): (1, 0, 1),
    (3, 3): (1, 2, 0, 1),
    (5, 2): (2, 0, 1),
    (7, 2): (1, 0, 1),
}


class FieldError(ValueError):
    pass


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, int(p ** 0.5) + 1))


def _poly_mod(a: list[int], mod: tuple[int, ...], p: int) -> list[int]:
    a = [x % p for x in a]
    m = len(mod) - 1
    inv_lead = pow(mod[-1], p - 2, p)
    while len(a) > m:
        coef = a[-1] * inv_lead % p
        if coef:
            shift = len(a) - 1 - m
            for i, c in enumerate(mod):
                a[shift + i] = (a[shift + i] - coef * c) % p
        a.pop()
    return a + [0] * (m - len(a))


def _is_irreducible(mod: tuple[int, ...], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..m//2."""
    m = len(mod) - 1
    for deg in range(1, m // 2 + 1):
        for low in itertools.product(range(p), repeat=deg):
            divisor = tuple(low) + (1,)
            if not any(_poly_mod(list(mod), divisor, p)):
                return False
    return True


@dataclass(frozen=True, eq=False)
class FiniteField:
    p: int
    m: int
    modulus: tuple[int, ...] | None
    add: np.ndarray = dc_field(repr=False)
    sub: np.ndarray = dc_field(repr=False)
    mul: np.ndarray = dc_field(repr=False)
    neg: np.ndarray = dc_field(repr=False)
    inv: np.ndarray = dc_field(repr=False)

    @property
    def q(self) -> int:
        return self.p ** self.m

    def __eq__(self, other):
        return isinstance(other, FiniteField) and (self.p, self.m, self.modulus) == (other.p, other.m, other.modulus)

    def __hash__(self):
        return hash((self.p, self.m, self.modulus))

    def __repr__(self):
        return f"GF({self.q})"


def field(p: int, m: int = 1, modulus=None) -> FiniteField:
    if not _is_prime(p):
        raise FieldError(f"characteristic {p} is not prime")
    if m < 1:
        raise FieldError(f"extension degree must be >= 1, got {m}")
    q = p ** m
    if m == 1:
        mod = None
        els = np.arange(p)
        add = (els[:, None] + els[None, :]) % p
        mul = (els[:, None] * els[None, :]) % p
    else:
        if modulus is None:
            if (p, m) not in DEFAULT_MODULI:
                raise FieldError(f"no built-in modulus for GF({p}^{m}); pass one explicitly")
            modulus = DEFAULT_MODULI[(p, m)]
        mod = tuple(int(c) % p for c in modulus)
        if len(mod) != m + 1 or mod[-1] != 1:
            raise FieldError(f"modulus {modulus} must be monic of degree {m}")
        if not _is_irreducible(mod, p):
            raise FieldError(f"modulus {modulus} is reducible over GF({p})")
        digits = [[(e // p ** i) % p for i in range(m)] for e in range(q)]
        place = [p ** i for i in range(m)]

        def code(v):
            return sum(c * w for c, w in zip(v, place))

        add = np.array([[code([(x + y) % p for x, y in zip(a, b)]) for b in digits] for a in digits])
        mul = np.empty((q, q), dtype=np.int64)
        for i, a in enumerate(digits):
            for j, b in enumerate(digits):
                prod = [0] * (2 * m - 1)
                for s, x in enumerate(a):
                    for t, y in enumerate(b):
                        prod[s + t] += x * y
                mul[i, j] = code(_poly_mod(prod, mod, p))
    add = np.asarray(add, dtype=np.int64)
    mul = np.asarray(mul, dtype=np.int64)
    neg = np.argmin(add, axis=1).astype(np.int64)  # add[a, neg[a]] == 0
    sub = add[:, neg]
    inv = np.zeros(q, dtype=np.int64)
    for a in range(1, q):
        inv[a] = int(np.flatnonzero(mul[a] == 1)[0])
    return FiniteField(p, m, mod, add, sub, mul, neg, inv)


def gf(q: int, modulus=None) -> FiniteField:
    """Field of order q (prime or prime power)."""
    for p in range(2, q + 1):
        if q % p == 0:
            break
    else:
        raise FieldError(f"no field of order {q}")
    m, r = 0, q
    while r % p == 0:
        r //= p
        m += 1
    if r != 1:
        raise FieldError(f"{q} is not a prime power")
    return field(p, m, modulus)
