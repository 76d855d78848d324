import random
from math import comb, prod

import pytest
from hypothesis import given, settings, strategies as st

from lcverify import closed_forms as C
from lcverify.seq import is_log_concave, termwise_product


def _gauss_oracle(a, b, q):
    # count b-dimensional subspaces of GF(q)^a via the flag-counting quotient
    num = prod(q ** a - q ** i for i in range(b))
    den = prod(q ** b - q ** i for i in range(b))
    return num // den


def test_gaussian_binomial():
    assert C.gaussian_binomial(4, 2, 2) == 35
    assert C.gaussian_binomial(4, 1, 2) == 15
    for n in range(8):
        assert C.gaussian_binomial(n, 0, 3) == 1
    rng = random.Random(7)
    for _ in range(50):
        q = rng.choice([2, 3, 4, 5])
        a = rng.randint(0, 9)
        b = rng.randint(0, a)
        assert C.gaussian_binomial(a, b, q) == C.gaussian_binomial(a, a - b, q) == _gauss_oracle(a, b, q)
    assert C.gaussian_binomial(3, -1, 2) == 0 and C.gaussian_binomial(3, 4, 2) == 0
    with pytest.raises(C.FormulaError):
        C.gaussian_binomial(3, 1, 1)


def test_hamming():
    assert C.hamming_valencies(3, 2) == (1, 3, 3, 1)
    assert C.hamming_valencies(4, 3) == (1, 8, 24, 32, 16)
    for n in range(1, 21):
        for q in range(2, 6):
            assert is_log_concave(C.hamming_valencies(n, q)).holds
    with pytest.raises(C.FormulaError):
        C.hamming_valencies(0, 2)


def test_johnson():
    assert C.johnson_valencies(21, 3) == (1, 54, 459, 816)
    assert C.johnson_valencies(4, 2) == (1, 4, 1)
    assert C.johnson_multiplicities(21, 3) == (1, 20, 189, 1120)
    for n in range(2, 12):
        assert C.johnson_multiplicities(n, 1) == (1, n - 1)
    for n in range(2, 31):
        for d in range(1, n):
            if 2 * d < n + 1:
                assert is_log_concave(C.johnson_multiplicities(n, d)).holds, (n, d)
    with pytest.raises(C.FormulaError, match="1 <= d <= n-1"):
        C.johnson_valencies(5, 5)


def test_johnson_multiplicities_beyond_condition_may_fail():
    # past d = (n+1)/2 the difference form goes nonpositive, so the d < (n+1)/2 bound matters
    assert C.johnson_multiplicities(6, 4)[-1] == comb(6, 4) - comb(6, 3) < 0


def test_folded_and_odd():
    assert C.folded_johnson_multiplicities(4) == (1, 20, 14)
    assert C.folded_johnson_multiplicities(5) == (1, 35, 90)
    assert C.odd_graph_multiplicities(3) == (1, 5, 9, 5)
    assert C.odd_graph_multiplicities(2) == (1, 3, 2)
    for m in range(4, 21):
        assert is_log_concave(C.folded_johnson_multiplicities(m)).holds
    for m in range(2, 26):
        assert is_log_concave(C.odd_graph_multiplicities(m)).holds
    with pytest.raises(C.FormulaError):
        C.folded_johnson_multiplicities(3)


def test_grassmann():
    assert C.grassmann_multiplicities(4, 2, 2) == (1, 14, 20)
    for q in (2, 3, 4):
        for n in range(2, 13):
            for d in range(1, n):
                if 2 * d < n + 1:
                    seq = C.grassmann_multiplicities(n, d, q)
                    assert seq[0] == 1
                    assert is_log_concave(seq).holds, (n, d, q)


def test_symplectic():
    assert C.symplectic_valencies(3, 2) == (1, 7)
    assert C.symplectic_valencies(2, 2) == (1, 1)
    assert sum(C.symplectic_valencies(4, 2)) == 64
    # alternating 4x4 forms over GF(2): 28 of the 63 nonzero ones have rank 2, 35 rank 4
    assert C.symplectic_valencies(4, 2) == (1, 35, 28)
    for m in range(2, 7):
        for q in (2, 3):
            seq = C.symplectic_valencies(m, q)
            assert sum(seq) == q ** (m * (m - 1) // 2)
            assert is_log_concave(seq).holds


def _rank_counts(d, e, q):
    # brute-force rank distribution of d x e matrices over GF(q), q prime
    import itertools
    import numpy as np
    counts = [0] * (min(d, e) + 1)
    for flat in itertools.product(range(q), repeat=d * e):
        m = np.array(flat, dtype=int).reshape(d, e)
        r, rows = 0, m.copy()
        for col in range(e):
            piv = next((i for i in range(r, d) if rows[i, col] % q), None)
            if piv is None:
                continue
            rows[[r, piv]] = rows[[piv, r]]
            inv = pow(int(rows[r, col]), -1, q)
            rows[r] = rows[r] * inv % q
            for i in range(d):
                if i != r:
                    rows[i] = (rows[i] - rows[i, col] * rows[r]) % q
            r += 1
        counts[r] += 1
    return tuple(counts)


def test_bilinear():
    assert C.bilinear_valencies(2, 2, 2) == (1, 9, 6)
    for q in (2, 3, 5):
        assert C.bilinear_valencies(1, 1, q) == (1, q - 1)
    assert sum(C.bilinear_valencies(2, 3, 2)) == 64
    assert C.bilinear_valencies(2, 3, 2) == _rank_counts(2, 3, 2)
    assert C.bilinear_valencies(2, 2, 3) == _rank_counts(2, 2, 3)
    for d in range(1, 5):
        for e in range(1, 5):
            for q in (2, 3):
                seq = C.bilinear_valencies(d, e, q)
                assert sum(seq) == q ** (d * e) and is_log_concave(seq).holds


def test_evaluate_and_scan():
    row = C.evaluate("johnson", n=21, d=3)
    assert row["sequence"] == (1, 54, 459, 816) and row["sum_check"] is True and row["lc"].holds
    rows = C.lc_scan("johnson_mult", C.grid(n=range(2, 31), d=range(1, 15)),
                     where=lambda n, d: d <= n - 1 and d < (n + 1) / 2)
    assert rows and all(r["lc"].holds for r in rows)
    rows = C.lc_scan("hamming", C.grid(n=range(1, 8), q=range(2, 5)))
    assert len(rows) == 21 and all(r["lc"].holds and r["sum_check"] for r in rows)
    with pytest.raises(C.FormulaError, match="unknown family"):
        C.evaluate("nope")
    with pytest.raises(C.FormulaError, match="missing q"):
        C.evaluate("hamming", n=3)


def test_intersection_arrays():
    assert C.johnson_intersection_array(21, 3) == ([54, 34, 16], [1, 4, 9])
    assert C.hamming_intersection_array(3, 2) == ([3, 2, 1], [1, 2, 3])


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 30), st.integers(1, 30), st.integers(0, 10))
def test_termwise_product_of_lc(n1, n2, k):
    # binomial rows are LC; termwise products must stay LC
    a = [comb(n1, i) for i in range(k + 1)]
    b = [comb(n2, i) * 2 ** i for i in range(k + 1)]
    if all(a) and all(b):
        assert is_log_concave(termwise_product(a, b)).holds
