import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lcverify.seq import (
    IntPolynomial,
    coefficients_as_sequence,
    is_log_concave,
    is_unimodal,
    poly_mul,
    poly_pow,
    rat,
    sequence_from_json,
    sequence_to_json,
    termwise_product,
)
from oracles import convolve, is_lc


@pytest.mark.parametrize("seq, holds, index", [
    ((1, 2, 5), False, 1),
    ((1, 3, 4, 6), False, 2),
    ((1, 7), True, None),
    ((1, 20, 189, 1120), True, None),
    ((5,), True, None),
    ((1, 0, 1), False, 1),
])
def test_log_concave_examples(seq, holds, index):
    v = is_log_concave(seq)
    assert v.holds is holds
    assert v.index == index


def test_log_concave_rationals_exact():
    # 833/57 squared against neighbours, no rounding anywhere
    s = ["20", "833/57", "11200/1377"]
    lhs = Fraction(833, 57) ** 2
    rhs = Fraction(20) * Fraction(11200, 1377)
    assert is_log_concave(s).holds is (lhs >= rhs)


def test_floats_refused():
    with pytest.raises(TypeError):
        is_log_concave([1.0, 2.0, 1.0])
    with pytest.raises(ValueError):
        is_log_concave([])


@pytest.mark.parametrize("seq, holds", [
    ((1, 3, 6), True),
    ((1, 2, 1), True),
    ((2, 1, 2), False),
    ((1, 1, 2, 2, 1, 1), True),
    ((3,), True),
])
def test_unimodal(seq, holds):
    assert is_unimodal(seq).holds is holds


def test_poly_examples():
    assert poly_pow(IntPolynomial([1, 1]), 2).coeffs == (1, 2, 1)
    assert poly_pow(IntPolynomial([1, 2, 2]), 2).coeffs == (1, 4, 8, 8, 4)
    assert poly_pow(IntPolynomial([1, 2, 5]), 2).coeffs == (1, 4, 14, 20, 25)
    assert coefficients_as_sequence(IntPolynomial([1, 2, 1])) == (1, 2, 1)
    assert coefficients_as_sequence(IntPolynomial([0])) == (0,)
    assert IntPolynomial([1, 2, 0, 0]).degree == 1
    with pytest.raises(ValueError):
        poly_pow(IntPolynomial([1, 1]), 0)


def test_json_round_trip():
    s = (Fraction(833, 57), Fraction(20), Fraction(-3, 4))
    data = sequence_to_json(s)
    assert data == ["833/57", "20/1", "-3/4"]
    assert sequence_from_json(json.loads(json.dumps(data))) == s
    p = IntPolynomial([1, 10 ** 30, 7])
    assert IntPolynomial.from_json(p.to_json()) == p
    assert rat("5") == 5


small_polys = st.lists(st.integers(-50, 50), min_size=1, max_size=8)


@given(small_polys, small_polys)
def test_poly_mul_matches_convolution(p, q):
    assert list(poly_mul(IntPolynomial(p), IntPolynomial(q)).coeffs) == list(IntPolynomial(convolve(p, q)).coeffs)


@given(small_polys, st.integers(1, 5), st.integers(-3, 3))
def test_poly_pow_by_evaluation(p, n, t):
    assert poly_pow(IntPolynomial(p), n)(t) == IntPolynomial(p)(t) ** n


positive = st.lists(st.integers(1, 200), min_size=1, max_size=8)


@settings(max_examples=300)
@given(positive, positive)
def test_product_of_lc_is_lc(p, q):
    if is_log_concave(p).holds and is_log_concave(q).holds:
        assert is_log_concave(poly_mul(IntPolynomial(p), IntPolynomial(q)).coeffs).holds


@settings(max_examples=300)
@given(positive)
def test_lc_implies_unimodal(s):
    if is_log_concave(s).holds:
        assert is_unimodal(s).holds


@given(positive)
def test_verdict_matches_oracle(s):
    assert is_log_concave(s).holds == is_lc(s)


@settings(max_examples=200)
@given(st.lists(st.tuples(st.integers(1, 100), st.integers(1, 100)), min_size=1, max_size=7))
def test_termwise_product_of_lc(pairs):
    a = [x for x, _ in pairs]
    b = [y for _, y in pairs]
    if is_log_concave(a).holds and is_log_concave(b).holds:
        assert is_log_concave(termwise_product(a, b)).holds
