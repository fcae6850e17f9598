from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from qsc.ring import (
    SIGMA,
    X,
    FractionSL,
    LaurentZ,
    SignedLaurent,
    fraction_eq,
    quantum_int,
)

laurent = st.dictionaries(st.integers(-4, 4), st.integers(-5, 5), max_size=4).map(LaurentZ)
signed = st.builds(SignedLaurent, laurent, laurent)
XI = X ** -1


def evaluate(p: SignedLaurent, r: int, q: Fraction = Fraction(3)) -> Fraction:
    """Numeric oracle: x = q^r, sigma = (-1)^r."""
    x = q ** r
    s = (-1) ** r
    return sum(c * x ** k for k, c in p.even.coeffs.items()) + s * sum(c * x ** k for k, c in p.odd.coeffs.items())


@given(signed, signed, signed)
def test_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a * 1 == a
    assert a + (-a) == 0


@given(signed, signed, st.integers(1, 4))
def test_product_matches_numeric_evaluation(a, b, r):
    assert evaluate(a * b, r) == evaluate(a, r) * evaluate(b, r)


@given(signed, signed)
@settings(max_examples=60)
def test_exact_division_recovers_factor(a, b):
    if b.is_zero_divisor():
        with pytest.raises(ZeroDivisionError):
            (a * b).exact_div(b)
        return
    assert (a * b).exact_div(b) == a


@given(laurent, laurent)
def test_laurent_division(a, b):
    if not b:
        return
    assert (a * b).exact_div(b) == a


def test_inexact_division_rejected():
    with pytest.raises(ArithmeticError):
        (X + 1).exact_div(X - 1)


@given(signed)
def test_zero_divisor_criterion(a):
    assert a.is_zero_divisor() == (a.even * a.even == a.odd * a.odd)


def test_sl_mul_examples():
    assert (X + XI) * SIGMA == SignedLaurent(0, X + XI)
    assert SIGMA * SIGMA == 1
    assert SignedLaurent(X - XI) * SignedLaurent(X + XI) == SignedLaurent(X ** 2 - X ** -2)


def test_quantum_int_examples():
    assert quantum_int(0) == 0
    assert quantum_int(1) == 1
    assert quantum_int(3) == X ** 2 + 1 + X ** -2
    with pytest.raises(ValueError):
        quantum_int(-1)


@pytest.mark.parametrize("m", range(21))
def test_quantum_int_telescopes(m):
    assert quantum_int(m) * (X - XI) == X ** m - X ** -m


def test_fraction_eq_examples():
    assert fraction_eq(FractionSL(X ** 2 - X ** -2, X - XI), FractionSL(X + XI, 1))
    assert fraction_eq(FractionSL(0, X - XI), FractionSL(0, 1))
    assert not fraction_eq(FractionSL(SIGMA, 1), FractionSL(1, 1))
    with pytest.raises(ZeroDivisionError):
        FractionSL(1, 0)


def test_render():
    assert SignedLaurent(X + XI).render() == "q^r + q^-r"
    assert SIGMA.render() == "(-1)^r"
    assert (-SIGMA).render() == "-(-1)^r"
    assert SignedLaurent(0).render() == "0"


def test_components_roundtrip():
    a = SignedLaurent(X + 2, X ** -1 - 3)
    assert SignedLaurent.from_components(*a.components()) == a
