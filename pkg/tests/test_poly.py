from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from levelcert.poly import (
    ZERO_DEGREE,
    DimensionError,
    Polynomial,
    PolynomialParseError,
    add,
    divide_exact,
    divmod_poly,
    evaluate,
    format_polynomial,
    mul,
    parse_polynomial,
    power,
    reduce_mod,
)


def P(text, n=2):
    return parse_polynomial(text, n)


def polys(n, max_deg=4, max_terms=5):
    exps = st.lists(st.integers(0, max_deg), min_size=n, max_size=n).filter(lambda a: sum(a) <= max_deg)
    coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=4)
    return st.dictionaries(exps.map(tuple), coeffs, max_size=max_terms).map(lambda d: Polynomial(n, d))


dims = st.integers(1, 3)


# -- arithmetic examples ----------------------------------------------------


def test_add_examples():
    assert add(P("x1+1", 1), P("x1^2-1", 1)) == P("x1^2+x1", 1)
    p = P("3*x1*x2 - 2")
    assert add(p, Polynomial.zero(2)) == p
    assert add(P("x1-x2"), P("x2-x1")).is_zero()


def test_mul_examples():
    assert mul(P("x1+x2"), P("x1^2-x1*x2+x2^2")) == P("x1^3+x2^3")
    p = P("3/2*x1^2*x2 - 1")
    assert mul(p, Polynomial.constant(2, 1)) == p
    assert mul(P("x1+x2"), P("x1+x2")) == P("x1^2+2*x1*x2+x2^2")


def test_pow_examples():
    assert power(P("x1+x2"), 0) == Polynomial.constant(2, 1)
    assert power(P("x1+x2"), 2) == P("x1^2+2*x1*x2+x2^2")
    assert power(P("x1^2", 1), 3) == P("x1^6", 1)
    assert power(Polynomial.zero(2), 0) == Polynomial.constant(2, 1)


def test_dimension_mismatch():
    with pytest.raises(DimensionError):
        add(P("x1", 1), P("x1", 2))
    with pytest.raises(DimensionError):
        mul(P("x1", 1), P("x1", 2))
    with pytest.raises(DimensionError):
        evaluate(P("x1"), [1])


def test_zero_degree_is_sentinel():
    assert Polynomial.zero(2).degree == ZERO_DEGREE
    assert Polynomial.zero(2).degree < 0
    assert Polynomial.constant(2, 5).degree == 0
    assert P("x1^2*x2 + x2").degree == 3


def test_zero_coefficients_not_stored():
    p = Polynomial(2, {(1, 0): 0, (0, 1): 2})
    assert len(p) == 1
    assert (p - p).terms == {}


# -- evaluation -------------------------------------------------------------


def test_evaluate_parabola_endpoints():
    r = P("x1 + x2 + x1^2")
    assert evaluate(r, [0, 1]) == 1
    assert isinstance(evaluate(r, [0, 1]), Fraction)
    assert evaluate(r, [(5**0.5 - 1) / 2, 0.0]) == pytest.approx(1.0, abs=1e-12)


def test_evaluate_at_origin_is_constant_term():
    p = P("7/3 + x1*x2 - 4*x2^3")
    assert evaluate(p, [0, 0]) == Fraction(7, 3)


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_evaluate_is_homomorphism(data):
    n = data.draw(dims)
    p, q = data.draw(polys(n)), data.draw(polys(n))
    v = data.draw(st.lists(st.fractions(-3, 3, max_denominator=5), min_size=n, max_size=n))
    assert evaluate(p * q, v) == evaluate(p, v) * evaluate(q, v)
    assert evaluate(p + q, v) == evaluate(p, v) + evaluate(q, v)


# -- ring axioms ------------------------------------------------------------


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_ring_axioms(data):
    n = data.draw(dims)
    a, b, c = (data.draw(polys(n)) for _ in range(3))
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a - a).is_zero()


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_power_matches_repeated_product(data):
    n = data.draw(dims)
    p = data.draw(polys(n, max_deg=2, max_terms=3))
    d = data.draw(st.integers(0, 4))
    acc = Polynomial.constant(n, 1)
    for _ in range(d):
        acc = acc * p
    assert power(p, d) == acc


# -- division ---------------------------------------------------------------


def test_divide_exact_examples():
    assert divide_exact(P("x1^3-x1", 1), P("x1^2-1", 1)) == P("x1", 1)
    assert divide_exact(P("x1-1", 1), P("x1^2-1", 1)) is None
    g = P("x1+x2+x1^2-1")
    assert divide_exact(g * P("3-x2"), g) == P("3-x2")


def test_divide_by_zero_polynomial():
    with pytest.raises(ZeroDivisionError):
        divide_exact(P("x1"), Polynomial.zero(2))
    with pytest.raises(ZeroDivisionError):
        reduce_mod(P("x1"), Polynomial.zero(2))


def test_reduce_mod_examples():
    g = P("x1^2-1", 1)
    assert reduce_mod(P("x1^2", 1), g) == Polynomial.constant(1, 1)
    assert reduce_mod(P("2*x1^2-2", 1), g).is_zero()
    # x mod (x^2 - 1) is x itself: the obstruction in the one-variable counterexample
    assert reduce_mod(P("x1", 1), g) == P("x1", 1)


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_division_identity_and_remainder(data):
    n = data.draw(dims)
    p = data.draw(polys(n))
    g = data.draw(polys(n, max_deg=3).filter(lambda g: not g.is_zero()))
    quot, rem = divmod_poly(p, g)
    assert quot * g + rem == p
    lm, _ = g.leading_term()
    for alpha in rem.support():
        assert any(a < b for a, b in zip(alpha, lm))
    assert divide_exact(p - rem, g) is not None
    assert reduce_mod(rem, g) == rem


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_divide_exact_recovers_factor(data):
    n = data.draw(dims)
    p = data.draw(polys(n))
    g = data.draw(polys(n, max_deg=3).filter(lambda g: not g.is_zero()))
    assert divide_exact(p * g, g) == p


# -- text format ------------------------------------------------------------


def test_parse_examples():
    assert P("x1 + x2 + x1^2") == Polynomial(2, {(1, 0): 1, (0, 1): 1, (2, 0): 1})
    assert P("0").is_zero()
    p = P("3/2*x1^2*x2 - 1")
    assert p.terms == {(2, 1): Fraction(3, 2), (0, 0): -1}


def test_parse_variants():
    assert P("(1/2)+(1/2)*x1") == Polynomial(2, {(0, 0): Fraction(1, 2), (1, 0): Fraction(1, 2)})
    assert P("x1*x1*x2") == P("x1^2*x2")
    assert P("  - x2 +x1 ") == P("x1-x2")
    assert P("x1 − 1") == P("x1-1")  # unicode minus
    assert P("-(3/4)*x2") == Polynomial(2, {(0, 1): Fraction(-3, 4)})
    assert P("2 + 3") == Polynomial.constant(2, 5)


@pytest.mark.parametrize(
    "text, pos",
    [
        ("x1 + ", 5),
        ("x1 ** 2", 4),
        ("x3", 0),
        ("x0 + 1", 0),
        ("2 x1", 2),
        ("1/0", 2),
        ("x1 + y", 5),
        ("", 0),
    ],
)
def test_parse_errors_carry_position(text, pos):
    with pytest.raises(PolynomialParseError) as err:
        parse_polynomial(text, 2)
    assert err.value.pos == pos


def test_format_examples():
    assert format_polynomial(P("1/2 + 1/2*x1 + 1/2*x2")) == "(1/2)+(1/2)*x1+(1/2)*x2"
    assert format_polynomial(P("x1^4 + 1 + x1^2", 1) / 3) == "(1/3)+(1/3)*x1^2+(1/3)*x1^4"
    assert format_polynomial(Polynomial.zero(3)) == "0"
    assert format_polynomial(P("1 - x1")) == "1-x1"
    assert format_polynomial(P("-x1*x2^2")) == "-x1*x2^2"


@settings(max_examples=100, deadline=None)
@given(st.data())
def test_parse_format_round_trip(data):
    n = data.draw(dims)
    p = data.draw(polys(n))
    assert parse_polynomial(format_polynomial(p), n) == p
