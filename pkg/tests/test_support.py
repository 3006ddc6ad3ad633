import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from levelcert.poly import DimensionError, Polynomial, parse_polynomial
from levelcert.support import (
    SupportSet,
    check_precondition,
    cumulative_support,
    grade_slice,
    log_set,
    minkowski_power,
    minkowski_sum,
    support_of,
)


def S(n, *members):
    return SupportSet.of(n, members)


def nonneg_polys(n, max_deg=3, max_terms=4):
    exps = st.lists(st.integers(0, max_deg), min_size=n, max_size=n).filter(lambda a: sum(a) <= max_deg)
    coeffs = st.fractions(min_value=0, max_value=4, max_denominator=3)
    return st.dictionaries(exps.map(tuple), coeffs, max_size=max_terms).map(lambda d: Polynomial(n, d))


def test_log_set_examples():
    assert log_set(parse_polynomial("x1 + x2 + x1^2", 2)) == S(2, (1, 0), (0, 1), (2, 0))
    assert log_set(Polynomial.zero(2)) == SupportSet(2)
    assert log_set(parse_polynomial("x1+x2+x3", 3)) == grade_slice(3, 1)


def test_log_set_rejects_negative_coefficients():
    with pytest.raises(ValueError):
        log_set(parse_polynomial("x1 - 1", 1))


def test_support_of_examples():
    assert support_of(parse_polynomial("x1 - 1", 1)) == S(1, (1,), (0,))
    assert support_of(Polynomial.zero(1)) == SupportSet(1)
    assert support_of(parse_polynomial("x1 - x1", 1)) == SupportSet(1)


def test_minkowski_sum_examples():
    J = S(2, (1, 0), (0, 1))
    assert minkowski_sum(J, J) == S(2, (2, 0), (1, 1), (0, 2))
    assert minkowski_sum(J, SupportSet.origin(2)) == J
    assert minkowski_sum(S(1, (2,)), S(1, (2,))) == S(1, (4,))
    with pytest.raises(DimensionError):
        minkowski_sum(J, S(1, (1,)))


def test_minkowski_power_examples():
    J = S(2, (1, 0), (0, 1))
    assert minkowski_power(J, 0) == S(2, (0, 0))
    assert minkowski_power(J, 2) == S(2, (2, 0), (1, 1), (0, 2))
    assert minkowski_power(S(1, (2,)), 3) == S(1, (6,))


@pytest.mark.parametrize("N", range(6))
def test_cumulative_support_of_x_squared(N):
    r = parse_polynomial("x1^2", 1)
    assert cumulative_support(r, N) == SupportSet.of(1, [(2 * k,) for k in range(N + 1)])


def test_cumulative_support_examples():
    r = parse_polynomial("x1 + x2 + x1^2", 2)
    assert cumulative_support(r, 0) == SupportSet.origin(2)
    assert cumulative_support(r, 1) == S(2, (0, 0), (1, 0), (0, 1), (2, 0))
    with pytest.raises(ValueError):
        cumulative_support(parse_polynomial("x1 - x2", 2), 1)


def test_grade_slice_examples():
    assert grade_slice(2, 1) == S(2, (1, 0), (0, 1))
    assert grade_slice(1, 5) == S(1, (5,))
    assert grade_slice(2, 2) == S(2, (2, 0), (1, 1), (0, 2))


@pytest.mark.parametrize("n", [1, 2, 3])
@pytest.mark.parametrize("d", range(6))
def test_grade_slice_is_power_of_units(n, d):
    assert grade_slice(n, d) == minkowski_power(grade_slice(n, 1), d)


def test_check_precondition_examples():
    rep = check_precondition(parse_polynomial("x1^2", 1))
    assert not rep.passed
    assert rep.missing_units == ((1,),)
    assert check_precondition(parse_polynomial("x1 + x2 + x1^2", 2)).passed
    assert check_precondition(parse_polynomial("x1 + x2 + x3 + x4", 4)).passed


def test_check_precondition_reports_negatives():
    rep = check_precondition(parse_polynomial("x1 + x2 - x1*x2", 2))
    assert not rep.passed
    assert rep.missing_units == ()
    assert [a for a, _ in rep.negative_terms] == [(1, 1)]
    assert "negative" in rep.explain()
    # a negative linear coefficient also counts as a missing unit
    rep = check_precondition(parse_polynomial("x1 - x2", 2))
    assert rep.missing_units == ((0, 1),)


@settings(max_examples=150, deadline=None)
@given(st.data())
def test_log_identities(data):
    n = data.draw(st.integers(1, 3))
    p, pp = data.draw(nonneg_polys(n)), data.draw(nonneg_polys(n))
    c = data.draw(st.fractions(min_value=0, max_value=10).filter(lambda c: c > 0))
    d = data.draw(st.integers(0, 3))
    assert log_set(p + pp) == log_set(p) | log_set(pp)
    assert log_set(p * pp) == minkowski_sum(log_set(p), log_set(pp))
    assert log_set(p * c) == log_set(p)
    assert log_set(p**d) == minkowski_power(log_set(p), d)


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_cumulative_support_matches_power_sum(data):
    n = data.draw(st.integers(1, 3))
    r = data.draw(nonneg_polys(n).filter(lambda p: not p.is_zero()))
    N = data.draw(st.integers(0, 4))
    total = Polynomial.zero(n)
    for d in range(N + 1):
        total = total + r**d
    assert cumulative_support(r, N) == log_set(total)
