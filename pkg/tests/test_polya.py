import random
from fractions import Fraction

import pytest

from levelcert.poly import Polynomial, parse_polynomial
from levelcert.polya import (
    cross_check_polya,
    homogeneous_certificate,
    linear_form,
    polya_expand,
    polya_min_N,
)
from levelcert.randinst import random_homogeneous
from oracles import brute_expansion, brute_verdict


def P(text, n=2):
    return parse_polynomial(text, n)


QUAD = P("x1^2 - x1*x2 + x2^2")


def test_expansion_matches_brute_force_on_quadratic():
    for N in range(4):
        rep = polya_expand(QUAD, N)
        assert rep.expanded.terms == brute_expansion(QUAD, N)
        assert rep.all_grade_terms_positive == (N == 3)
    # frozen from the brute-force oracle
    assert polya_expand(QUAD, 3).expanded == P("x1^5 + 2*x1^4*x2 + x1^3*x2^2 + x1^2*x2^3 + 2*x1*x2^4 + x2^5")
    assert polya_expand(QUAD, 1).missing == ((1, 2), (2, 1))


def test_polya_examples():
    assert polya_expand(P("x1 + x2"), 0).all_grade_terms_positive
    for N in range(6):
        rep = polya_expand(P("x1 - x2"), N)
        assert not rep.all_grade_terms_positive
        assert rep.expanded.coeff((0, N + 1)) < 0


def test_polya_min_N():
    assert polya_min_N(QUAD) == 3
    assert polya_min_N(P("x1^2 + 3*x1*x2 + x2^2")) == 0
    assert polya_min_N(P("x1 - x2"), 8) is None
    assert polya_min_N(QUAD, 2) is None


def test_rejects_bad_input():
    with pytest.raises(ValueError):
        polya_expand(P("x1 + 1"), 1)
    with pytest.raises(ValueError):
        polya_min_N(Polynomial.zero(2))
    with pytest.raises(ValueError):
        cross_check_polya(P("x1^2 + x2"), 1)


def test_homogeneous_certificate_congruence():
    q, h = homogeneous_certificate(QUAD, 3)
    assert q == polya_expand(QUAD, 3).expanded
    assert QUAD - q == h * (linear_form(2) - 1)
    assert homogeneous_certificate(QUAD, 2) is None


def test_cross_check_examples():
    assert cross_check_polya(QUAD, 3)
    assert cross_check_polya(P("x1 + x2"), 0)
    assert cross_check_polya(P("x1 - x2"), 2)


@pytest.mark.parametrize("seed", range(60))
def test_random_agrees_with_brute_force(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 3)
    p = random_homogeneous(rng, n, rng.randint(1, 3))
    for N in range(4):
        assert polya_expand(p, N).all_grade_terms_positive == brute_verdict(p, N)
        assert cross_check_polya(p, N)


def test_general_route_on_simplex():
    # The general certificate needs positive coefficients on every grade <= K, not just grade K.
    # From Polya's grade-K form q, adding eps*x^a and subtracting eps*x^a*r^(K-|a|) for each lower
    # grade monomial keeps the congruence and, for small eps, positivity; so level K = N + deg p works.
    from levelcert.certificates import Certificate, ProblemInstance, search_certificate, verify_certificate
    from levelcert.support import degree_slab

    r = linear_form(2)
    N = polya_min_N(QUAD)
    K = N + 2
    q = polya_expand(QUAD, N).expanded
    eps = Fraction(1, 100)
    for a in degree_slab(2, K - 1):
        mono = Polynomial.monomial(a)
        q = q + eps * mono - eps * mono * r ** (K - sum(a))
    inst = ProblemInstance(QUAD, r)
    assert verify_certificate(inst, Certificate(K, q)).passed
    assert search_certificate(inst, K) is not None
