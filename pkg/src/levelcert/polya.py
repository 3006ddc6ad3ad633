"""Pólya's simplex test: positivity of ``(x1 + ... + xn)^N * p`` on one grade."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Optional, Tuple

from .poly import MultiIndex, Polynomial, divide_exact
from .support import grade_slice


@dataclass(frozen=True)
class PolyaReport:
    N: int
    expanded: Polynomial
    all_grade_terms_positive: bool
    missing: Tuple[MultiIndex, ...] = ()
    nonpositive: Tuple[MultiIndex, ...] = ()


def _check_homogeneous(p: Polynomial):
    if p.is_zero():
        raise ValueError("p must be nonzero")
    if not p.is_homogeneous():
        raise ValueError("p must be homogeneous")


def linear_form(n: int) -> Polynomial:
    """``x1 + ... + xn``."""
    return Polynomial(n, {tuple(1 if j == i else 0 for j in range(n)): 1 for i in range(n)})


def _grade_verdict(q: Polynomial, grade: int):
    slice_ = grade_slice(q.dim, grade)
    missing = tuple(sorted(a for a in slice_ if q.coeff(a) == 0))
    nonpos = tuple(sorted(a for a, c in q.items() if c < 0))
    return not missing and not nonpos, missing, nonpos


def polya_expand(p: Polynomial, N: int) -> PolyaReport:
    _check_homogeneous(p)
    if N < 0:
        raise ValueError("N must be nonnegative")
    q = linear_form(p.dim) ** N * p
    ok, missing, nonpos = _grade_verdict(q, N + int(p.degree))
    return PolyaReport(N, q, ok, missing, nonpos)


def polya_min_N(p: Polynomial, N_max: int = 8) -> Optional[int]:
    _check_homogeneous(p)
    for N in range(N_max + 1):
        if polya_expand(p, N).all_grade_terms_positive:
            return N
    return None


def _multinomial(N: int, beta: MultiIndex) -> int:
    out = factorial(N)
    for b in beta:
        out //= factorial(b)
    return out


def homogeneous_certificate(p: Polynomial, N: int) -> Optional[Tuple[Polynomial, Polynomial]]:
    """Level-``N`` certificate ``(q, h)`` for ``p`` on the simplex with ``q`` living on one grade.

    With ``r = x1 + ... + xn`` and ``p`` homogeneous of degree ``m``, a
    homogeneous ``q`` of degree ``N + m`` congruent to ``p`` modulo ``r - 1`` is
    unique (a nonzero multiple of ``r - 1`` is never homogeneous). It is
    assembled here coefficient by coefficient from multinomial counts, then
    the congruence is confirmed by exact division. Returns ``None`` unless
    every monomial of the grade carries a positive coefficient.
    """
    _check_homogeneous(p)
    n = p.dim
    m = int(p.degree)
    coeffs = {}
    for gamma in grade_slice(n, N + m):
        total = Fraction(0)
        for alpha, c in p.items():
            beta = tuple(g - a for g, a in zip(gamma, alpha))
            if min(beta, default=0) >= 0:
                total += c * _multinomial(N, beta)
        coeffs[gamma] = total
    q = Polynomial(n, coeffs)
    h = divide_exact(p - q, linear_form(n) - 1)
    if h is None:
        raise RuntimeError("homogeneous lift is not congruent to p; arithmetic bug")
    ok, _, _ = _grade_verdict(q, N + m)
    return (q, h) if ok else None


def cross_check_polya(p: Polynomial, N: int) -> bool:
    """Whether the direct expansion verdict and the congruence-certificate route agree at ``N``."""
    expand = polya_expand(p, N).all_grade_terms_positive
    cert = homogeneous_certificate(p, N) is not None
    return expand == cert
