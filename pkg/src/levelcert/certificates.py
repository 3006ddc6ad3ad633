"""Congruence certificates for positivity on the nonnegative part of ``{r = c}``.

A certificate at level ``N`` is a pair ``(q, h)`` with

    f - q == h * (r - c)

where ``q`` has strictly positive coefficients exactly on the cumulative
support ``S_N = union_{d<=N} d*Log(r)``. Finding one proves ``f > 0`` on
``{r = c}`` intersected with the closed orthant; conversely such a
certificate exists for some ``N`` whenever ``f`` is strictly positive there,
provided ``r`` has nonnegative coefficients and contains every ``x_i``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from . import lp as lpmod
from .poly import MultiIndex, Polynomial, divide_exact, reduce_mod
from .support import (
    PreconditionReport,
    SupportSet,
    check_precondition,
    cumulative_support,
    degree_slab,
    support_of,
)

log = logging.getLogger(__name__)

DEFAULT_MAX_N = 8


class PreconditionError(ValueError):
    def __init__(self, report: PreconditionReport):
        self.report = report
        super().__init__(report.explain())


@dataclass(frozen=True)
class ProblemInstance:
    f: Polynomial
    r: Polynomial
    height: Fraction = Fraction(1)

    def __post_init__(self):
        if self.f.dim != self.r.dim:
            raise ValueError(f"f and r have different dimensions ({self.f.dim} vs {self.r.dim})")
        object.__setattr__(self, "height", Fraction(self.height))
        if self.height <= 0:
            raise ValueError(f"height must be positive, got {self.height}")

    @property
    def dim(self) -> int:
        return self.f.dim

    @property
    def modulus(self) -> Polynomial:
        return self.r - self.height

    def precondition(self) -> PreconditionReport:
        return check_precondition(self.r)

    def require_precondition(self, skip: bool = False):
        if skip:
            # Log(r) is only defined for nonnegative coefficients, so that part stays mandatory
            if any(c < 0 for _, c in self.r.items()):
                raise PreconditionError(check_precondition(self.r))
            return
        report = check_precondition(self.r)
        if not report.passed:
            raise PreconditionError(report)


@dataclass(frozen=True)
class Certificate:
    N: int
    q: Polynomial
    h: Optional[Polynomial] = None
    height: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "height", Fraction(self.height))


@dataclass
class VerificationReport:
    support_ok: bool
    divisibility_ok: bool
    height_ok: bool
    cofactor: Optional[Polynomial] = None
    messages: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.support_ok and self.divisibility_ok and self.height_ok

    def __bool__(self):
        return self.passed

    def failures(self) -> List[str]:
        out = []
        if not self.support_ok:
            out.append("support")
        if not self.divisibility_ok:
            out.append("divisibility")
        if not self.height_ok:
            out.append("height")
        return out


def build_g(r: Polynomial, N: int, height=1) -> Polynomial:
    """The average ``(1/(N+1)) * sum_{d=0}^N (r/c)^d``, congruent to 1 modulo ``r - c``."""
    if N < 0:
        raise ValueError("N must be nonnegative")
    if any(c < 0 for _, c in r.items()):
        raise ValueError("r must have nonnegative coefficients")
    c = Fraction(height)
    if c <= 0:
        raise ValueError("height must be positive")
    base = r / c
    acc = Polynomial.constant(r.dim, 1)
    term = Polynomial.constant(r.dim, 1)
    for _ in range(N):
        term = term * base
        acc = acc + term
    return acc / (N + 1)


def verify_certificate(inst: ProblemInstance, cert: Certificate) -> VerificationReport:
    """Check a certificate exactly; every failed condition is itemised in the report."""
    msgs = []
    if cert.q.dim != inst.dim or (cert.h is not None and cert.h.dim != inst.dim):
        return VerificationReport(False, False, cert.height > 0, None, ["dimension mismatch"])

    height_ok = cert.height > 0 and cert.height == inst.height
    if cert.height <= 0:
        msgs.append(f"height {cert.height} is not positive")
    elif cert.height != inst.height:
        msgs.append(f"certificate height {cert.height} differs from instance height {inst.height}")

    support_ok = True
    nonpos = sorted(a for a, c in cert.q.items() if c <= 0)
    if nonpos:
        support_ok = False
        msgs.append(f"q has non-positive coefficients at {nonpos}")
    if cert.N < 0:
        support_ok = False
        msgs.append("N is negative")
    elif any(c < 0 for _, c in inst.r.items()):
        support_ok = False
        msgs.append("r has negative coefficients")
    else:
        want = cumulative_support(inst.r, cert.N)
        have = support_of(cert.q)
        if have != want:
            support_ok = False
            missing = sorted((want - have).members)
            extra = sorted((have - want).members)
            if missing:
                msgs.append(f"q is missing support members {missing}")
            if extra:
                msgs.append(f"q has terms outside the cumulative support: {extra}")

    divisibility_ok = False
    cof = None
    if height_ok:
        cof = divide_exact(inst.f - cert.q, inst.r - cert.height)
        if cof is None:
            msgs.append("f - q is not divisible by r - c")
        elif cert.h is not None and cof != cert.h:
            msgs.append("cofactor h does not match the exact quotient (f - q)/(r - c)")
        else:
            divisibility_ok = True
    else:
        msgs.append("divisibility not checked: height invalid")
    return VerificationReport(support_ok, divisibility_ok, height_ok, cof, msgs)


def h_degree_bound(f: Polynomial, r: Polynomial, N: int) -> int:
    """Largest possible ``deg h`` of a level-``N`` certificate; negative means ``h = 0``."""
    fdeg = f.degree if not f.is_zero() else 0
    return int(max(fdeg, N * r.degree)) - int(r.degree)


def _monomial_index(monos) -> Dict[MultiIndex, int]:
    return {a: i for i, a in enumerate(sorted(monos, key=lambda a: (sum(a), a)))}


def build_search_lp(inst: ProblemInstance, N: int, shrink: bool = False):
    """Pose the level-``N`` search as an LP.

    Variables are ``[t, u, s_alpha..., h_beta...]`` with ``q_alpha = t + s_alpha``,
    ``s >= 0``, ``t + u = 1``, ``u >= 0`` and ``t``, ``h`` free; the objective is
    ``max t``. With ``shrink`` the ``h`` block is eliminated by matching normal
    forms modulo ``r - c`` instead. Returns ``(lp, S, slab)``.
    """
    S = cumulative_support(inst.r, N).sorted()
    g = inst.modulus
    slab = [] if shrink else degree_slab(inst.dim, h_degree_bound(inst.f, inst.r, N)).sorted()
    ns, nh = len(S), len(slab)
    nvars = 2 + ns + nh
    T, U = 0, 1

    # coefficient of each variable in each monomial equation
    cols: Dict[MultiIndex, Dict[int, Fraction]] = {}

    def put(gamma, var, val):
        row = cols.setdefault(gamma, {})
        v = row.get(var, 0) + val
        if v:
            row[var] = v
        else:
            row.pop(var, None)

    if shrink:
        target = reduce_mod(inst.f, g)
        for k, alpha in enumerate(S):
            nf = reduce_mod(Polynomial.monomial(alpha), g)
            for gamma, c in nf.items():
                put(gamma, T, c)
                put(gamma, 2 + k, c)
    else:
        target = inst.f
        for k, alpha in enumerate(S):
            put(alpha, T, Fraction(1))
            put(alpha, 2 + k, Fraction(1))
        g_terms = list(g.items())
        for k, beta in enumerate(slab):
            for delta, c in g_terms:
                gamma = tuple(a + b for a, b in zip(beta, delta))
                put(gamma, 2 + ns + k, c)

    prog = lpmod.LinearProgram(nvars)
    prog.lower_bounds = [None, Fraction(0)] + [Fraction(0)] * ns + [None] * nh
    prog.objective = [1] + [0] * (nvars - 1)
    row = [0] * nvars
    row[T] = 1
    row[U] = 1
    prog.add_equality(row, 1)
    for gamma in sorted(set(cols) | target.support(), key=lambda a: (sum(a), a)):
        dense = [0] * nvars
        for var, c in cols.get(gamma, {}).items():
            dense[var] = c
        prog.add_equality(dense, target.coeff(gamma))
    return prog, S, slab


def search_certificate(
    inst: ProblemInstance, N: int, *, skip_precondition: bool = False, shrink: bool = False
) -> Optional[Certificate]:
    """Look for a level-``N`` certificate by maximizing the smallest coefficient of ``q``."""
    if N < 0:
        raise ValueError("N must be nonnegative")
    inst.require_precondition(skip_precondition)
    prog, S, slab = build_search_lp(inst, N, shrink=shrink)
    out = lpmod.solve(prog)
    log.debug("N=%d vars=%d rows=%d status=%s", N, prog.num_vars, len(prog.equalities), out.status)
    if not out.optimal or out.objective_value <= 0:
        return None
    x = out.assignment
    t = x[0]
    q = Polynomial(inst.dim, {alpha: t + x[2 + k] for k, alpha in enumerate(S)})
    if shrink:
        h = divide_exact(inst.f - q, inst.modulus)
    else:
        h = Polynomial(inst.dim, {beta: x[2 + len(S) + k] for k, beta in enumerate(slab)})
    cert = Certificate(N, q, h, inst.height)
    report = verify_certificate(inst, cert)
    if not report.passed:
        raise RuntimeError(f"LP produced an invalid certificate: {report.messages}")
    return cert


def find_min_N(
    inst: ProblemInstance,
    N_max: int = DEFAULT_MAX_N,
    *,
    skip_precondition: bool = False,
    shrink: bool = False,
) -> Optional[Tuple[Certificate, int]]:
    """Smallest ``N <= N_max`` admitting a certificate.

    ``None`` only means the search was exhausted; it says nothing about
    positivity.
    """
    inst.require_precondition(skip_precondition)
    for N in range(N_max + 1):
        cert = search_certificate(inst, N, skip_precondition=skip_precondition, shrink=shrink)
        if cert is not None:
            return cert, N
    return None


def extend_certificate(inst: ProblemInstance, cert: Certificate, k: int) -> Certificate:
    """Lift a level-``N`` certificate to level ``N + k`` by multiplying ``q`` with ``g_k``."""
    g = build_g(inst.r, k, inst.height)
    q = cert.q * g
    h = divide_exact(inst.f - q, inst.modulus)
    if h is None:
        raise ValueError("certificate does not satisfy the congruence")
    return Certificate(cert.N + k, q, h, inst.height)


def to_unit_height(inst: ProblemInstance, cert: Optional[Certificate] = None):
    """Rewrite ``(f, r, c)`` as ``(f, r/c, 1)``; cofactors scale by ``c`` since ``r - c = c*(r/c - 1)``."""
    c = inst.height
    unit = ProblemInstance(inst.f, inst.r / c, Fraction(1))
    if cert is None:
        return unit, None
    h = None if cert.h is None else cert.h * c
    return unit, Certificate(cert.N, cert.q, h, Fraction(1))


def from_unit_height(inst: ProblemInstance, cert: Certificate, c) -> Tuple[ProblemInstance, Certificate]:
    """Inverse of :func:`to_unit_height` for a height-1 instance and target height ``c``."""
    c = Fraction(c)
    if inst.height != 1:
        raise ValueError("expected a height-1 instance")
    scaled = ProblemInstance(inst.f, inst.r * c, c)
    h = None if cert.h is None else cert.h / c
    return scaled, Certificate(cert.N, cert.q, h, c)
