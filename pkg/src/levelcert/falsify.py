"""Numerical search for points of ``{r = c}`` in the orthant where ``f <= 0``.

Every orthant point of the level set lies on a ray ``t*u`` through the
origin with ``u`` in the standard simplex, and ``r`` is nondecreasing along
such rays, so one bisection per direction finds it.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterator, List, Optional, Sequence, Tuple

from .certificates import ProblemInstance
from .poly import Polynomial
from .support import check_precondition


@dataclass(frozen=True)
class Witness:
    point: Tuple[float, ...]
    f_value: float
    r_residual: float


class _FloatPoly:
    """Float copy of a polynomial for fast repeated evaluation."""

    def __init__(self, p: Polynomial):
        self.terms = [(float(c), [(i, e) for i, e in enumerate(a) if e]) for a, c in p.items()]

    def __call__(self, x: Sequence[float]) -> float:
        total = 0.0
        for c, factors in self.terms:
            v = c
            for i, e in factors:
                v *= x[i] ** e
            total += v
        return total


def ray_solve(r: Polynomial, direction: Sequence[float], c=1, tol: float = 1e-12) -> Optional[float]:
    """The ``t >= 0`` with ``r(t*u) == c``, by bisection; ``None`` if the ray misses the level set."""
    if not tol > 0:
        raise ValueError("tolerance must be positive")
    report = check_precondition(r)
    if not report.passed:
        raise ValueError(f"r violates the precondition: {report.explain()}")
    u = [float(v) for v in direction]
    if len(u) != r.dim:
        raise ValueError(f"direction has length {len(u)}, expected {r.dim}")
    if min(u) < 0 or abs(sum(u) - 1.0) > 1e-9:
        raise ValueError("direction must lie in the standard simplex")
    c = Fraction(c)
    r0 = r.constant_term()
    if r0 == c:
        return 0.0
    if r0 > c:
        return None
    lin_min = min(r.coeff(e) for e in _units(r.dim))
    t_max = float(c / lin_min)
    rf = _FloatPoly(r)
    cf = float(c)
    lo, hi = 0.0, t_max
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if rf([mid * ui for ui in u]) < cf:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _units(n):
    return [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]


def simplex_grid(n: int, k: int) -> Iterator[Tuple[float, ...]]:
    """Barycentric grid points ``m/k`` (``sum m == k``) of the standard simplex, in a fixed order."""
    if k <= 0:
        raise ValueError("grid size must be positive")
    # stars and bars: choose n-1 bar positions among k+n-1 slots
    for bars in combinations(range(k + n - 1), n - 1):
        prev = -1
        parts = []
        for b in bars:
            parts.append(b - prev - 1)
            prev = b
        parts.append(k + n - 1 - prev - 1)
        yield tuple(m / k for m in parts)


def falsify(
    inst: ProblemInstance,
    grid_k: int = 64,
    tol: float = 1e-9,
    *,
    skip_precondition: bool = False,
) -> Optional[Witness]:
    """Scan the level set along grid directions and return the point minimizing ``f`` among those with ``f <= tol``.

    ``None`` is evidence of positivity, not a proof.
    """
    if grid_k <= 0:
        raise ValueError("grid_k must be positive")
    if not tol > 0:
        raise ValueError("tolerance must be positive")
    inst.require_precondition(skip_precondition)
    ff = _FloatPoly(inst.f)
    rf = _FloatPoly(inst.r)
    cf = float(inst.height)
    best: Optional[Witness] = None
    for u in simplex_grid(inst.dim, grid_k):
        t = ray_solve(inst.r, u, inst.height, tol=tol * 1e-3)
        if t is None:
            continue
        point = tuple(t * ui for ui in u)
        fv = ff(point)
        if fv > tol:
            continue
        resid = abs(rf(point) - cf)
        if resid > tol:
            continue
        if best is None or fv < best.f_value:
            best = Witness(point, fv, resid)
    return best


def sample_level_points(
    r: Polynomial, count: int, c=1, rng: Optional[random.Random] = None, tol: float = 1e-13
) -> List[Tuple[float, ...]]:
    """``count`` points of ``{r = c}`` in the orthant along uniformly random simplex directions."""
    rng = rng or random.Random(0)
    out = []
    attempts = 0
    while len(out) < count:
        attempts += 1
        if attempts > 100 * count + 100:
            break
        e = [-math.log(1.0 - rng.random()) for _ in range(r.dim)]
        s = sum(e)
        u = [v / s for v in e]
        t = ray_solve(r, u, c, tol=tol)
        if t is None:
            break
        out.append(tuple(t * v for v in u))
    return out
