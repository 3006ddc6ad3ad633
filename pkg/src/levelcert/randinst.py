"""Random polynomials and problem instances for experiments and tests."""

from __future__ import annotations

import math
import random
from fractions import Fraction
from typing import Optional, Tuple

from .certificates import ProblemInstance
from .falsify import ray_solve
from .poly import Polynomial, evaluate
from .support import cumulative_support, degree_slab, grade_slice, unit_indices


def random_poly(rng: random.Random, n: int, deg: int, lo: int = -3, hi: int = 3, density: float = 0.5) -> Polynomial:
    terms = {}
    for alpha in degree_slab(n, deg):
        if rng.random() < density:
            terms[alpha] = rng.randint(lo, hi)
    return Polynomial(n, terms)


def random_nonneg_poly(rng: random.Random, n: int, deg: int, hi: int = 3, density: float = 0.5) -> Polynomial:
    return random_poly(rng, n, deg, 0, hi, density)


def random_homogeneous(rng: random.Random, n: int, deg: int, lo: int = -3, hi: int = 3) -> Polynomial:
    """Nonzero homogeneous polynomial of exact degree ``deg``."""
    monos = sorted(grade_slice(n, deg))
    while True:
        p = Polynomial(n, {a: rng.randint(lo, hi) for a in monos})
        if not p.is_zero():
            return p


def random_valid_r(rng: random.Random, n: int, deg: int, extra_density: float = 0.4) -> Polynomial:
    """Random ``r`` with nonnegative coefficients, every ``x_i`` present and exact degree ``deg``."""
    terms = {u: Fraction(rng.randint(1, 3), rng.randint(1, 2)) for u in unit_indices(n)}
    higher = [a for a in degree_slab(n, deg) if sum(a) >= 2]
    for a in higher:
        if rng.random() < extra_density:
            terms[a] = rng.randint(1, 3)
    if deg >= 2 and not any(sum(a) == deg for a in terms):
        top = [a for a in higher if sum(a) == deg]
        terms[rng.choice(top)] = rng.randint(1, 3)
    if rng.random() < 0.2:
        terms[(0,) * n] = Fraction(1, 2)
    return Polynomial(n, terms)


def random_direction(rng: random.Random, n: int):
    e = [-math.log(1.0 - rng.random()) for _ in range(n)]
    s = sum(e)
    return [v / s for v in e]


def positive_instance(
    rng: random.Random, r: Polynomial, N: int, h_deg: int = 1
) -> Tuple[ProblemInstance, Polynomial, Polynomial]:
    """``f = q + h*(r - 1)`` with ``q`` strictly positive on the level-``N`` support.

    Returns ``(instance, q, h)``; ``(q, h)`` is a level-``N`` certificate by construction.
    """
    n = r.dim
    q = Polynomial(n, {a: Fraction(rng.randint(1, 4), rng.randint(1, 3)) for a in cumulative_support(r, N)})
    h = random_poly(rng, n, h_deg, -2, 2, 0.6)
    f = q + h * (r - 1)
    return ProblemInstance(f, r), q, h


def negative_instance(
    rng: random.Random, r: Polynomial, N: int, h_deg: int = 1
) -> Optional[Tuple[ProblemInstance, Tuple[float, ...]]]:
    """An instance with ``f < 0`` at a sampled point of ``{r = 1}``; returns ``(instance, point)``."""
    inst, q, h = positive_instance(rng, r, N, h_deg)
    u = random_direction(rng, r.dim)
    t = ray_solve(r, u, 1, tol=1e-14)
    if t is None:
        return None
    point = tuple(t * v for v in u)
    K = math.floor(evaluate(q, point)) + 1
    return ProblemInstance(inst.f - K, r), point
