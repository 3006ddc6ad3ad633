"""Exact two-phase simplex over the rationals with Bland's rule.

Problems are small and dense, so the solver keeps a full tableau. Entries
are ``gmpy2.mpq`` when available (an order of magnitude faster than
``Fraction``) and are converted back to ``Fraction`` on output. Pivots skip
zero entries of the pivot row.

Two entering rules are offered. ``"bland"`` (the default) is the textbook
smallest-index rule. ``"hybrid"`` takes the most positive reduced cost and
falls back to Bland's rule for the rest of the phase once
``DEGENERATE_STREAK`` consecutive degenerate pivots occur; a cycle can only
consist of degenerate pivots, so termination is preserved.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

try:
    from gmpy2 import mpq as _Q
except ImportError:  # pragma: no cover
    _Q = Fraction

DEGENERATE_STREAK = 50


class LPStatus(str, enum.Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"


@dataclass
class LinearProgram:
    """maximize ``objective . x`` s.t. ``row . x == rhs`` for each equality and ``x_j >= lower_bounds[j]``.

    A lower bound of ``None`` makes the variable free.
    """

    num_vars: int
    equalities: List[Tuple[Sequence, object]] = field(default_factory=list)
    lower_bounds: List[Optional[Fraction]] = None
    objective: Sequence = None

    def __post_init__(self):
        if self.lower_bounds is None:
            self.lower_bounds = [Fraction(0)] * self.num_vars
        if self.objective is None:
            self.objective = [0] * self.num_vars

    def add_equality(self, row, rhs):
        self.equalities.append((row, rhs))

    def validate(self):
        m = self.num_vars
        if len(self.lower_bounds) != m:
            raise ValueError(f"lower_bounds has length {len(self.lower_bounds)}, expected {m}")
        if len(self.objective) != m:
            raise ValueError(f"objective has length {len(self.objective)}, expected {m}")
        for k, (row, _) in enumerate(self.equalities):
            if len(row) != m:
                raise ValueError(f"equality {k} has length {len(row)}, expected {m}")


@dataclass
class LPOutcome:
    status: LPStatus
    assignment: Optional[List[Fraction]] = None
    objective_value: Optional[Fraction] = None

    @property
    def optimal(self) -> bool:
        return self.status is LPStatus.OPTIMAL


class _Tableau:
    def __init__(self, rows: List[List[Fraction]], rhs: List[Fraction], ncols: int):
        self.m = len(rows)
        self.ncols = ncols
        # each row stores ncols coefficients followed by the rhs
        self.T = [row + [b] for row, b in zip(rows, rhs)]
        self.basis: List[int] = []
        self.cost_row: List[Fraction] = [_Q(0)] * (ncols + 1)

    def pivot(self, r: int, c: int):
        T = self.T
        prow = T[r]
        piv = prow[c]
        if piv != 1:
            inv = 1 / piv
            prow = T[r] = [v * inv if v else v for v in prow]
        nz = [k for k, v in enumerate(prow) if v]
        for i in range(self.m):
            if i == r:
                continue
            row = T[i]
            f = row[c]
            if f:
                for k in nz:
                    row[k] -= f * prow[k]
        f = self.cost_row[c]
        if f:
            cr = self.cost_row
            for k in nz:
                cr[k] -= f * prow[k]
        self.basis[r] = c

    def set_objective(self, c: Sequence[Fraction]):
        """Install reduced costs for maximizing ``c . x`` under the current basis."""
        cr = [_Q(v) for v in c] + [_Q(0)]
        for i, b in enumerate(self.basis):
            cb = c[b]
            if cb:
                row = self.T[i]
                for k, v in enumerate(row):
                    if v:
                        cr[k] -= cb * v
        self.cost_row = cr

    def objective_value(self) -> Fraction:
        # cost_row[-1] holds -(c_B . b)
        return -self.cost_row[-1]

    def run(self, allowed: Sequence[bool], rule: str = "bland") -> bool:
        """Maximize. Returns False if unbounded."""
        T = self.T
        bland = rule == "bland"
        streak = 0
        while True:
            cr = self.cost_row
            enter = -1
            if bland:
                for j in range(self.ncols):
                    if allowed[j] and cr[j] > 0:
                        enter = j
                        break
            else:
                top = 0
                for j in range(self.ncols):
                    if allowed[j] and cr[j] > top:
                        top = cr[j]
                        enter = j
            if enter < 0:
                return True
            best = None
            leave = -1
            for i in range(self.m):
                a = T[i][enter]
                if a > 0:
                    ratio = T[i][-1] / a
                    if (
                        best is None
                        or ratio < best
                        or (ratio == best and self.basis[i] < self.basis[leave])
                    ):
                        best = ratio
                        leave = i
            if leave < 0:
                return False
            if best == 0:
                streak += 1
                if streak >= DEGENERATE_STREAK:
                    bland = True
            else:
                streak = 0
            self.pivot(leave, enter)

    def drop_row(self, i: int):
        del self.T[i]
        del self.basis[i]
        self.m -= 1


def solve(lp: LinearProgram, rule: str = "bland", free: str = "eliminate") -> LPOutcome:
    """Solve ``lp`` exactly.

    ``rule`` is ``"hybrid"`` or ``"bland"``. ``free="eliminate"`` removes free
    variables by exact Gaussian elimination before the simplex and recovers
    them afterwards; ``free="split"`` writes each as a difference of two
    nonnegative variables instead.
    """
    if rule not in ("hybrid", "bland"):
        raise ValueError(f"unknown pivot rule {rule!r}")
    if free not in ("eliminate", "split"):
        raise ValueError(f"unknown free-variable treatment {free!r}")
    lp.validate()
    n = lp.num_vars
    lbs = [None if b is None else Fraction(b) for b in lp.lower_bounds]
    A = [[_Q(Fraction(a)) if a else _Q(0) for a in row] for row, _ in lp.equalities]
    b = [_Q(Fraction(v)) for _, v in lp.equalities]
    c = [_Q(Fraction(v)) for v in lp.objective]

    eliminated: List[Tuple[int, int]] = []  # (variable, defining row)
    unconstrained: List[int] = []
    active = list(range(len(A)))
    if free == "eliminate":
        for j in range(n):
            if lbs[j] is not None:
                continue
            cand = [i for i in active if A[i][j]]
            if not cand:
                unconstrained.append(j)
                continue
            # sparsest pivot row limits fill-in
            i = min(cand, key=lambda i: sum(1 for v in A[i] if v))
            inv = 1 / A[i][j]
            prow = A[i] = [v * inv if v else v for v in A[i]]
            b[i] *= inv
            nz = [k for k, v in enumerate(prow) if v]
            active.remove(i)
            for k in active:
                f = A[k][j]
                if f:
                    row = A[k]
                    for col in nz:
                        row[col] -= f * prow[col]
                    b[k] -= f * b[i]
            if c[j]:
                f = c[j]
                for col in nz:
                    c[col] -= f * prow[col]
            eliminated.append((j, i))

    skip = {j for j, _ in eliminated} | set(unconstrained)
    keep = [j for j in range(n) if j not in skip]
    outcome = _solve_reduced(
        [[A[i][j] for j in keep] for i in active],
        [b[i] for i in active],
        [lbs[j] for j in keep],
        [c[j] for j in keep],
        rule,
    )
    if outcome is None:
        return LPOutcome(LPStatus.INFEASIBLE)
    if outcome is False or any(c[j] for j in unconstrained):
        return LPOutcome(LPStatus.UNBOUNDED)

    x = [Fraction(0)] * n
    for j, v in zip(keep, outcome):
        x[j] = v
    for j, i in reversed(eliminated):
        row = A[i]
        x[j] = Fraction(b[i]) - sum(
            (Fraction(row[k]) * x[k] for k in range(n) if k != j and row[k]), Fraction(0)
        )
    value = sum((Fraction(cj) * v for cj, v in zip(lp.objective, x)), Fraction(0))
    return LPOutcome(LPStatus.OPTIMAL, x, value)


def _solve_reduced(A, b, lbs, c, rule):
    """Two-phase simplex on ``max c.x, A x = b``; free variables are split.

    Returns the optimal ``x`` (as ``Fraction``), ``None`` if infeasible,
    ``False`` if unbounded.
    """
    n = len(lbs)
    col_of: List[Tuple[int, int]] = []  # (plus column, minus column or -1)
    ncols = 0
    for j in range(n):
        if lbs[j] is None:
            col_of.append((ncols, ncols + 1))
            ncols += 2
        else:
            col_of.append((ncols, -1))
            ncols += 1

    rows: List[list] = []
    rhs: list = []
    for row, bi in zip(A, b):
        bi = _Q(bi)
        out = [_Q(0)] * ncols
        for j, a in enumerate(row):
            if not a:
                continue
            plus, minus = col_of[j]
            out[plus] = a
            if minus >= 0:
                out[minus] = -a
            else:
                bi -= a * _Q(lbs[j])
        if bi < 0:
            out = [-v for v in out]
            bi = -bi
        rows.append(out)
        rhs.append(bi)

    m = len(rows)
    # phase 1: artificial basis
    total = ncols + m
    full_rows = []
    for i, row in enumerate(rows):
        art = [_Q(0)] * m
        art[i] = _Q(1)
        full_rows.append(row + art)
    tab = _Tableau(full_rows, rhs, total)
    tab.basis = list(range(ncols, total))
    tab.set_objective([0] * ncols + [-1] * m)
    tab.run([True] * total, rule)
    if tab.objective_value() < 0:
        return None

    # drive remaining (zero-level) artificials out of the basis
    i = 0
    while i < tab.m:
        if tab.basis[i] >= ncols:
            row = tab.T[i]
            k = next((k for k in range(ncols) if row[k]), -1)
            if k < 0:
                tab.drop_row(i)
                continue
            tab.pivot(i, k)
        i += 1

    allowed = [True] * ncols + [False] * m
    c_std = [_Q(0)] * total
    for j in range(n):
        plus, minus = col_of[j]
        c_std[plus] = c[j]
        if minus >= 0:
            c_std[minus] = -c[j]
    tab.set_objective(c_std)
    if not tab.run(allowed, rule):
        return False

    y = [Fraction(0)] * total
    for i, bv in enumerate(tab.basis):
        y[bv] = Fraction(tab.T[i][-1])
    x = []
    for j in range(n):
        plus, minus = col_of[j]
        if minus >= 0:
            x.append(y[plus] - y[minus])
        else:
            x.append(lbs[j] + y[plus])
    return x


def check_assignment(lp: LinearProgram, x: Sequence[Fraction]) -> bool:
    """Exact feasibility test of ``x`` against ``lp``."""
    for row, b in lp.equalities:
        if sum((Fraction(a) * v for a, v in zip(row, x) if a), Fraction(0)) != Fraction(b):
            return False
    for v, lb in zip(x, lp.lower_bounds):
        if lb is not None and v < lb:
            return False
    return True
