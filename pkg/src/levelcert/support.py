"""Support sets of polynomials and their Minkowski arithmetic."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from typing import Iterable, List, Tuple

from .poly import DimensionError, MultiIndex, Polynomial


@dataclass(frozen=True)
class SupportSet:
    """A finite set of multi-indices of a fixed length ``dim``."""

    dim: int
    members: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        members = frozenset(tuple(a) for a in self.members)
        for a in members:
            if len(a) != self.dim:
                raise DimensionError(f"multi-index {a} has length {len(a)}, expected {self.dim}")
        object.__setattr__(self, "members", members)

    @classmethod
    def of(cls, dim: int, members: Iterable[Iterable[int]]) -> "SupportSet":
        return cls(dim, frozenset(tuple(a) for a in members))

    @classmethod
    def origin(cls, dim: int) -> "SupportSet":
        return cls(dim, frozenset([(0,) * dim]))

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.members)

    def __contains__(self, alpha):
        return tuple(alpha) in self.members

    def _check(self, other: "SupportSet"):
        if self.dim != other.dim:
            raise DimensionError(f"dimension mismatch: {self.dim} vs {other.dim}")

    def __or__(self, other: "SupportSet") -> "SupportSet":
        self._check(other)
        return SupportSet(self.dim, self.members | other.members)

    def __and__(self, other: "SupportSet") -> "SupportSet":
        self._check(other)
        return SupportSet(self.dim, self.members & other.members)

    def __sub__(self, other: "SupportSet") -> "SupportSet":
        self._check(other)
        return SupportSet(self.dim, self.members - other.members)

    def __le__(self, other: "SupportSet") -> bool:
        self._check(other)
        return self.members <= other.members

    def __add__(self, other: "SupportSet") -> "SupportSet":
        return minkowski_sum(self, other)

    def sorted(self) -> List[MultiIndex]:
        """Members in ascending graded-lex order."""
        return sorted(self.members, key=lambda a: (sum(a), a))

    def max_degree(self) -> int:
        return max((sum(a) for a in self.members), default=-1)


def log_set(p: Polynomial) -> SupportSet:
    """Exponents carrying a positive coefficient; ``p`` must have no negative coefficient."""
    neg = [a for a, c in p.items() if c < 0]
    if neg:
        raise ValueError(f"log_set needs nonnegative coefficients; negative at {sorted(neg)}")
    return SupportSet(p.dim, p.support())


def support_of(p: Polynomial) -> SupportSet:
    return SupportSet(p.dim, p.support())


def minkowski_sum(J: SupportSet, K: SupportSet) -> SupportSet:
    J._check(K)
    return SupportSet(
        J.dim, frozenset(tuple(x + y for x, y in zip(a, b)) for a in J.members for b in K.members)
    )


def minkowski_power(J: SupportSet, d: int) -> SupportSet:
    """``d``-fold Minkowski sum of ``J`` with itself; ``d = 0`` gives the origin."""
    if d < 0:
        raise ValueError("d must be nonnegative")
    out = SupportSet.origin(J.dim)
    for _ in range(d):
        out = minkowski_sum(out, J)
    return out


def cumulative_support(r: Polynomial, N: int) -> SupportSet:
    """Union of ``d * Log(r)`` over ``d = 0..N``."""
    if r.is_zero():
        raise ValueError("r must be nonzero")
    J = log_set(r)
    layer = SupportSet.origin(r.dim)
    acc = set(layer.members)
    for _ in range(N):
        layer = minkowski_sum(layer, J)
        acc |= layer.members
    return SupportSet(r.dim, frozenset(acc))


def grade_slice(n: int, d: int) -> SupportSet:
    """All multi-indices in ``n`` variables of total degree exactly ``d``."""
    if d < 0:
        raise ValueError("d must be nonnegative")
    out = set()
    for combo in combinations_with_replacement(range(n), d):
        alpha = [0] * n
        for i in combo:
            alpha[i] += 1
        out.add(tuple(alpha))
    if n == 0:
        out = {()} if d == 0 else set()
    return SupportSet(n, frozenset(out))


def degree_slab(n: int, D: int) -> SupportSet:
    """All multi-indices of total degree at most ``D`` (empty when ``D < 0``)."""
    acc = set()
    for d in range(D + 1):
        acc |= grade_slice(n, d).members
    return SupportSet(n, frozenset(acc))


def unit_indices(n: int) -> List[MultiIndex]:
    return [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]


@dataclass(frozen=True)
class PreconditionReport:
    """Outcome of checking that ``r`` has nonnegative coefficients and every ``x_i`` in its support."""

    missing_units: Tuple[MultiIndex, ...]
    negative_terms: Tuple[Tuple[MultiIndex, object], ...]

    @property
    def passed(self) -> bool:
        return not self.missing_units and not self.negative_terms

    def __bool__(self):
        return self.passed

    def explain(self) -> str:
        if self.passed:
            return "ok: r has nonnegative coefficients and contains every linear monomial"
        lines = []
        if self.missing_units:
            names = ", ".join(f"x{a.index(1) + 1} {a}" for a in self.missing_units)
            lines.append(f"missing linear monomial(s): {names}")
        if self.negative_terms:
            terms = ", ".join(f"{a}: {c}" for a, c in self.negative_terms)
            lines.append(f"negative coefficient(s): {terms}")
        return "; ".join(lines)


def check_precondition(r: Polynomial) -> PreconditionReport:
    negative = tuple(sorted(((a, c) for a, c in r.items() if c < 0), key=lambda t: t[0]))
    present = {a for a, c in r.items() if c > 0}
    missing = tuple(u for u in unit_indices(r.dim) if u not in present)
    return PreconditionReport(missing, negative)
