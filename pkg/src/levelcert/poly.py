"""Exact sparse multivariate polynomials over the rationals.

A polynomial in ``n`` variables is a map from exponent tuples (multi-indices)
to nonzero ``Fraction`` coefficients. Values are immutable; every operation
returns a new polynomial. Monomials are ordered graded-lexicographically with
``x1 > x2 > ... > xn``.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from numbers import Rational
from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple

MultiIndex = Tuple[int, ...]

# Degree of the zero polynomial. Kept as -inf so it never masquerades as a
# real degree but still compares below every natural number.
ZERO_DEGREE = float("-inf")


class DimensionError(ValueError):
    pass


class PolynomialParseError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        self.text = text
        self.pos = pos
        super().__init__(f"{message} at position {pos}: {text!r}")


def grlex_key(alpha: MultiIndex):
    return (sum(alpha), alpha)


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational)):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c)
    raise TypeError(f"exact coefficient required, got {type(c).__name__}")


class Polynomial:
    """Immutable sparse polynomial with exact rational coefficients."""

    __slots__ = ("dim", "_terms", "_hash")

    def __init__(self, dim: int, terms: Optional[Mapping[MultiIndex, object]] = None):
        if dim < 0:
            raise ValueError("dimension must be nonnegative")
        clean: Dict[MultiIndex, Fraction] = {}
        for alpha, c in (terms or {}).items():
            alpha = tuple(int(e) for e in alpha)
            if len(alpha) != dim:
                raise DimensionError(f"multi-index {alpha} has length {len(alpha)}, expected {dim}")
            if any(e < 0 for e in alpha):
                raise ValueError(f"negative exponent in {alpha}")
            c = _as_fraction(c)
            if c:
                clean[alpha] = clean.get(alpha, 0) + c
                if not clean[alpha]:
                    del clean[alpha]
        self.dim = dim
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, dim: int, terms: Dict[MultiIndex, Fraction]) -> "Polynomial":
        # trusted constructor: caller guarantees keys are valid and values nonzero
        p = object.__new__(cls)
        p.dim = dim
        p._terms = terms
        p._hash = None
        return p

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, dim: int) -> "Polynomial":
        return cls._raw(dim, {})

    @classmethod
    def constant(cls, dim: int, c) -> "Polynomial":
        return cls(dim, {(0,) * dim: c})

    @classmethod
    def monomial(cls, alpha: Sequence[int], c=1) -> "Polynomial":
        alpha = tuple(alpha)
        return cls(len(alpha), {alpha: c})

    @classmethod
    def variable(cls, dim: int, i: int) -> "Polynomial":
        """The coordinate ``x_{i+1}`` (0-based index ``i``)."""
        alpha = [0] * dim
        alpha[i] = 1
        return cls(dim, {tuple(alpha): 1})

    # -- accessors --------------------------------------------------------

    @property
    def terms(self) -> Mapping[MultiIndex, Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def support(self) -> frozenset:
        return frozenset(self._terms)

    def coeff(self, alpha: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(alpha), Fraction(0))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def degree(self):
        if not self._terms:
            return ZERO_DEGREE
        return max(sum(a) for a in self._terms)

    def is_homogeneous(self) -> bool:
        return len({sum(a) for a in self._terms}) <= 1

    def leading_term(self) -> Tuple[MultiIndex, Fraction]:
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        alpha = max(self._terms, key=grlex_key)
        return alpha, self._terms[alpha]

    def constant_term(self) -> Fraction:
        return self.coeff((0,) * self.dim)

    def min_coefficient(self) -> Optional[Fraction]:
        return min(self._terms.values()) if self._terms else None

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.dim != self.dim:
                raise DimensionError(f"dimension mismatch: {self.dim} vs {other.dim}")
            return other
        if isinstance(other, (int, Fraction, Rational)):
            return Polynomial.constant(self.dim, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for alpha, c in other._terms.items():
            s = out.get(alpha, 0) + c
            if s:
                out[alpha] = s
            else:
                out.pop(alpha, None)
        return Polynomial._raw(self.dim, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.dim, {a: -c for a, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Rational)) and not isinstance(other, bool):
            c = _as_fraction(other)
            if not c:
                return Polynomial.zero(self.dim)
            return Polynomial._raw(self.dim, {a: v * c for a, v in self._terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: Dict[MultiIndex, Fraction] = {}
        for a, ca in self._terms.items():
            for b, cb in other._terms.items():
                g = tuple(x + y for x, y in zip(a, b))
                out[g] = out.get(g, 0) + ca * cb
        return Polynomial._raw(self.dim, {g: c for g, c in out.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, c):
        c = _as_fraction(c)
        if not c:
            raise ZeroDivisionError("polynomial divided by zero scalar")
        return self * (1 / c)

    def __pow__(self, d: int):
        return power(self, d)

    # -- comparison / hashing --------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.dim == other.dim and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == Polynomial.constant(self.dim, other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.dim, frozenset(self._terms.items())))
        return self._hash

    def __call__(self, *point):
        if len(point) == 1 and isinstance(point[0], (list, tuple)):
            point = point[0]
        return evaluate(self, point)

    def __repr__(self):
        return f"Polynomial({self.dim}, {format_polynomial(self)!r})"

    def __str__(self):
        return format_polynomial(self)


# -- functional API ---------------------------------------------------------


def add(p: Polynomial, q: Polynomial) -> Polynomial:
    if p.dim != q.dim:
        raise DimensionError(f"dimension mismatch: {p.dim} vs {q.dim}")
    return p + q


def mul(p: Polynomial, q: Polynomial) -> Polynomial:
    if p.dim != q.dim:
        raise DimensionError(f"dimension mismatch: {p.dim} vs {q.dim}")
    return p * q


def power(p: Polynomial, d: int) -> Polynomial:
    """``p**d`` by repeated squaring; ``p**0 == 1`` (also for ``p == 0``)."""
    if d < 0:
        raise ValueError("exponent must be nonnegative")
    result = Polynomial.constant(p.dim, 1)
    base = p
    while d:
        if d & 1:
            result = result * base
        d >>= 1
        if d:
            base = base * base
    return result


def evaluate(p: Polynomial, point: Sequence):
    """Evaluate ``p`` at ``point``.

    Exact (a ``Fraction``) when every coordinate is an int/Fraction,
    a float otherwise.
    """
    if len(point) != p.dim:
        raise DimensionError(f"point has length {len(point)}, expected {p.dim}")
    exact = all(isinstance(v, (int, Fraction)) for v in point)
    if exact:
        xs = [Fraction(v) for v in point]
        total = Fraction(0)
        for alpha, c in p.items():
            total += c * math.prod((x**e for x, e in zip(xs, alpha) if e), start=Fraction(1))
        return total
    xs = [float(v) for v in point]
    total = 0.0
    for alpha, c in p.items():
        total += float(c) * math.prod(x**e for x, e in zip(xs, alpha) if e)
    return total


def divmod_poly(p: Polynomial, g: Polynomial) -> Tuple[Polynomial, Polynomial]:
    """Single-divisor division under grlex: ``p == quotient*g + remainder``.

    No term of the remainder is divisible by the leading monomial of ``g``.
    """
    if p.dim != g.dim:
        raise DimensionError(f"dimension mismatch: {p.dim} vs {g.dim}")
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    lm, lc = g.leading_term()
    g_terms = list(g.items())
    work: Dict[MultiIndex, Fraction] = dict(p.items())
    quot: Dict[MultiIndex, Fraction] = {}
    rem: Dict[MultiIndex, Fraction] = {}
    while work:
        alpha = max(work, key=grlex_key)
        c = work[alpha]
        shift = tuple(a - b for a, b in zip(alpha, lm))
        if min(shift) < 0:
            rem[alpha] = c
            del work[alpha]
            continue
        t = c / lc
        quot[shift] = quot.get(shift, 0) + t
        for beta, cb in g_terms:
            k = tuple(s + b for s, b in zip(shift, beta))
            v = work.get(k, 0) - t * cb
            if v:
                work[k] = v
            else:
                work.pop(k, None)
    return (
        Polynomial._raw(p.dim, {a: c for a, c in quot.items() if c}),
        Polynomial._raw(p.dim, rem),
    )


def reduce_mod(f: Polynomial, g: Polynomial) -> Polynomial:
    """Normal form of ``f`` modulo the principal ideal ``(g)``."""
    return divmod_poly(f, g)[1]


def divide_exact(p: Polynomial, g: Polynomial) -> Optional[Polynomial]:
    """Return ``h`` with ``p == h*g``, or ``None`` if ``g`` does not divide ``p``."""
    q, r = divmod_poly(p, g)
    return q if r.is_zero() else None


# -- text format ------------------------------------------------------------

_TOKEN = re.compile(
    r"""\s*(?:
        (?P<num>\d+)
      | (?P<var>x(?P<idx>\d+))
      | (?P<op>[-+*^/()−])
    )""",
    re.VERBOSE,
)


def _tokenize(text: str):
    pos = 0
    toks = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            start = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise PolynomialParseError(f"unexpected character {text[start]!r}", text, start)
        start = m.start(m.lastgroup)
        if m.group("num") is not None:
            toks.append(("num", int(m.group("num")), start))
        elif m.group("var") is not None:
            toks.append(("var", int(m.group("idx")), start))
        else:
            op = m.group("op").replace("−", "-")
            toks.append((op, op, start))
        pos = m.end()
    toks.append(("end", None, len(text)))
    return toks


def parse_polynomial(text: str, dim: int) -> Polynomial:
    """Parse ``text`` such as ``"3/2*x1^2*x2 - 1"`` into a polynomial in ``dim`` variables.

    Coefficients may be written bare (``3/2*x1``) or parenthesised
    (``(3/2)*x1``), which is the form produced by :func:`format_polynomial`.
    """
    toks = _tokenize(text)
    i = 0

    def peek():
        return toks[i]

    def take(kind=None):
        nonlocal i
        tok = toks[i]
        if kind is not None and tok[0] != kind:
            want = {"num": "integer", "var": "variable", "end": "end of input"}.get(kind, repr(kind))
            raise PolynomialParseError(f"expected {want}", text, tok[2])
        i += 1
        return tok

    def rational():
        if peek()[0] == "(":
            take("(")
            neg = False
            if peek()[0] in ("+", "-"):
                neg = take()[0] == "-"
            c = rational()
            take(")")
            return -c if neg else c
        num = take("num")[1]
        if peek()[0] == "/":
            take("/")
            den_tok = take("num")
            if den_tok[1] == 0:
                raise PolynomialParseError("zero denominator", text, den_tok[2])
            return Fraction(num, den_tok[1])
        return Fraction(num)

    def factor(alpha):
        kind, idx, pos = take("var")
        if not 1 <= idx <= dim:
            raise PolynomialParseError(f"variable x{idx} out of range for n={dim}", text, pos)
        e = 1
        if peek()[0] == "^":
            take("^")
            e = take("num")[1]
        alpha[idx - 1] += e

    terms: Dict[MultiIndex, Fraction] = {}
    first = True
    while True:
        kind = peek()[0]
        sign = 1
        if kind in ("+", "-"):
            sign = -1 if take()[0] == "-" else 1
        elif not first:
            if kind == "end":
                break
            raise PolynomialParseError("expected '+' or '-'", text, peek()[2])
        elif kind == "end":
            raise PolynomialParseError("empty polynomial", text, peek()[2])
        first = False

        alpha = [0] * dim
        coeff = Fraction(1)
        if peek()[0] in ("num", "("):
            coeff = rational()
            if peek()[0] == "*":
                take("*")
                factor(alpha)
        else:
            factor(alpha)
        while peek()[0] == "*":
            take("*")
            factor(alpha)
        key = tuple(alpha)
        terms[key] = terms.get(key, 0) + sign * coeff
        if peek()[0] == "end":
            break
        if peek()[0] not in ("+", "-"):
            raise PolynomialParseError("expected '+' or '-'", text, peek()[2])
    return Polynomial(dim, terms)


def format_order_key(alpha: MultiIndex):
    # ascending total degree, x1-heavy first within a degree
    return (sum(alpha), tuple(-e for e in alpha))


def _format_monomial(alpha: MultiIndex) -> str:
    parts = []
    for i, e in enumerate(alpha, start=1):
        if e == 1:
            parts.append(f"x{i}")
        elif e > 1:
            parts.append(f"x{i}^{e}")
    return "*".join(parts)


def _format_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"({c.numerator}/{c.denominator})"


def format_polynomial(p: Polynomial) -> str:
    if p.is_zero():
        return "0"
    out = []
    for alpha in sorted(p.support(), key=format_order_key):
        c = p.coeff(alpha)
        sign = "-" if c < 0 else "+"
        a = abs(c)
        mono = _format_monomial(alpha)
        if not mono:
            body = _format_coeff(a)
        elif a == 1:
            body = mono
        else:
            body = f"{_format_coeff(a)}*{mono}"
        if not out:
            out.append(body if sign == "+" else "-" + body)
        else:
            out.append(sign + body)
    return "".join(out)


def from_terms(dim: int, terms: Iterable[Tuple[Sequence[int], object]]) -> Polynomial:
    acc: Dict[MultiIndex, Fraction] = {}
    for alpha, c in terms:
        alpha = tuple(alpha)
        acc[alpha] = acc.get(alpha, 0) + _as_fraction(c)
    return Polynomial(dim, acc)
