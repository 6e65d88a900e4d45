"""Truncated formal power series without constant term, under substitution.

A ``Series`` of order N carries exactly the coefficients p_1..p_N of
X, ..., X^N.  All arithmetic is exact through order N; asking for a
coefficient beyond N is an error, never a silent zero.  Because arguments of
a composition have no constant term, composition and compositional inversion
are exact in every retained coefficient.

The formal derivative legitimately has a constant term, so it is returned as
a plain polynomial (a different type on purpose).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .errors import LeadingCoefficientError, OrderError, ParseError
from .exact import Poly, parse_rational


@dataclass(frozen=True)
class Series:
    """Coefficients p_1..p_N of a series with zero constant term."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))
        if not self.coeffs:
            raise ValueError("a series carries at least the X coefficient")

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def coeff(self, i: int) -> Fraction:
        """Coefficient of X^i, 1-based; beyond the order it is an error."""
        if i < 1:
            raise ValueError("series coefficients start at X^1")
        if i > len(self.coeffs):
            raise OrderError(
                f"coefficient {i} requested from a series of order {len(self.coeffs)}")
        return self.coeffs[i - 1]

    def as_poly(self) -> Poly:
        return Poly((Fraction(0),) + self.coeffs)

    def truncated(self, order: int) -> "Series":
        if order < 1 or order > len(self.coeffs):
            raise OrderError(f"cannot truncate order {len(self.coeffs)} to {order}")
        return Series(self.coeffs[:order])

    def __add__(self, other: "Series") -> "Series":
        _check_orders(self, other)
        return Series(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "Series") -> "Series":
        _check_orders(self, other)
        return Series(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def scale(self, scalar) -> "Series":
        c = Fraction(scalar)
        return Series(tuple(c * v for v in self.coeffs))

    def __str__(self) -> str:
        return ",".join(str(c) for c in self.coeffs)


def _check_orders(p: Series, q: Series) -> None:
    if p.order != q.order:
        raise OrderError(f"series orders differ: {p.order} vs {q.order}")


def series(coeffs, order: int | None = None) -> Series:
    cs = [Fraction(c) for c in coeffs]
    if order is not None:
        if len(cs) > order:
            cs = cs[:order]
        while len(cs) < order:
            cs.append(Fraction(0))
    return Series(tuple(cs))


def from_poly(p: Poly, order: int) -> Series:
    if p.coefficient(0):
        raise ValueError("series have no constant term")
    return series((p.coefficient(i) for i in range(1, order + 1)), order)


def compose(P: Series, Q: Series) -> Series:
    """P(Q(X)) truncated at the common order."""
    _check_orders(P, Q)
    n = P.order
    qpoly = Q.as_poly()
    acc = Poly()
    power = Poly.const(1)
    for i in range(1, n + 1):
        power = (power * qpoly).truncated(n)
        c = P.coeff(i)
        if c:
            acc = acc + power.scale(c)
    return from_poly(acc, n)


def identity_series(order: int) -> Series:
    return series([1], order)


def inverse(P: Series) -> Series:
    """Compositional inverse W with W(P) = P(W) = X through the order.

    Solved degree by degree; requires p1 != 0.
    """
    n = P.order
    p1 = P.coeff(1)
    if p1 == 0:
        raise LeadingCoefficientError("compositional inverse needs p1 != 0")
    w = [Fraction(0)] * (n + 1)  # w[i] is the X^i coefficient
    w[1] = 1 / p1
    ppoly = P.as_poly()
    # powers[i] = P^i truncated; rebuilt incrementally
    power = ppoly.truncated(n)
    powers: dict[int, Poly] = {1: power}
    for i in range(2, n + 1):
        power = (power * ppoly).truncated(n)
        powers[i] = power
    for m in range(2, n + 1):
        acc = Fraction(0)
        for i in range(1, m):
            if w[i]:
                acc += w[i] * powers[i].coefficient(m)
        w[m] = -acc / (p1 ** m)
    return Series(tuple(w[1:]))


def derivative(P: Series) -> Poly:
    """Formal derivative; the result has a genuine constant slot, so it is
    returned as a polynomial with coefficients valid through degree N-1."""
    return Poly(tuple((i + 1) * c for i, c in enumerate(P.coeffs)))


def divide_truncated(num: Poly, den: Poly, order: int) -> Poly:
    """Quotient num/den through the given degree; den must have an
    invertible constant term."""
    d0 = den.coefficient(0)
    if d0 == 0:
        raise LeadingCoefficientError("division needs a unit constant term")
    out = [Fraction(0)] * (order + 1)
    for m in range(order + 1):
        acc = num.coefficient(m)
        for j in range(m):
            if out[j]:
                acc -= out[j] * den.coefficient(m - j)
        out[m] = acc / d0
    return Poly(out)


def eq_series(q, order: int) -> Series:
    """The interpolating exponential: coefficient q^(n-1)/n! at X^n.
    At q=0 it is X; at q=1 it is exp(X)-1."""
    qq = Fraction(q)
    return series((qq ** (n - 1) / factorial(n) for n in range(1, order + 1)), order)


def exp_minus_one(order: int) -> Series:
    return eq_series(1, order)


def log_one_plus(order: int) -> Series:
    return series((Fraction((-1) ** (n - 1), n) for n in range(1, order + 1)), order)


def xlog_one_plus(order: int) -> Series:
    """(1+X)·log(1+X): coefficient 1 at X and (-1)^k/(k(k-1)) at X^k, k >= 2."""
    cs = [Fraction(1)]
    for k in range(2, order + 1):
        cs.append(Fraction((-1) ** k, k * (k - 1)))
    return series(cs, order)


def monomial_series(k: int, order: int) -> Series:
    """X^k as a truncated series."""
    if k < 1:
        raise ValueError("exponent must be at least 1")
    if k > order:
        raise OrderError(f"X^{k} does not fit in order {order}")
    cs = [Fraction(0)] * order
    cs[k - 1] = Fraction(1)
    return Series(tuple(cs))


_NAMED = {
    "id": identity_series,
    "exp1": exp_minus_one,
    "log1p": log_one_plus,
    "xlog1p": xlog_one_plus,
}


def named_series(name: str, order: int, q=None) -> Series:
    """Build one of the named series ('id', 'exp1', 'log1p', 'xlog1p', or
    'Eq' with parameter q) at the given order."""
    if order < 1:
        raise ValueError("order must be at least 1")
    if name == "Eq":
        if q is None:
            raise ParseError("series 'Eq' needs its parameter q")
        return eq_series(q, order)
    try:
        builder = _NAMED[name]
    except KeyError:
        raise ParseError(
            f"unknown series name {name!r} (expected id, exp1, log1p, xlog1p, Eq)"
        ) from None
    return builder(order)


def parse_series(text: str, order: int) -> Series:
    """Parse a CLI series literal: a name, 'Eq:q', or 'coeffs:p1,p2,...'.

    Explicit coefficient lists fix their own order; named series are built at
    the requested order.
    """
    s = text.strip()
    if s.startswith("Eq:"):
        return eq_series(parse_rational(s[3:]), order)
    if s.startswith("coeffs:"):
        body = s[len("coeffs:"):]
        if not body:
            raise ParseError("empty coefficient list")
        return Series(tuple(parse_rational(tok) for tok in body.split(",")))
    return named_series(s, order)
