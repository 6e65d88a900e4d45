"""Exact scalar substrate: rationals and dense univariate polynomials.

Rationals are ``fractions.Fraction`` (arbitrary precision, always in lowest
terms with positive denominator, zero canonically 0/1), re-exported here as
``Rational`` together with the one-true text format used on every external
surface: ``"a/b"`` or ``"a"``, sign on the numerator only.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import ParseError

Rational = Fraction

_RATIONAL_RE = re.compile(r"-?\d+(?:/[1-9]\d*)?")


def parse_rational(text: str) -> Fraction:
    """Parse ``"a/b"`` or ``"a"``; the sign may only sit on the numerator."""
    s = text.strip()
    if not _RATIONAL_RE.fullmatch(s):
        raise ParseError(f"not a rational: {text!r} (expected 'a' or 'a/b')")
    return Fraction(s)


def format_rational(q: Fraction) -> str:
    return str(q)


class Poly:
    """Univariate polynomial with Fraction coefficients.

    ``coeffs[i]`` is the coefficient of t**i.  Trailing zeros are stripped at
    construction, so equality is structural; the zero polynomial has an empty
    coefficient tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [Fraction(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def const(cls, c) -> "Poly":
        return cls((c,))

    @classmethod
    def x(cls) -> "Poly":
        return cls((0, 1))

    @classmethod
    def monomial(cls, k: int, c=1) -> "Poly":
        return cls((0,) * k + (c,))

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    def coefficient(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __neg__(self) -> "Poly":
        return Poly(tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, Poly):
            if not self.coeffs or not other.coeffs:
                return Poly()
            out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if not a:
                    continue
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] += a * b
            return Poly(out)
        return self.scale(other)

    def __rmul__(self, scalar):
        return self.scale(scalar)

    def scale(self, scalar) -> "Poly":
        c = Fraction(scalar)
        return Poly(tuple(c * v for v in self.coeffs))

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = Poly.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def compose(self, q: "Poly") -> "Poly":
        """Substitute ``q`` for the variable (Horner)."""
        out = Poly()
        for c in reversed(self.coeffs):
            out = out * q + Poly.const(c)
        return out

    def eval(self, at: Fraction) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * at + c
        return acc

    def truncated(self, max_degree: int) -> "Poly":
        return Poly(self.coeffs[: max_degree + 1])

    def divided_by_x(self) -> "Poly":
        """Divide by t; the constant term must be zero."""
        if self.coeffs and self.coeffs[0]:
            raise ValueError("polynomial has a nonzero constant term")
        return Poly(self.coeffs[1:])

    def antiderivative(self) -> "Poly":
        return Poly((Fraction(0),) + tuple(
            c / (i + 1) for i, c in enumerate(self.coeffs)))

    def __repr__(self) -> str:
        if not self.coeffs:
            return "Poly(0)"
        parts = [f"{c}*t^{i}" for i, c in enumerate(self.coeffs) if c]
        return "Poly(" + " + ".join(parts) + ")"


def integrate(p: Poly, a: Fraction, b: Fraction) -> Fraction:
    """Exact definite integral of ``p`` from ``a`` to ``b``."""
    anti = p.antiderivative()
    return anti.eval(Fraction(b)) - anti.eval(Fraction(a))
