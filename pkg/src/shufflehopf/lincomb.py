"""Finitely supported rational linear combinations over a hashable basis.

This is the shared vector-space backbone: elements of the free commutative
algebra, tensor elements, packed-word elements and their tensor squares are
all ``LinComb`` instances over different basis types.  Zero coefficients are
never stored, so structural equality is exact equality.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Hashable, Iterable, Iterator

Scalar = Fraction | int

_ZERO = Fraction(0)


class LinComb:
    """Immutable finitely supported map ``basis -> Fraction``."""

    __slots__ = ("_terms",)

    def __init__(self, items: Iterable[tuple[Hashable, Scalar]] | dict = ()):
        terms: dict = {}
        if isinstance(items, dict):
            items = items.items()
        for basis, coeff in items:
            c = terms.get(basis, _ZERO) + Fraction(coeff)
            if c:
                terms[basis] = c
            else:
                terms.pop(basis, None)
        self._terms = terms

    @classmethod
    def _raw(cls, terms: dict) -> "LinComb":
        # Trusted constructor: Fraction values, no zeros.
        obj = cls.__new__(cls)
        obj._terms = terms
        return obj

    @classmethod
    def single(cls, basis: Hashable, coeff: Scalar = 1) -> "LinComb":
        c = Fraction(coeff)
        return cls._raw({basis: c} if c else {})

    @classmethod
    def zero(cls) -> "LinComb":
        return cls._raw({})

    def items(self) -> Iterator[tuple[Hashable, Fraction]]:
        return iter(self._terms.items())

    def support(self) -> Iterator[Hashable]:
        return iter(self._terms)

    def __iter__(self) -> Iterator[Hashable]:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __getitem__(self, basis: Hashable) -> Fraction:
        return self._terms.get(basis, _ZERO)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinComb):
            return NotImplemented
        return self._terms == other._terms

    __hash__ = None  # type: ignore[assignment]

    def __add__(self, other: "LinComb") -> "LinComb":
        if not isinstance(other, LinComb):
            return NotImplemented
        if len(other._terms) > len(self._terms):
            return other + self
        terms = dict(self._terms)
        for basis, coeff in other._terms.items():
            c = terms.get(basis, _ZERO) + coeff
            if c:
                terms[basis] = c
            else:
                del terms[basis]
        return LinComb._raw(terms)

    def __sub__(self, other: "LinComb") -> "LinComb":
        if not isinstance(other, LinComb):
            return NotImplemented
        terms = dict(self._terms)
        for basis, coeff in other._terms.items():
            c = terms.get(basis, _ZERO) - coeff
            if c:
                terms[basis] = c
            else:
                del terms[basis]
        return LinComb._raw(terms)

    def __neg__(self) -> "LinComb":
        return LinComb._raw({b: -c for b, c in self._terms.items()})

    def __rmul__(self, scalar: Scalar) -> "LinComb":
        c = Fraction(scalar)
        if not c:
            return LinComb._raw({})
        return LinComb._raw({b: c * v for b, v in self._terms.items()})

    __mul__ = __rmul__

    def apply(self, fn: Callable[[Hashable], "LinComb"]) -> "LinComb":
        """Extend ``fn: basis -> LinComb`` linearly to this element."""
        acc: dict = {}
        for basis, coeff in self._terms.items():
            for b2, c2 in fn(basis)._terms.items():
                c = acc.get(b2, _ZERO) + coeff * c2
                if c:
                    acc[b2] = c
                else:
                    del acc[b2]
        return LinComb._raw(acc)

    def map_basis(self, fn: Callable[[Hashable], Hashable]) -> "LinComb":
        """Relabel basis elements through an injective-enough ``fn``
        (colliding images are summed)."""
        acc: dict = {}
        for basis, coeff in self._terms.items():
            b2 = fn(basis)
            c = acc.get(b2, _ZERO) + coeff
            if c:
                acc[b2] = c
            else:
                del acc[b2]
        return LinComb._raw(acc)

    @staticmethod
    def bilinear(x: "LinComb", y: "LinComb",
                 fn: Callable[[Hashable, Hashable], "LinComb"]) -> "LinComb":
        """Extend ``fn: basis x basis -> LinComb`` bilinearly."""
        acc: dict = {}
        for bx, cx in x._terms.items():
            for by, cy in y._terms.items():
                scale = cx * cy
                for b2, c2 in fn(bx, by)._terms.items():
                    c = acc.get(b2, _ZERO) + scale * c2
                    if c:
                        acc[b2] = c
                    else:
                        del acc[b2]
        return LinComb._raw(acc)

    def sorted_items(self, key: Callable[[Hashable], object]) -> list:
        return sorted(self._terms.items(), key=lambda kv: key(kv[0]))

    def __repr__(self) -> str:
        if not self._terms:
            return "LinComb(0)"
        inner = ", ".join(f"{b!r}: {c}" for b, c in self._terms.items())
        return f"LinComb({inner})"
