"""The free nonunital commutative algebra on generators a_1, a_2, ...

Monomials are nonempty multisets of generator indices, kept sorted so that
equality is structural; elements are rational linear combinations of
monomials.  Working over this algebra is what turns operator identities into
finite computations: an identity between word operations that commute with
algebra morphisms holds for every commutative algebra exactly when it holds
here on words of pairwise distinct generators.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Mapping

from .errors import MissingImageError, ParseError
from .lincomb import LinComb

AElem = LinComb  # over Monomial


@dataclass(frozen=True)
class Monomial:
    """A product of generators, e.g. {a_2, a_3, a_3}; never empty."""

    factors: tuple[int, ...]

    def __post_init__(self):
        fs = tuple(sorted(self.factors))
        if not fs:
            raise ValueError("monomials are nonempty (the algebra has no unit)")
        if fs[0] < 1:
            raise ValueError("generator indices start at 1")
        object.__setattr__(self, "factors", fs)

    @property
    def degree(self) -> int:
        return len(self.factors)

    def sort_key(self) -> tuple:
        # Graded lexicographic on the sorted factor sequence.
        return (len(self.factors), self.factors)

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial(self.factors + other.factors)

    def __str__(self) -> str:
        return ".".join(str(i) for i in self.factors)


def generator(i: int) -> Monomial:
    return Monomial((i,))


def mono_mul(m: Monomial, n: Monomial) -> Monomial:
    """Multiset union of the factors."""
    return m * n


def merge_monomials(monos) -> Monomial:
    factors: tuple[int, ...] = ()
    for m in monos:
        factors += m.factors
    return Monomial(factors)


_MONOMIAL_RE = re.compile(r"[1-9]\d*(?:\.[1-9]\d*)*")


def parse_monomial(text: str) -> Monomial:
    s = text.strip()
    if not _MONOMIAL_RE.fullmatch(s):
        raise ParseError(f"not a monomial: {text!r} (expected e.g. '2' or '2.3')")
    return Monomial(tuple(int(tok) for tok in s.split(".")))


def gen_elem(i: int) -> AElem:
    return LinComb.single(generator(i))


def mono_elem(m: Monomial) -> AElem:
    return LinComb.single(m)


def aelem_mul(x: AElem, y: AElem) -> AElem:
    return LinComb.bilinear(x, y, lambda m, n: LinComb.single(m * n))


def substitute(e: AElem, images: Mapping[int, AElem]) -> AElem:
    """Apply the unique algebra-morphism extension of ``images`` to ``e``.

    Each monomial maps to the product of the images of its factors; a
    generator without an image raises ``MissingImageError``.
    """
    def on_monomial(m: Monomial) -> AElem:
        acc: AElem | None = None
        for g in m.factors:
            if g not in images:
                raise MissingImageError(f"no image for generator {g}")
            acc = images[g] if acc is None else aelem_mul(acc, images[g])
        assert acc is not None
        return acc

    return e.apply(on_monomial)
