"""Tensor words over the free commutative algebra, with the deconcatenation
coproduct and the product family: concatenation, the two half-shuffles, the
shuffle, the quasi-shuffle, and the twisted shuffle obtained by conjugating
the shuffle with a series-indexed coalgebra automorphism.

The half-shuffles are computed by the head-recursion

    x < y  =  x_1 (x' shuffle y)        (x = x_1 x', both arguments nonempty)

and the shuffle is their sum, with the empty word as unit.  The quasi-shuffle
adds a third branch that merges the two head letters with the internal
product of the base algebra.  A second, independent route to the half-shuffles
— summation over permutations with at most one descent, at the split point —
is provided for cross-checking.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from typing import Callable, Mapping

from .errors import EmptyWordError, LeadingCoefficientError, OrderError, ParseError
from .freecomm import AElem, Monomial, generator, parse_monomial, substitute, mono_elem
from .lincomb import LinComb

TElem = LinComb       # over TensorWord
TPairElem = LinComb   # over (TensorWord, TensorWord)


@dataclass(frozen=True)
class TensorWord:
    """A finite (possibly empty) sequence of monomials; one basis tensor."""

    letters: tuple[Monomial, ...] = ()

    def __len__(self) -> int:
        return len(self.letters)

    def sort_key(self) -> tuple:
        # Canonical term order: full-length tensors first, then lexicographic.
        return (-len(self.letters), tuple(m.sort_key() for m in self.letters))

    def __str__(self) -> str:
        if not self.letters:
            return "()"
        return " ".join(str(m) for m in self.letters)


EMPTY_WORD = TensorWord(())


def word_of_generators(indices) -> TensorWord:
    return TensorWord(tuple(generator(i) for i in indices))


def generic_word(n: int, start: int = 1) -> TensorWord:
    """The word a_start ... a_{start+n-1} of pairwise distinct generators."""
    return word_of_generators(range(start, start + n))


def word_elem(w: TensorWord) -> TElem:
    return LinComb.single(w)


def parse_tensor_word(text: str) -> TensorWord:
    s = text.strip()
    if s == "()":
        return EMPTY_WORD
    if not s:
        raise ParseError("empty tensor-word literal (use '()' for the empty word)")
    return TensorWord(tuple(parse_monomial(tok) for tok in s.split()))


def format_telem(x: TElem) -> str:
    """Canonical rendering: 'c*[w]' terms joined with signed separators."""
    if not x:
        return "0"
    parts: list[str] = []
    for word, coeff in x.sorted_items(TensorWord.sort_key):
        mag = -coeff if coeff < 0 else coeff
        body = f"{mag}*[{word}]"
        if not parts:
            parts.append(f"-{body}" if coeff < 0 else body)
        else:
            parts.append(("- " if coeff < 0 else "+ ") + body)
    return " ".join(parts)


def telem_terms_json(x: TElem) -> list[dict]:
    """Lossless JSON form: outer list = tensor slots, inner = factor indices."""
    out = []
    for word, coeff in x.sorted_items(TensorWord.sort_key):
        out.append({
            "coeff": str(coeff),
            "word": [[str(i) for i in m.factors] for m in word.letters],
        })
    return out


def _as_telem(x) -> TElem:
    if isinstance(x, TensorWord):
        return LinComb.single(x)
    return x


def _prepend(m: Monomial, lc: LinComb) -> LinComb:
    return lc.map_basis(lambda w: TensorWord((m,) + w.letters))


def concat_words(x: TensorWord, y: TensorWord) -> TensorWord:
    return TensorWord(x.letters + y.letters)


def concat(x: TElem, y: TElem) -> TElem:
    """Bilinear extension of sequence concatenation."""
    return LinComb.bilinear(_as_telem(x), _as_telem(y),
                            lambda a, b: LinComb.single(concat_words(a, b)))


@lru_cache(maxsize=None)
def _shuffle_ww(x: TensorWord, y: TensorWord) -> LinComb:
    if not x.letters:
        return LinComb.single(y)
    if not y.letters:
        return LinComb.single(x)
    tx = TensorWord(x.letters[1:])
    ty = TensorWord(y.letters[1:])
    return (_prepend(x.letters[0], _shuffle_ww(tx, y))
            + _prepend(y.letters[0], _shuffle_ww(x, ty)))


@lru_cache(maxsize=None)
def _qshuffle_ww(x: TensorWord, y: TensorWord) -> LinComb:
    if not x.letters:
        return LinComb.single(y)
    if not y.letters:
        return LinComb.single(x)
    hx, tx = x.letters[0], TensorWord(x.letters[1:])
    hy, ty = y.letters[0], TensorWord(y.letters[1:])
    return (_prepend(hx, _qshuffle_ww(tx, y))
            + _prepend(hy, _qshuffle_ww(x, ty))
            + _prepend(hx * hy, _qshuffle_ww(tx, ty)))


def _half_shuffle_ww(x: TensorWord, y: TensorWord) -> LinComb:
    if not x.letters or not y.letters:
        raise EmptyWordError("half-shuffles are undefined on the empty word")
    return _prepend(x.letters[0], _shuffle_ww(TensorWord(x.letters[1:]), y))


def half_shuffle_left(x, y) -> TElem:
    """x < y: all interleavings that keep the first letter of x first;
    bilinear, and an error on the empty word."""
    return LinComb.bilinear(_as_telem(x), _as_telem(y), _half_shuffle_ww)


def half_shuffle_right(x, y) -> TElem:
    return LinComb.bilinear(_as_telem(x), _as_telem(y),
                            lambda a, b: _half_shuffle_ww(b, a))


def shuffle(x, y) -> TElem:
    """Shuffle product; the empty word is the unit."""
    return LinComb.bilinear(_as_telem(x), _as_telem(y), _shuffle_ww)


def qshuffle(x, y) -> TElem:
    """Quasi-shuffle product: interleavings plus head merges through the
    internal product; the empty word is the unit."""
    return LinComb.bilinear(_as_telem(x), _as_telem(y), _qshuffle_ww)


def shuffle_via_descents(x: TensorWord, y: TensorWord) -> tuple[TElem, TElem]:
    """Independent route to the half-shuffle pair (x < y, x > y).

    Enumerates the permutations of the concatenated letter sequence that have
    at most one descent, located at the seam position k = |x|, and splits the
    resulting words by whether the first output letter comes from x or y.
    Intended for cross-checks at small degree.
    """
    if not x.letters or not y.letters:
        raise EmptyWordError("half-shuffles are undefined on the empty word")
    k, total = len(x.letters), len(x.letters) + len(y.letters)
    letters = x.letters + y.letters
    left: dict = {}
    right: dict = {}
    for alpha in permutations(range(1, total + 1)):
        descents = {i + 1 for i in range(total - 1) if alpha[i] > alpha[i + 1]}
        if not descents <= {k}:
            continue
        inv = [0] * (total + 1)
        for pos, val in enumerate(alpha, start=1):
            inv[val] = pos
        word = TensorWord(tuple(letters[inv[i] - 1] for i in range(1, total + 1)))
        bucket = left if inv[1] == 1 else right
        bucket[word] = bucket.get(word, Fraction(0)) + 1
    return LinComb(left.items()), LinComb(right.items())


def deconcat_word(w: TensorWord) -> TPairElem:
    letters = w.letters
    return LinComb((
        ((TensorWord(letters[:k]), TensorWord(letters[k:])), 1)
        for k in range(len(letters) + 1)))


def deconcat(x: TElem) -> TPairElem:
    """All prefix (x) suffix splits of each word, extended linearly."""
    return _as_telem(x).apply(deconcat_word)


def reduced_deconcat(x: TElem) -> TPairElem:
    """Deconcatenation with the two trivial splits removed (words must be
    nonempty)."""
    def on_word(w: TensorWord) -> TPairElem:
        if not w.letters:
            raise EmptyWordError("reduced coproduct is undefined on the unit")
        letters = w.letters
        return LinComb((
            ((TensorWord(letters[:k]), TensorWord(letters[k:])), 1)
            for k in range(1, len(letters))))
    return _as_telem(x).apply(on_word)


def pair_map(op_left: Callable[[TElem], TElem],
             op_right: Callable[[TElem], TElem], xp: TPairElem) -> TPairElem:
    """Apply linear operators to the two slots of a tensor square."""
    def on_pair(p):
        a, b = p
        return LinComb.bilinear(op_left(LinComb.single(a)),
                                op_right(LinComb.single(b)),
                                lambda u, v: LinComb.single((u, v)))
    return xp.apply(on_pair)


def pair_product(prod: Callable[[TElem, TElem], TElem],
                 xp: TPairElem, yp: TPairElem) -> TPairElem:
    """Slotwise product on tensor squares: (a (x) b)(c (x) d) = ac (x) bd."""
    def on_pair(p, q):
        a, b = p
        c, d = q
        lhs = prod(LinComb.single(a), LinComb.single(c))
        rhs = prod(LinComb.single(b), LinComb.single(d))
        return LinComb.bilinear(lhs, rhs, lambda u, v: LinComb.single((u, v)))
    return LinComb.bilinear(xp, yp, on_pair)


def substitute_word(w: TensorWord, images: Mapping[int, AElem]) -> TElem:
    """Apply an algebra morphism letterwise to a tensor word and expand."""
    acc = LinComb.single(EMPTY_WORD)
    for m in w.letters:
        img = substitute(mono_elem(m), images)
        acc = LinComb.bilinear(
            acc, img,
            lambda word, mono: LinComb.single(TensorWord(word.letters + (mono,))))
    return acc


def substitute_telem(x: TElem, images: Mapping[int, AElem]) -> TElem:
    return _as_telem(x).apply(lambda w: substitute_word(w, images))


def twisted_product(P, x, y) -> TElem:
    """Conjugated shuffle: transport both factors backwards through the
    automorphism attached to ``P``, shuffle, and transport the result forward.

    ``P`` must have an invertible linear coefficient, and its order must
    cover the total degree of the inputs.
    """
    from . import nattrans

    xe, ye = _as_telem(x), _as_telem(y)
    if not xe or not ye:
        return LinComb.zero()
    if P.coeff(1) == 0:
        raise LeadingCoefficientError(
            "twisted product needs an invertible linear coefficient (p1 != 0)")
    need = max((len(wx) for wx in xe), default=0) + max((len(wy) for wy in ye), default=0)
    if P.order < need:
        raise OrderError(
            f"series order {P.order} < total degree {need} of the product")
    xi = nattrans.phi_inverse_apply(P, xe)
    yi = nattrans.phi_inverse_apply(P, ye)
    return nattrans.phi_apply(P, shuffle(xi, yi))
