"""Packed words (surjections encoded as words) and the operator calculus
they index on tensor words.

A packed word u of degree n acts on a length-n tensor word by multiplying,
for each value j, the letters sitting over the fibre u^{-1}(j) into slot j.
Evaluating on the generic word of distinct generators is injective, and
``readback`` inverts it; this action/readback bridge is how every product
here is computed: evaluate both operands on complementary generic letters,
multiply down in the tensor algebra (shuffle, quasi-shuffle, or a twisted
shuffle), and read the result back as a sum of packed words.

The permutation-only product has a second, purely combinatorial expression
(sum over rising-block permutations composed with the concatenation), kept
as an independent cross-check, as is the closed descent-class formula for
the first Eulerian idempotent against its convolution-logarithm definition.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .combinat import (compositions, descent_set, is_packed,
                       packed_sequences, partial_sums)
from .errors import DegreeMismatchError, AlphabetSizeError, NotExpressibleError, ParseError
from .freecomm import merge_monomials
from .lincomb import LinComb
from .tensorhopf import (TElem, TensorWord, generic_word, qshuffle, shuffle,
                         twisted_product, word_elem)

WElem = LinComb       # over PackedWord
WPairElem = LinComb   # over (PackedWord, PackedWord)


@dataclass(frozen=True)
class PackedWord:
    """A word whose set of values is exactly {1, ..., p}; equivalently a
    surjection [n] -> [p] with n = degree, p = number of values."""

    values: tuple[int, ...] = ()

    def __post_init__(self):
        values = tuple(int(v) for v in self.values)
        if not is_packed(values):
            raise ValueError(f"not a packed word: {values}")
        object.__setattr__(self, "values", values)

    @property
    def degree(self) -> int:
        return len(self.values)

    @property
    def max_letter(self) -> int:
        return max(self.values, default=0)

    @property
    def relative_degree(self) -> int:
        return self.degree - self.max_letter

    def is_nondecreasing(self) -> bool:
        return all(a <= b for a, b in zip(self.values, self.values[1:]))

    def is_permutation(self) -> bool:
        return self.max_letter == self.degree

    def descents(self) -> frozenset[int]:
        return descent_set(self.values)

    def reversed_positions(self) -> "PackedWord":
        """The conjugate word read right to left (position i picks the
        original position n+1-i)."""
        return PackedWord(self.values[::-1])

    def factorial(self) -> int:
        """Product of the factorials of the fibre sizes."""
        counts: dict[int, int] = {}
        for v in self.values:
            counts[v] = counts.get(v, 0) + 1
        out = 1
        for c in counts.values():
            out *= math.factorial(c)
        return out

    def sort_key(self) -> tuple:
        return (len(self.values), self.values)

    def __str__(self) -> str:
        return " ".join(str(v) for v in self.values) if self.values else "()"


def pack(word) -> PackedWord:
    """Order-preserving relabeling of any positive-integer word onto an
    initial segment {1, ..., p}."""
    values = tuple(word)
    ranks = {v: i + 1 for i, v in enumerate(sorted(set(values)))}
    return PackedWord(tuple(ranks[v] for v in values))


def parse_packed_word(text: str) -> PackedWord:
    s = text.strip()
    if not s:
        raise ParseError("empty packed-word literal")
    try:
        if " " in s:
            values = tuple(int(tok) for tok in s.split())
        else:
            values = tuple(int(ch) for ch in s)
    except ValueError:
        raise ParseError(f"not a packed word: {text!r}") from None
    try:
        return PackedWord(values)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def identity_word(n: int) -> PackedWord:
    return PackedWord(tuple(range(1, n + 1)))


def packed_words(n: int) -> tuple[PackedWord, ...]:
    return tuple(PackedWord(w) for w in packed_sequences(n))


def nondecreasing_words(n: int) -> tuple[PackedWord, ...]:
    """Nondecreasing packed words of degree n, one per composition of n."""
    out = []
    for comp in compositions(n):
        values: tuple[int, ...] = ()
        for letter, size in enumerate(comp, start=1):
            values += (letter,) * size
        out.append(PackedWord(values))
    return tuple(out)


def permutation_words(n: int) -> tuple[PackedWord, ...]:
    from .combinat import permutation_sequences
    return tuple(PackedWord(w) for w in permutation_sequences(n))


def _as_welem(f) -> WElem:
    if isinstance(f, PackedWord):
        return LinComb.single(f)
    return f


def format_welem(x: WElem) -> str:
    if not x:
        return "0"
    parts: list[str] = []
    for word, coeff in x.sorted_items(PackedWord.sort_key):
        mag = -coeff if coeff < 0 else coeff
        body = f"{mag}*({word})"
        if not parts:
            parts.append(f"-{body}" if coeff < 0 else body)
        else:
            parts.append(("- " if coeff < 0 else "+ ") + body)
    return " ".join(parts)


def act(f: PackedWord, w: TensorWord) -> TensorWord:
    """Evaluate the surjection on a tensor word: slot j of the result is the
    internal product of the letters over the fibre f^{-1}(j)."""
    if f.degree != len(w):
        raise DegreeMismatchError(
            f"packed word of degree {f.degree} cannot act on a word of length {len(w)}")
    p = f.max_letter
    buckets: list[list] = [[] for _ in range(p)]
    for value, letter in zip(f.values, w.letters):
        buckets[value - 1].append(letter)
    return TensorWord(tuple(merge_monomials(b) for b in buckets))


def readback(x: TElem) -> WElem:
    """Invert evaluation on the generic word: each tensor word whose
    monomials partition {a_1, ..., a_n} maps back to the packed word sending
    each generator index to its slot."""
    out: dict = {}
    expected = None
    for word, coeff in x.items():
        slot_of: dict[int, int] = {}
        for j, m in enumerate(word.letters, start=1):
            for g in m.factors:
                if g in slot_of:
                    raise NotExpressibleError(f"generator {g} occurs twice")
                slot_of[g] = j
        n = len(slot_of)
        if set(slot_of) != set(range(1, n + 1)):
            raise NotExpressibleError(
                "generators must be exactly 1..n with no gaps")
        if expected is None:
            expected = n
        elif n != expected:
            raise NotExpressibleError(
                f"mixed generator counts {expected} and {n} in one element")
        u = PackedWord(tuple(slot_of[i] for i in range(1, n + 1)))
        c = out.get(u, Fraction(0)) + coeff
        if c:
            out[u] = c
        else:
            out.pop(u, None)
    return LinComb(out)


def wcompose(f: PackedWord, g: PackedWord) -> PackedWord:
    """Composition of surjections, (f o g)(i) = f(g(i)); the inner degrees
    must match."""
    if f.degree != g.max_letter:
        raise DegreeMismatchError(
            f"cannot compose: f has degree {f.degree}, g has {g.max_letter} values")
    return PackedWord(tuple(f.values[v - 1] for v in g.values))


def wcompose_linear(F, G) -> WElem:
    """Bilinear composition; mismatched bidegrees contribute zero."""
    def on_pair(f: PackedWord, g: PackedWord) -> WElem:
        if f.degree != g.max_letter:
            return LinComb.zero()
        return LinComb.single(wcompose(f, g))
    return LinComb.bilinear(_as_welem(F), _as_welem(G), on_pair)


def wproduct(kind: str, f, g, series=None) -> WElem:
    """Convolution product computed through the generic word: evaluate the
    operands on complementary distinct generators, multiply in the tensor
    algebra  with the named product, and read back.

    ``kind`` is 'shuffle', 'qshuffle', or 'twisted' (which needs ``series``).
    """
    if kind not in ("shuffle", "qshuffle", "twisted"):
        raise ParseError(f"unknown product kind {kind!r}")
    if kind == "twisted" and series is None:
        raise ParseError("twisted product needs a series")

    def on_pair(u: PackedWord, v: PackedWord) -> WElem:
        n, m = u.degree, v.degree
        xu = word_elem(act(u, generic_word(n)))
        xv = word_elem(act(v, generic_word(m, start=n + 1)))
        if kind == "shuffle":
            prod = shuffle(xu, xv)
        elif kind == "qshuffle":
            prod = qshuffle(xu, xv)
        else:
            prod = twisted_product(series, xu, xv)
        return readback(prod)

    return LinComb.bilinear(_as_welem(f), _as_welem(g), on_pair)


def fqsym_shuffle(sigma: PackedWord, tau: PackedWord) -> WElem:
    """Permutation convolution in closed form: sum over the permutations
    that rise along the first n and the last m positions, composed with the
    shifted concatenation of the two permutations."""
    if not sigma.is_permutation() or not tau.is_permutation():
        raise ValueError("fqsym_shuffle is defined on permutations")
    n, m = sigma.degree, tau.degree
    fg = sigma.values + tuple(n + t for t in tau.values)
    total = n + m
    out: dict = {}
    for chosen in combinations(range(1, total + 1), n):
        rest = sorted(set(range(1, total + 1)) - set(chosen))
        zeta = [0] * (total + 1)
        for i, val in enumerate(chosen, start=1):
            zeta[i] = val
        for j, val in enumerate(rest, start=n + 1):
            zeta[j] = val
        word = PackedWord(tuple(zeta[v] for v in fg))
        out[word] = out.get(word, Fraction(0)) + 1
    return LinComb(out)


def fqsym_shuffle_linear(F, G) -> WElem:
    return LinComb.bilinear(_as_welem(F), _as_welem(G), fqsym_shuffle)


def wcoproduct(u: PackedWord) -> WPairElem:
    """Split the value alphabet: for each i, keep the letters with values at
    most i on the left (already packed) and pack the rest on the right."""
    p = u.max_letter
    terms = []
    for i in range(p + 1):
        left = PackedWord(tuple(v for v in u.values if v <= i))
        right_raw = tuple(v for v in u.values if v > i)
        right = pack(right_raw) if right_raw else PackedWord(())
        terms.append(((left, right), 1))
    return LinComb(terms)


def wcoproduct_linear(F) -> WPairElem:
    return _as_welem(F).apply(wcoproduct)


def wpair_compose(xp: WPairElem, yp: WPairElem) -> WPairElem:
    """Componentwise composition on tensor squares, zero on mismatch."""
    def on_pair(p, q):
        (f1, f2), (g1, g2) = p, q
        if f1.degree != g1.max_letter or f2.degree != g2.max_letter:
            return LinComb.zero()
        return LinComb.single((wcompose(f1, g1), wcompose(f2, g2)))
    return LinComb.bilinear(xp, yp, on_pair)


def wpair_product(kind: str, xp: WPairElem, yp: WPairElem, series=None) -> WPairElem:
    """Componentwise convolution product on tensor squares."""
    def on_pair(p, q):
        (f1, f2), (g1, g2) = p, q
        lhs = wproduct(kind, f1, g1, series)
        rhs = wproduct(kind, f2, g2, series)
        return LinComb.bilinear(lhs, rhs, lambda a, b: LinComb.single((a, b)))
    return LinComb.bilinear(xp, yp, on_pair)


def coproduct_compose_identity_holds(f: PackedWord, g: PackedWord) -> bool:
    """Whether the coproduct of a composite equals the componentwise
    composite of the coproducts.  Guaranteed for nondecreasing ``f``;
    genuinely false for some other ``f``."""
    lhs = wcoproduct(wcompose(f, g))
    rhs = wpair_compose(wcoproduct(f), wcoproduct(g))
    return lhs == rhs


def embed_fqsym(q, sigma: PackedWord) -> WElem:
    """Deformation-compatible embedding of a permutation: the sum over all
    packed words tau that weakly follow sigma's value order
    (sigma(i) < sigma(j) implies tau(i) <= tau(j)), each weighted by
    q^(relative degree) divided by the product of fibre factorials."""
    if not sigma.is_permutation():
        raise ValueError("embed_fqsym is defined on permutations")
    qq = Fraction(q)
    n = sigma.degree
    position_of = [0] * (n + 1)
    for pos, val in enumerate(sigma.values):
        position_of[val] = pos
    terms = []
    for raw in packed_sequences(n):
        along = [raw[position_of[v]] for v in range(1, n + 1)]
        if any(a > b for a, b in zip(along, along[1:])):
            continue
        tau = PackedWord(raw)
        weight = qq ** tau.relative_degree / tau.factorial()
        if weight:
            terms.append((tau, weight))
    return LinComb(terms)


def e1(n: int, kind: str, series=None) -> WElem:
    """Degree-n component of the convolution logarithm of the identity:
    sum over compositions of n of the kind-product of identity permutations,
    weighted by (-1)^(k-1)/k for k parts."""
    if n < 1:
        raise ValueError("degree must be at least 1")
    acc = LinComb.zero()
    for comp in compositions(n):
        k = len(comp)
        term: WElem = LinComb.single(identity_word(comp[0]))
        for part in comp[1:]:
            term = wproduct(kind, term, identity_word(part), series)
        acc = acc + Fraction((-1) ** (k - 1), k) * term
    return acc


def e1_closed(n: int) -> WElem:
    """Closed form of the quasi-shuffle Eulerian idempotent: for each
    composition I of n, sum the position-reversals of the packed words whose
    descent set is the complement of the partial sums of I reversed, with
    weight (-1)^(len(I)-1) / (n * C(n-1, len(I)-1)).

    The index-set reading was fixed empirically against the convolution
    logarithm (they agree coefficientwise for all degrees tested).
    """
    if n < 1:
        raise ValueError("degree must be at least 1")
    acc: dict = {}
    full = set(range(1, n + 1))
    for comp in compositions(n):
        k = len(comp)
        coeff = Fraction((-1) ** (k - 1), n * math.comb(n - 1, k - 1))
        target = frozenset(full - set(partial_sums(comp[::-1])))
        for raw in packed_sequences(n):
            if descent_set(raw) != target:
                continue
            u = PackedWord(raw[::-1])
            c = acc.get(u, Fraction(0)) + coeff
            if c:
                acc[u] = c
            else:
                acc.pop(u, None)
    return LinComb(acc)


def realize(u: PackedWord, k: int):
    """Word realization over a k-letter ordered alphabet: the sum of all
    words whose packing is u."""
    from .hausdorff import NCPoly

    p = u.max_letter
    if k < p:
        raise AlphabetSizeError(
            f"alphabet of size {k} cannot realize a word with {p} values")
    n = u.degree
    terms = []
    for chosen in combinations(range(1, k + 1), p):
        word = tuple(chosen[v - 1] for v in u.values)
        terms.append((word, Fraction(1)))
    return NCPoly(k, n, terms)
