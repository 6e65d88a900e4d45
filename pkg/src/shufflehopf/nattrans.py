"""Series-indexed natural operators on tensor words.

Every truncated series P (no constant term) determines three operators that
commute with algebra morphisms of the letter algebra:

* ``f_apply``     — the scalar-valued corestriction: a word of length n maps
                    to p_n times the internal product of its letters;
* ``phi_apply``   — the coalgebra endomorphism: the word is cut into
                    consecutive blocks in every possible way, each block is
                    merged by the internal product, and the blocks are
                    weighted by the product of the p_i over block sizes;
* ``coder_apply`` — the coderivation: a single window of each width i is
                    merged in every position, weighted by p_i.

Composition of the endomorphisms mirrors substitution of series, and the
commutator of the monomial coderivations closes with the bracket
[X^m, X^n] = (m-n) X^(m+n-1).  Conjugating a coderivation through an
automorphism produces the coderivation of (V o U)/U', and the logarithm of a
tangent-to-identity endomorphism is again a coderivation, recovered here by
reading its series off the generic word and checking the residual.
"""

from __future__ import annotations

from fractions import Fraction
from math import prod
from typing import Mapping

from .combinat import compositions
from .errors import CoderivationError, LeadingCoefficientError, OrderError
from .freecomm import AElem, Monomial, merge_monomials
from .fps import Series, compose, derivative, divide_truncated, from_poly, inverse, monomial_series
from .lincomb import LinComb
from .tensorhopf import TElem, TensorWord, generic_word, word_elem, _as_telem


def f_apply(P: Series, w: TensorWord) -> AElem:
    """p_n times the internal product of all letters of a nonempty word."""
    n = len(w)
    if n == 0:
        raise ValueError("the scalar corestriction is not defined on the unit")
    coeff = P.coeff(n)  # raises OrderError beyond the truncation
    if not coeff:
        return LinComb.zero()
    return LinComb.single(merge_monomials(w.letters), coeff)


def _phi_word(P: Series, w: TensorWord) -> TElem:
    n = len(w)
    if n == 0:
        return LinComb.single(w)
    if n > P.order:
        raise OrderError(f"word of length {n} exceeds series order {P.order}")
    acc: dict = {}
    letters = w.letters
    for comp in compositions(n):
        coeff = prod((P.coeff(i) for i in comp), start=Fraction(1))
        if not coeff:
            continue
        blocks = []
        pos = 0
        for size in comp:
            blocks.append(merge_monomials(letters[pos:pos + size]))
            pos += size
        word = TensorWord(tuple(blocks))
        c = acc.get(word, Fraction(0)) + coeff
        if c:
            acc[word] = c
        else:
            acc.pop(word, None)
    return LinComb(acc)


def phi_apply(P: Series, x) -> TElem:
    """The coalgebra endomorphism attached to P, applied to a tensor element."""
    return _as_telem(x).apply(lambda w: _phi_word(P, w))


def phi_inverse_apply(P: Series, x) -> TElem:
    """Apply the compositional-inverse endomorphism (requires p1 != 0)."""
    return phi_apply(inverse(P), x)


def phi_compose_check(P: Series, Q: Series, w: TensorWord) -> bool:
    """True iff applying Q's endomorphism then P's equals applying the
    endomorphism of the substituted series P(Q) on ``w``."""
    return phi_apply(P, phi_apply(Q, word_elem(w))) == phi_apply(compose(P, Q), word_elem(w))


def _coder_word(P: Series, w: TensorWord) -> TElem:
    n = len(w)
    if n == 0:
        return LinComb.zero()
    if n > P.order:
        raise OrderError(f"word of length {n} exceeds series order {P.order}")
    letters = w.letters
    acc: dict = {}
    for i in range(1, n + 1):
        coeff = P.coeff(i)
        if not coeff:
            continue
        for j in range(n - i + 1):
            merged = merge_monomials(letters[j:j + i])
            word = TensorWord(letters[:j] + (merged,) + letters[j + i:])
            c = acc.get(word, Fraction(0)) + coeff
            if c:
                acc[word] = c
            else:
                acc.pop(word, None)
    return LinComb(acc)


def coder_apply(P: Series, x) -> TElem:
    """The coderivation attached to P: one merged window per term."""
    return _as_telem(x).apply(lambda w: _coder_word(P, w))


def coder_bracket(m: int, n: int, w: TensorWord) -> bool:
    """True iff the commutator of the X^m and X^n coderivations acts on ``w``
    as (m-n) times the X^(m+n-1) coderivation."""
    if m < 1 or n < 1:
        raise ValueError("monomial exponents start at 1")
    order = max(len(w), m, n, m + n - 1)
    dm = monomial_series(m, order)
    dn = monomial_series(n, order)
    dmn = monomial_series(m + n - 1, order)
    we = word_elem(w)
    lhs = coder_apply(dm, coder_apply(dn, we)) - coder_apply(dn, coder_apply(dm, we))
    rhs = (m - n) * coder_apply(dmn, we)
    return lhs == rhs


def conjugate_coder(U: Series, V: Series) -> Series:
    """The series (V o U) / U' whose coderivation equals the U-conjugate of
    V's coderivation (inverse automorphism, then coderivation, then
    automorphism).  Requires u1 != 0."""
    if U.coeff(1) == 0:
        raise LeadingCoefficientError("conjugation needs u1 != 0")
    n = U.order
    if V.order != n:
        raise OrderError(f"series orders differ: {U.order} vs {V.order}")
    num = compose(V, U).as_poly()
    quotient = divide_truncated(num, derivative(U), n)
    if quotient.coefficient(0):
        raise CoderivationError("conjugated coderivation grew a constant term")
    return from_poly(quotient, n)


def conjugate_coder_check(U: Series, V: Series, w: TensorWord) -> bool:
    """Companion operator check on one word: transport ``w`` through the
    automorphism of U, apply V's coderivation, transport back, and compare
    with the coderivation of (V o U)/U'."""
    we = word_elem(w)
    lhs = phi_inverse_apply(U, coder_apply(V, phi_apply(U, we)))
    rhs = coder_apply(conjugate_coder(U, V), we)
    return lhs == rhs


def _log_apply(P: Series, x: TElem) -> TElem:
    """log of the endomorphism of P, applied to x.  Each application of
    (phi - id) strictly shortens every word (p1 = 1), so the series stops."""
    acc = LinComb.zero()
    term = x
    k = 0
    while True:
        term = phi_apply(P, term) - term
        if not term:
            return acc
        k += 1
        acc = acc + Fraction((-1) ** (k - 1), k) * term


def coder_log(P: Series) -> Series:
    """Read the operator logarithm of a tangent-to-identity endomorphism
    back as the series of a coderivation.

    The coefficient v_n is extracted from the fully merged component of the
    logarithm on the generic word of length n; afterwards the operator
    logarithm is compared with the coderivation of the returned series on
    every generic word up to the order, and a mismatch is an error.
    """
    if P.coeff(1) != 1:
        raise LeadingCoefficientError("operator logarithm needs p1 = 1")
    n = P.order
    vs: list[Fraction] = []
    logs: list[TElem] = []
    for length in range(1, n + 1):
        log_w = _log_apply(P, word_elem(generic_word(length)))
        logs.append(log_w)
        target = TensorWord((Monomial(tuple(range(1, length + 1))),))
        vs.append(log_w[target])
    V = Series(tuple(vs))
    for length in range(1, n + 1):
        if logs[length - 1] != coder_apply(V, word_elem(generic_word(length))):
            raise CoderivationError(
                f"operator logarithm is not a coderivation at length {length}")
    return V


def coder_exp_apply(V: Series, x) -> TElem:
    """Operator exponential of an infinitesimal coderivation (v1 = 0);
    the sum stops on every element because each application shortens words."""
    if V.coeff(1) != 0:
        raise LeadingCoefficientError("operator exponential needs v1 = 0")
    acc = _as_telem(x)
    term = _as_telem(x)
    k = 0
    while True:
        term = coder_apply(V, term)
        if not term:
            return acc
        k += 1
        acc = acc + Fraction(1, _factorial(k)) * term


def _factorial(k: int) -> int:
    out = 1
    for i in range(2, k + 1):
        out *= i
    return out


def grading_project(P: Series, n: int, x) -> TElem:
    """Projection onto the degree-n eigenspace of the transported degree
    operator: undo the automorphism, keep length-n words, redo it."""
    if P.coeff(1) != 1:
        raise LeadingCoefficientError("grading projections need p1 = 1")
    back = phi_inverse_apply(P, _as_telem(x))
    kept = LinComb((w, c) for w, c in back.items() if len(w) == n)
    return phi_apply(P, kept)


def grading_operator_series(P: Series) -> Series:
    """Series of the transported degree operator (automorphism first,
    degree-times, then inverse automorphism): the conjugate of X by the
    inverse of P."""
    return conjugate_coder(inverse(P), monomial_series(1, P.order))


def naturality_check(P: Series, images: Mapping[int, AElem], w: TensorWord) -> bool:
    """True iff letterwise substitution commutes with both the endomorphism
    and the coderivation of P on ``w``."""
    from .tensorhopf import substitute_telem, substitute_word

    we = word_elem(w)
    sub_first = substitute_word(w, images)
    if phi_apply(P, sub_first) != substitute_telem(phi_apply(P, we), images):
        return False
    return coder_apply(P, sub_first) == substitute_telem(coder_apply(P, we), images)
