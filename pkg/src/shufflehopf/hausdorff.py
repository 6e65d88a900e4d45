"""Truncated noncommutative polynomials, the Hausdorff series
log(e^{x1} e^{x2} ... e^{xk}), Eulerian polynomials, and the exact integral
formula for the word coefficients of that series.

Convention note (it matters): the bivariate Eulerian polynomial used here is
homogeneous of degree n-1,

    E_n(x, y) = sum over permutations s of n of x^d(s) y^(n-1-d(s)),

i.e. the rise statistic counts strict rises, of which a permutation of n has
n-1-d.  Likewise the rise count r(u) of an arbitrary word counts positions
with u_i < u_{i+1}.  With these conventions the coefficient of a packed word
u with descent count d, rise count r and equal-letter block lengths j_1..j_s
in the Hausdorff series is the exact integral over t from -1 to 0 of

    t^d (1+t)^r  *  product over blocks of E_{j}(t, 1+t)/j!

(the integrand already has the 1/t absorbed: t^{d+1}/t = t^d), which the
brute-force exp/log expansion confirms coefficient by coefficient.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product as iter_product
from math import factorial

from .combinat import (compositions, descent_count, partial_sums, rise_count,
                       run_lengths)
from .errors import ConstantTermError, MomentError, OrderError
from .exact import Poly, integrate
from .lincomb import LinComb
from .wqsym import (PackedWord, fqsym_shuffle_linear, identity_word, pack,
                    packed_words)

NCWord = tuple[int, ...]


class NCPoly:
    """Truncated noncommutative polynomial over the alphabet {x1..xk}:
    a finitely supported map from words (tuples of letter indices) to
    rationals, with no word longer than the truncation degree."""

    __slots__ = ("alphabet", "degree", "_terms")

    def __init__(self, alphabet: int, degree: int, terms=()):
        if alphabet < 1 or degree < 0:
            raise ValueError("alphabet size must be >= 1 and degree >= 0")
        self.alphabet = alphabet
        self.degree = degree
        data: dict[NCWord, Fraction] = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for word, coeff in items:
            word = tuple(word)
            if len(word) > degree:
                raise OrderError(
                    f"word of length {len(word)} exceeds truncation {degree}")
            if any(not (1 <= i <= alphabet) for i in word):
                raise ValueError(f"letter out of alphabet range: {word}")
            c = data.get(word, Fraction(0)) + Fraction(coeff)
            if c:
                data[word] = c
            else:
                data.pop(word, None)
        self._terms = data

    @classmethod
    def zero(cls, alphabet: int, degree: int) -> "NCPoly":
        return cls(alphabet, degree)

    @classmethod
    def one(cls, alphabet: int, degree: int) -> "NCPoly":
        return cls(alphabet, degree, (((), 1),))

    @classmethod
    def letter(cls, i: int, alphabet: int, degree: int) -> "NCPoly":
        return cls(alphabet, degree, (((i,), 1),))

    def items(self):
        return iter(self._terms.items())

    def coefficient(self, word) -> Fraction:
        return self._terms.get(tuple(word), Fraction(0))

    def constant_term(self) -> Fraction:
        return self._terms.get((), Fraction(0))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NCPoly):
            return NotImplemented
        return (self.alphabet == other.alphabet and self.degree == other.degree
                and self._terms == other._terms)

    __hash__ = None  # type: ignore[assignment]

    def _check_compatible(self, other: "NCPoly") -> None:
        if self.alphabet != other.alphabet or self.degree != other.degree:
            raise OrderError(
                f"incompatible truncations: ({self.alphabet},{self.degree}) "
                f"vs ({other.alphabet},{other.degree})")

    def __add__(self, other: "NCPoly") -> "NCPoly":
        self._check_compatible(other)
        data = dict(self._terms)
        for word, coeff in other._terms.items():
            c = data.get(word, Fraction(0)) + coeff
            if c:
                data[word] = c
            else:
                del data[word]
        out = NCPoly(self.alphabet, self.degree)
        out._terms = data
        return out

    def __sub__(self, other: "NCPoly") -> "NCPoly":
        return self + (-1) * other

    def __rmul__(self, scalar) -> "NCPoly":
        c = Fraction(scalar)
        out = NCPoly(self.alphabet, self.degree)
        if c:
            out._terms = {w: c * v for w, v in self._terms.items()}
        return out

    def scale(self, scalar) -> "NCPoly":
        return self.__rmul__(scalar)

    def __mul__(self, other):
        if not isinstance(other, NCPoly):
            return self.__rmul__(other)
        self._check_compatible(other)
        cap = self.degree
        by_len: dict[int, list[tuple[NCWord, Fraction]]] = {}
        for word, coeff in other._terms.items():
            by_len.setdefault(len(word), []).append((word, coeff))
        data: dict[NCWord, Fraction] = {}
        for w1, c1 in self._terms.items():
            room = cap - len(w1)
            for length, bucket in by_len.items():
                if length > room:
                    continue
                for w2, c2 in bucket:
                    w = w1 + w2
                    c = data.get(w, Fraction(0)) + c1 * c2
                    if c:
                        data[w] = c
                    else:
                        del data[w]
        out = NCPoly(self.alphabet, self.degree)
        out._terms = data
        return out

    def min_degree(self) -> int:
        return min((len(w) for w in self._terms), default=self.degree + 1)

    def __repr__(self) -> str:
        return f"NCPoly(alphabet={self.alphabet}, degree={self.degree}, terms={len(self._terms)})"


def nc_mul(x: NCPoly, y: NCPoly) -> NCPoly:
    return x * y


def nc_exp(x: NCPoly) -> NCPoly:
    """exp of a polynomial with zero constant term, truncated."""
    if x.constant_term():
        raise ConstantTermError("exp needs a zero constant term")
    acc = NCPoly.one(x.alphabet, x.degree)
    term = NCPoly.one(x.alphabet, x.degree)
    for j in range(1, x.degree + 1):
        term = term * x
        if not term:
            break
        acc = acc + Fraction(1, factorial(j)) * term
    return acc


def nc_log(y: NCPoly) -> NCPoly:
    """log of a polynomial with constant term 1, truncated."""
    if y.constant_term() != 1:
        raise ConstantTermError("log needs constant term 1")
    z = y - NCPoly.one(y.alphabet, y.degree)
    acc = NCPoly.zero(y.alphabet, y.degree)
    term = NCPoly.one(y.alphabet, y.degree)
    for j in range(1, y.degree + 1):
        term = term * z
        if not term:
            break
        acc = acc + Fraction((-1) ** (j - 1), j) * term
    return acc


@lru_cache(maxsize=None)
def hausdorff_series(k: int, degree: int) -> NCPoly:
    """log of the left-to-right product e^{x1} e^{x2} ... e^{xk},
    truncated at the given degree.  Treat the cached result as immutable."""
    if k < 1 or degree < 1:
        raise ValueError("alphabet size and degree must be at least 1")
    sigma = NCPoly.one(k, degree)
    for i in range(1, k + 1):
        sigma = sigma * nc_exp(NCPoly.letter(i, k, degree))
    return nc_log(sigma)


def format_ncpoly(p: NCPoly) -> str:
    """Render terms sorted by (length, word); unit coefficients are bare."""
    if not p:
        return "0"
    parts: list[str] = []
    for word, coeff in sorted(p.items(), key=lambda kv: (len(kv[0]), kv[0])):
        mag = -coeff if coeff < 0 else coeff
        body = "".join(f"x{i}" for i in word) if word else None
        if body is None:
            text = str(mag)
        elif mag == 1:
            text = body
        else:
            text = f"{mag} {body}"
        if not parts:
            parts.append(f"-{text}" if coeff < 0 else text)
        else:
            parts.append(("- " if coeff < 0 else "+ ") + text)
    return " ".join(parts)


def ncpoly_terms_json(p: NCPoly) -> list[dict]:
    return [{"word": list(word), "coeff": str(coeff)}
            for word, coeff in sorted(p.items(), key=lambda kv: (len(kv[0]), kv[0]))]


@lru_cache(maxsize=None)
def eulerian_counts(n: int) -> tuple[int, ...]:
    """Permutations of n by descent count, d = 0..n-1 (classical triangle)."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if n == 1:
        return (1,)
    prev = eulerian_counts(n - 1)
    out = []
    for d in range(n):
        total = 0
        if d < n - 1:
            total += (d + 1) * prev[d]
        if d >= 1:
            total += (n - d) * prev[d - 1]
        out.append(total)
    return tuple(out)


def eulerian_E(n: int) -> list[Fraction]:
    """Coefficients of the homogeneous Eulerian polynomial E_n(x, y) by
    x-degree; entry d counts permutations of n with d descents."""
    return [Fraction(c) for c in eulerian_counts(n)]


@lru_cache(maxsize=None)
def _eulerian_at_t_onet(n: int) -> Poly:
    """E_n(t, 1+t) as an exact polynomial in t."""
    t = Poly.x()
    onet = Poly.const(1) + t
    acc = Poly()
    for d, count in enumerate(eulerian_counts(n)):
        acc = acc + Poly.const(count) * t ** d * onet ** (n - 1 - d)
    return acc


@dataclass(frozen=True)
class EulerSignature:
    """Descent count, strict-rise count, and equal-letter block lengths of a
    word; d + r = (number of blocks) - 1 and the blocks sum to the degree."""

    descents: int
    rises: int
    blocks: tuple[int, ...]


def goldberg_signature(u: PackedWord) -> EulerSignature:
    values = u.values
    return EulerSignature(descent_count(values), rise_count(values),
                          run_lengths(values))


def goldberg_integrand(u: PackedWord) -> Poly:
    """The polynomial Q_u(t) = t^(d+1) (1+t)^r prod E_{j}(t,1+t)/j!;
    its constant term is zero by construction."""
    sig = goldberg_signature(u)
    t = Poly.x()
    onet = Poly.const(1) + t
    acc = t ** (sig.descents + 1) * onet ** sig.rises
    for j in sig.blocks:
        acc = acc * _eulerian_at_t_onet(j).scale(Fraction(1, factorial(j)))
    return acc


@lru_cache(maxsize=None)
def goldberg_coeff(u: PackedWord) -> Fraction:
    """Exact coefficient of the word realization of u in the Hausdorff
    series, via the definite integral of Q_u(t)/t from -1 to 0."""
    if u.degree == 0:
        return Fraction(0)
    integrand = goldberg_integrand(u).divided_by_x()
    return integrate(integrand, Fraction(-1), Fraction(0))


def goldberg_moment_coeff(u: PackedWord, moments) -> Fraction:
    """Apply the linear functional t^m -> moments[m-1] to Q_u(t).

    With the moments of the measure behind the log series this reproduces
    the Hausdorff coefficients; other moment sequences give the coefficient
    of u in the corresponding series of the ordered exponential product.
    """
    q = goldberg_integrand(u)
    ms = [Fraction(m) for m in moments]
    if q.degree > len(ms):
        raise MomentError(
            f"need {q.degree} moments for a degree-{u.degree} word, got {len(ms)}")
    acc = Fraction(0)
    for m in range(1, q.degree + 1):
        c = q.coefficient(m)
        if c:
            acc += c * ms[m - 1]
    return acc


def log_moments(count: int) -> list[Fraction]:
    """Moments of the functional behind the logarithm: the integral of
    t^(m-1) over [-1, 0], i.e. (-1)^(m-1)/m."""
    return [Fraction((-1) ** (m - 1), m) for m in range(1, count + 1)]


def eulerian_identity_check(n: int) -> bool:
    """Check the generating identity tying the complete-function expansion
    to the ribbon (descent-class) expansion, inside the permutation algebra
    with polynomial coefficients:

        sum over compositions I of n of t^len(I) S^I
          ==  sum over I of R_I t^len(I) (1+t)^(n-len(I))

    where S^I is the convolution product of identity permutations and R_I is
    obtained from the S^J by inclusion-exclusion over coarsenings."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if n > 6:
        raise ValueError("combinatorial sweep capped at n = 6")
    comps = compositions(n)
    s_elem: dict[tuple[int, ...], LinComb] = {}
    for comp in comps:
        term = LinComb.single(identity_word(comp[0]))
        for part in comp[1:]:
            term = fqsym_shuffle_linear(term, identity_word(part))
        s_elem[comp] = term
    dsets = {comp: frozenset(partial_sums(comp)[:-1]) for comp in comps}

    lhs: dict[PackedWord, Poly] = {}
    rhs: dict[PackedWord, Poly] = {}

    def accumulate(target: dict, element: LinComb, poly: Poly) -> None:
        for word, coeff in element.items():
            cur = target.get(word, Poly()) + poly.scale(coeff)
            if cur:
                target[word] = cur
            else:
                target.pop(word, None)

    t = Poly.x()
    onet = Poly.const(1) + t
    for comp in comps:
        accumulate(lhs, s_elem[comp], t ** len(comp))
        ribbon = LinComb.zero()
        d_i = dsets[comp]
        for other in comps:
            d_j = dsets[other]
            if d_j <= d_i:
                ribbon = ribbon + Fraction((-1) ** (len(d_i) - len(d_j))) * s_elem[other]
        accumulate(rhs, ribbon, t ** len(comp) * onet ** (n - len(comp)))
    return lhs == rhs


def _goldberg_table(max_degree: int, max_values: int) -> dict[PackedWord, Fraction]:
    table: dict[PackedWord, Fraction] = {}
    for n in range(1, max_degree + 1):
        for u in packed_words(n):
            if u.max_letter <= max_values:
                table[u] = goldberg_coeff(u)
    return table


def reconstruct_report(k: int, degree: int) -> tuple[bool, int, str | None]:
    """Compare the integral-formula expansion against the exp/log series:
    the sum over packed words u of coeff(u) times the realization of u must
    equal the Hausdorff series word for word.  Returns (ok, number of packed
    words checked, description of the first mismatch)."""
    phi = hausdorff_series(k, degree)
    table = _goldberg_table(degree, k)
    expected: dict[NCWord, Fraction] = {}
    for length in range(1, degree + 1):
        for word in iter_product(range(1, k + 1), repeat=length):
            c = table.get(pack(word))
            if c:
                expected[word] = c
    actual = dict(phi.items())
    if expected == actual:
        return True, len(table), None
    for word in sorted(set(expected) | set(actual), key=lambda w: (len(w), w)):
        e = expected.get(word, Fraction(0))
        a = actual.get(word, Fraction(0))
        if e != a:
            return False, len(table), (
                f"word {word}: integral formula gives {e}, series gives {a}")
    return False, len(table), "element mismatch without a word mismatch"


def reconstruct_check(k: int, degree: int) -> bool:
    ok, _, _ = reconstruct_report(k, degree)
    return ok
