"""Named verification suites behind the `verify` command.

Each suite sweeps one family of identities exhaustively over words of
pairwise distinct generators up to a degree bound (which is a complete check
at each degree, since the operators involved commute with algebra morphisms)
and reports every failing instance.  Randomized cases use a fixed seed so
runs are reproducible.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from . import nattrans, wqsym
from .errors import ParseError
from .fps import (Series, compose, eq_series, exp_minus_one, identity_series,
                  inverse, log_one_plus, monomial_series, series,
                  xlog_one_plus)
from .hausdorff import (eulerian_counts, eulerian_identity_check,
                        goldberg_coeff, hausdorff_series)
from .lincomb import LinComb
from .tensorhopf import (deconcat, generic_word, half_shuffle_left, pair_map,
                         pair_product, qshuffle, reduced_deconcat, shuffle,
                         twisted_product, word_elem)
from .wqsym import (coproduct_compose_identity_holds, e1, e1_closed,
                    embed_fqsym, fqsym_shuffle_linear, identity_word,
                    nondecreasing_words, packed_words, permutation_words,
                    readback, wcompose_linear, wcoproduct_linear,
                    wpair_product, wproduct)

_SEED = 271828


@dataclass
class SuiteResult:
    suite: str
    max_n: int
    passed: bool
    cases: int
    failures: list[str] = field(default_factory=list)


class _Recorder:
    def __init__(self) -> None:
        self.cases = 0
        self.failures: list[str] = []

    def check(self, ok: bool, describe: str) -> None:
        self.cases += 1
        if not ok:
            self.failures.append(describe)


def _random_tangent_series(rng: random.Random, order: int) -> Series:
    coeffs = [Fraction(1)]
    for _ in range(order - 1):
        coeffs.append(Fraction(rng.randint(-3, 3), rng.randint(1, 4)))
    return series(coeffs, order)


def _splits(total: int, parts: int):
    """All ways to write total as an ordered sum of `parts` positive sizes."""
    if parts == 1:
        yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _splits(total - first, parts - 1):
            yield (first,) + rest


def _generic_segments(sizes) -> list:
    words = []
    start = 1
    for size in sizes:
        words.append(generic_word(size, start=start))
        start += size
    return words


def suite_zinbiel(max_n: int) -> _Recorder:
    rec = _Recorder()
    for total in range(3, max_n + 1):
        for sizes in _splits(total, 3):
            x, y, z = _generic_segments(sizes)
            lhs = half_shuffle_left(half_shuffle_left(x, y), z)
            rhs = half_shuffle_left(
                word_elem(x), half_shuffle_left(y, z) + half_shuffle_left(z, y))
            rec.check(lhs == rhs, f"half-shuffle relation fails at sizes {sizes}")
    return rec


def suite_hoffman(max_n: int) -> _Recorder:
    rec = _Recorder()
    E1 = exp_minus_one(max(max_n, 2))
    for total in range(2, max_n + 1):
        for sizes in _splits(total, 2):
            u, v = _generic_segments(sizes)
            lhs = nattrans.phi_apply(E1, shuffle(u, v))
            rhs = qshuffle(nattrans.phi_apply(E1, u), nattrans.phi_apply(E1, v))
            rec.check(lhs == rhs, f"exp-transport of shuffle fails at sizes {sizes}")
    return rec


def suite_compose_law(max_n: int) -> _Recorder:
    rec = _Recorder()
    order = max(max_n, 6)
    pairs = [(exp_minus_one(order), log_one_plus(order))]
    rng = random.Random(_SEED)
    while len(pairs) < 21:
        pairs.append((_random_tangent_series(rng, order),
                      _random_tangent_series(rng, order)))
    for idx, (P, Q) in enumerate(pairs):
        for n in range(1, max_n + 1):
            w = generic_word(n)
            rec.check(nattrans.phi_compose_check(P, Q, w),
                      f"composition law fails for pair {idx} on length {n}")
    composite = compose(exp_minus_one(order), log_one_plus(order))
    rec.check(composite == identity_series(order),
              "exp-after-log composite is not the identity series")
    return rec


def suite_bracket(max_n: int) -> _Recorder:
    rec = _Recorder()
    for m in range(1, 5):
        for n in range(1, 5):
            for length in range(1, max_n + 1):
                rec.check(nattrans.coder_bracket(m, n, generic_word(length)),
                          f"bracket fails for m={m}, n={n}, length {length}")
    return rec


def suite_conjugation(max_n: int) -> _Recorder:
    rec = _Recorder()
    order = max(max_n, 4)
    rng = random.Random(_SEED + 1)
    us = [("exp1", exp_minus_one(order)), ("E(1/2)", eq_series(Fraction(1, 2), order)),
          ("random", _random_tangent_series(rng, order))]
    vs = [("X", monomial_series(1, order)), ("X^2", monomial_series(2, order)),
          ("X^3", monomial_series(3, order))]
    for uname, U in us:
        for vname, V in vs:
            for n in range(1, max_n + 1):
                rec.check(nattrans.conjugate_coder_check(U, V, generic_word(n)),
                          f"conjugation fails for U={uname}, V={vname}, length {n}")
            back = nattrans.conjugate_coder(U, nattrans.conjugate_coder(inverse(U), V))
            rec.check(back == V, f"conjugation round-trip fails for U={uname}, V={vname}")
    rec.check(nattrans.conjugate_coder(log_one_plus(order), monomial_series(1, order))
              == xlog_one_plus(order),
              "degree-operator transport does not give (1+X)log(1+X)")
    return rec


def suite_grading(max_n: int) -> _Recorder:
    rec = _Recorder()
    order = max(max_n, 2)
    rng = random.Random(_SEED + 2)
    ps = [("id", identity_series(order)), ("exp1", exp_minus_one(order)),
          ("random", _random_tangent_series(rng, order))]
    for pname, P in ps:
        D = nattrans.grading_operator_series(P)
        for n in range(1, max_n + 1):
            x = nattrans.phi_apply(P, word_elem(generic_word(n)))
            parts = [nattrans.grading_project(P, m, x) for m in range(1, max_n + 1)]
            total = LinComb.zero()
            for part in parts:
                total = total + part
            rec.check(total == x, f"projections do not resum x for P={pname}, n={n}")
            rec.check(parts[n - 1] == x,
                      f"transported word is not in eigenspace {n} for P={pname}")
            for m in range(1, max_n + 1):
                pm = nattrans.grading_project(P, m, x)
                rec.check(nattrans.grading_project(P, m, pm) == pm,
                          f"projection {m} not idempotent for P={pname}, n={n}")
                rec.check(nattrans.coder_apply(D, pm) == m * pm,
                          f"eigenvalue {m} fails for P={pname}, n={n}")
                for mm in range(1, max_n + 1):
                    if mm != m:
                        rec.check(not nattrans.grading_project(P, mm, pm),
                                  f"projections {m},{mm} not orthogonal for P={pname}")
    E1 = exp_minus_one(order)
    D = nattrans.grading_operator_series(E1)
    rec.check(D == xlog_one_plus(order),
              "quasi-shuffle grading series is not (1+X)log(1+X)")
    for n in range(1, max_n + 1):
        x = nattrans.phi_apply(E1, word_elem(generic_word(n)))
        rec.check(nattrans.coder_apply(D, x) == n * x,
                  f"quasi-shuffle grading eigenvalue fails at degree {n}")
    return rec


def suite_e1(max_n: int) -> _Recorder:
    rec = _Recorder()
    full = {kind: LinComb.zero() for kind in ("shuffle", "qshuffle")}
    for n in range(1, max_n + 1):
        conv = e1(n, "qshuffle")
        rec.check(e1_closed(n) == conv,
                  f"closed idempotent formula disagrees at degree {n}")
        for kind in ("shuffle", "qshuffle"):
            # Operator idempotence on degree-n input: composing on the left
            # needs every component of degree <= n (the quasi-shuffle
            # idempotent genuinely mixes bidegrees).
            idem = e1(n, kind)
            full[kind] = full[kind] + idem
            rec.check(wcompose_linear(full[kind], idem) == idem,
                      f"idempotent not idempotent for kind={kind}, degree {n}")
    return rec


def suite_embeddings(max_n: int) -> _Recorder:
    rec = _Recorder()
    order = max(max_n, 2)
    qs = [Fraction(0), Fraction(1, 2), Fraction(1)]
    for q in qs:
        Eq = eq_series(q, order)
        embed = lambda F: wqsym._as_welem(F).apply(lambda s: embed_fqsym(q, s))
        # algebra morphism into the twisted convolution
        for total in range(2, max_n + 1):
            for na in range(1, total):
                nb = total - na
                for sa in permutation_words(na):
                    for sb in permutation_words(nb):
                        lhs = embed(fqsym_shuffle_linear(
                            LinComb.single(sa), LinComb.single(sb)))
                        rhs = wproduct("twisted", embed(LinComb.single(sa)),
                                       embed(LinComb.single(sb)), Eq)
                        rec.check(lhs == rhs,
                                  f"embedding not multiplicative: q={q}, {sa} | {sb}")
        # equivariance under composition with permutations
        for n in range(1, min(max_n, 4) + 1):
            phi_component = readback(nattrans.phi_apply(Eq, word_elem(generic_word(n))))
            for sigma in permutation_words(n):
                direct = embed_fqsym(q, sigma)
                via_compose = wcompose_linear(phi_component, LinComb.single(sigma))
                rec.check(direct == via_compose,
                          f"embedding differs from composition route: q={q}, sigma={sigma}")
                for beta in permutation_words(n):
                    lhs = embed_fqsym(q, wqsym.wcompose(sigma, beta))
                    rhs = wcompose_linear(direct, LinComb.single(beta))
                    rec.check(lhs == rhs,
                              f"equivariance fails: q={q}, sigma={sigma}, beta={beta}")
    # the q=1 image of the identity is the divided-power sum
    for n in range(1, max_n + 1):
        expected = LinComb((u, Fraction(1, u.factorial()))
                           for u in nondecreasing_words(n))
        rec.check(embed_fqsym(1, identity_word(n)) == expected,
                  f"divided-power image fails at degree {n}")
    return rec


def suite_eulerian(max_n: int) -> _Recorder:
    rec = _Recorder()
    for n in range(1, min(max_n, 6) + 1):
        rec.check(eulerian_identity_check(n),
                  f"generating identity fails at degree {n}")
    for n in range(1, max(max_n, 7) + 1):
        rec.check(sum(eulerian_counts(n)) == factorial(n),
                  f"descent counts do not sum to {n}!")
    return rec


def suite_goldberg(max_n: int) -> _Recorder:
    rec = _Recorder()
    phi = hausdorff_series(max_n, max_n)
    for n in range(1, max_n + 1):
        for u in packed_words(n):
            got = goldberg_coeff(u)
            want = phi.coefficient(u.values)
            rec.check(got == want,
                      f"coefficient of {u} differs: integral {got}, series {want}")
    return rec


def suite_hopf_compat(max_n: int) -> _Recorder:
    rec = _Recorder()
    order = max(max_n, 2)
    E1 = exp_minus_one(order)
    Eh = eq_series(Fraction(1, 2), order)

    # coalgebra endomorphism / coderivation compatibilities
    for pname, P in (("exp1", E1), ("E(1/2)", Eh)):
        phi_op = lambda t, P=P: nattrans.phi_apply(P, t)
        coder_op = lambda t, P=P: nattrans.coder_apply(P, t)
        ident = lambda t: t
        for n in range(1, max_n + 1):
            w = word_elem(generic_word(n))
            rec.check(deconcat(nattrans.phi_apply(P, w))
                      == pair_map(phi_op, phi_op, deconcat(w)),
                      f"endomorphism is not a coalgebra map: P={pname}, length {n}")
            lhs = deconcat(nattrans.coder_apply(P, w))
            rhs = (pair_map(coder_op, ident, deconcat(w))
                   + pair_map(ident, coder_op, deconcat(w)))
            rec.check(lhs == rhs,
                      f"coderivation law fails: P={pname}, length {n}")

    # product/coproduct compatibility down in the tensor algebra
    prods = [("shuffle", shuffle), ("qshuffle", qshuffle),
             ("twisted", lambda x, y: twisted_product(Eh, x, y))]
    for total in range(2, max_n + 1):
        for sizes in _splits(total, 2):
            u, v = _generic_segments(sizes)
            for name, prod in prods:
                lhs = deconcat(prod(word_elem(u), word_elem(v)))
                rhs = pair_product(prod, deconcat(word_elem(u)), deconcat(word_elem(v)))
                rec.check(lhs == rhs,
                          f"coproduct not multiplicative for {name} at sizes {sizes}")

    # conilpotency: the n-fold reduced coproduct kills words of length <= n
    def split_leftmost(slots):
        head, rest = slots[0], slots[1:]
        if len(head) < 2:
            return LinComb.zero()
        return reduced_deconcat(word_elem(head)).map_basis(
            lambda pair: pair + rest)

    for n in range(1, max_n + 1):
        state = reduced_deconcat(word_elem(generic_word(n)))
        depth = 1
        while state and depth < n:
            state = state.apply(split_leftmost)
            depth += 1
        rec.check(not state, f"reduced coproduct does not vanish at length {n}")

    # packed-word level: coproduct versus convolution products
    cap = min(max_n, 4)
    for total in range(2, cap + 1):
        for na in range(1, total):
            nb = total - na
            for f in packed_words(na):
                for g in packed_words(nb):
                    for kind in ("shuffle", "qshuffle"):
                        lhs = wcoproduct_linear(wproduct(kind, f, g))
                        rhs = wpair_product(kind, wcoproduct_linear(LinComb.single(f)),
                                            wcoproduct_linear(LinComb.single(g)))
                        rec.check(lhs == rhs,
                                  f"packed-word coproduct not multiplicative: "
                                  f"{kind}, {f} | {g}")

    # coproduct versus composition: holds for nondecreasing outer words,
    # and must genuinely fail somewhere outside that class
    witnessed_failure = False
    for m in range(1, cap + 1):
        for g in packed_words(m):
            p = g.max_letter
            if p > cap:
                continue
            for f in packed_words(p):
                if f.degree != g.max_letter:
                    continue
                holds = coproduct_compose_identity_holds(f, g)
                if f.is_nondecreasing():
                    rec.check(holds,
                              f"composite coproduct fails for nondecreasing {f} o {g}")
                elif not holds:
                    witnessed_failure = True
    rec.check(witnessed_failure,
              "no failure witnessed for any non-nondecreasing outer word")
    return rec


SUITES = {
    "zinbiel": suite_zinbiel,
    "hopf-compat": suite_hopf_compat,
    "hoffman": suite_hoffman,
    "compose-law": suite_compose_law,
    "bracket": suite_bracket,
    "conjugation": suite_conjugation,
    "grading": suite_grading,
    "e1": suite_e1,
    "embeddings": suite_embeddings,
    "eulerian": suite_eulerian,
    "goldberg": suite_goldberg,
}

DEFAULT_MAX_N = 4


def available_suites() -> list[str]:
    return list(SUITES) + ["all"]


def run_suite(name: str, max_n: int = DEFAULT_MAX_N) -> list[SuiteResult]:
    """Run one named suite (or 'all') up to the degree bound; returns one
    result per suite executed."""
    if max_n < 1:
        raise ParseError("--max-n must be at least 1")
    if name == "all":
        names = list(SUITES)
    elif name in SUITES:
        names = [name]
    else:
        raise ParseError(
            f"unknown suite {name!r} (expected one of {', '.join(available_suites())})")
    results = []
    for suite_name in names:
        rec = SUITES[suite_name](max_n)
        results.append(SuiteResult(suite=suite_name, max_n=max_n,
                                   passed=not rec.failures, cases=rec.cases,
                                   failures=rec.failures))
    return results
