from fractions import Fraction as F
from math import comb

import pytest

from shufflehopf.errors import (EmptyWordError, LeadingCoefficientError,
                                OrderError, ParseError)
from shufflehopf.fps import eq_series, exp_minus_one, identity_series, series
from shufflehopf.lincomb import LinComb
from shufflehopf.tensorhopf import (EMPTY_WORD, concat, deconcat,
                                    format_telem, generic_word,
                                    half_shuffle_left, half_shuffle_right,
                                    pair_product, parse_tensor_word, qshuffle,
                                    reduced_deconcat, shuffle,
                                    shuffle_via_descents, twisted_product)

from conftest import segments, splits, tw


def one(word):
    return LinComb.single(word)


class TestWordsAndText:
    def test_parse_and_format(self):
        w = tw("1 2.3 1")
        assert len(w) == 3
        assert str(w) == "1 2.3 1"
        assert tw("()") == EMPTY_WORD
        assert str(EMPTY_WORD) == "()"

    @pytest.mark.parametrize("bad", ["", "1  x", "0", "1 2..3"])
    def test_parse_rejects(self, bad):
        with pytest.raises(ParseError):
            parse_tensor_word(bad)

    def test_format_telem_ordering_and_signs(self):
        x = LinComb([(tw("1.2"), F(-1, 2)), (tw("1 2"), F(1))])
        assert format_telem(x) == "1*[1 2] - 1/2*[1.2]"
        assert format_telem(LinComb.zero()) == "0"


class TestConcat:
    def test_append(self):
        assert concat(one(tw("1")), one(tw("2"))) == one(tw("1 2"))

    def test_empty_neutral(self):
        w = one(tw("1 2.3"))
        assert concat(one(EMPTY_WORD), w) == w
        assert concat(w, one(EMPTY_WORD)) == w

    def test_bilinear(self):
        x = one(tw("1")) + one(tw("2"))
        assert concat(x, one(tw("3"))) == one(tw("1 3")) + one(tw("2 3"))


class TestHalfShuffles:
    def test_base_case(self):
        assert half_shuffle_left(tw("1"), tw("2")) == one(tw("1 2"))

    def test_one_unfold(self):
        # One unfolding of the recursion; also pinned by the descent route.
        expected = one(tw("1 2 3")) + one(tw("1 3 2"))
        assert half_shuffle_left(tw("1 2"), tw("3")) == expected
        left, _ = shuffle_via_descents(tw("1 2"), tw("3"))
        assert left == expected

    def test_empty_argument_rejected(self):
        with pytest.raises(EmptyWordError):
            half_shuffle_left(tw("1"), EMPTY_WORD)
        with pytest.raises(EmptyWordError):
            half_shuffle_right(EMPTY_WORD, tw("1"))
        with pytest.raises(EmptyWordError):
            shuffle_via_descents(tw("1"), EMPTY_WORD)

    def test_zinbiel_relation(self):
        for total in range(3, 6):
            for sizes in splits(total, 3):
                x, y, z = segments(sizes)
                lhs = half_shuffle_left(half_shuffle_left(x, y), z)
                rhs = half_shuffle_left(
                    one(x), half_shuffle_left(y, z) + half_shuffle_left(z, y))
                assert lhs == rhs, sizes


class TestShuffle:
    def test_two_letters(self):
        assert shuffle(tw("1"), tw("2")) == one(tw("1 2")) + one(tw("2 1"))

    def test_three_letters_against_descent_route(self):
        got = shuffle(tw("1 2"), tw("3"))
        assert got == one(tw("1 2 3")) + one(tw("1 3 2")) + one(tw("3 1 2"))
        left, right = shuffle_via_descents(tw("1 2"), tw("3"))
        assert left + right == got

    def test_unit(self):
        w = one(tw("1 2.2"))
        assert shuffle(one(EMPTY_WORD), w) == w
        assert shuffle(w, one(EMPTY_WORD)) == w

    def test_descent_route_base_case(self):
        left, right = shuffle_via_descents(tw("1"), tw("2"))
        assert left == one(tw("1 2"))
        assert right == one(tw("2 1"))

    def test_descent_route_matches_recursion(self):
        for total in range(2, 7):
            for sizes in splits(total, 2):
                x, y = segments(sizes)
                left, right = shuffle_via_descents(x, y)
                assert left == half_shuffle_left(x, y), sizes
                assert right == half_shuffle_right(x, y), sizes

    def test_term_count(self):
        left, right = shuffle_via_descents(generic_word(2), generic_word(2, start=3))
        total = sum(c for _, c in (left + right).items())
        assert total == comb(4, 2)

    def test_commutative_associative(self):
        for total in range(2, 6):
            for sizes in splits(total, 2):
                x, y = (one(w) for w in segments(sizes))
                assert shuffle(x, y) == shuffle(y, x)
                assert qshuffle(x, y) == qshuffle(y, x)
            for sizes in splits(total, 3):
                x, y, z = (one(w) for w in segments(sizes))
                assert shuffle(shuffle(x, y), z) == shuffle(x, shuffle(y, z))
                assert qshuffle(qshuffle(x, y), z) == qshuffle(x, qshuffle(y, z))


class TestQuasiShuffle:
    def test_two_letters(self):
        assert qshuffle(tw("1"), tw("2")) == (
            one(tw("1 2")) + one(tw("2 1")) + one(tw("1.2")))

    def test_one_unfold(self):
        expected = (one(tw("1 2 3")) + one(tw("1 3 2")) + one(tw("3 1 2"))
                    + one(tw("1 2.3")) + one(tw("1.3 2")))
        assert qshuffle(tw("1 2"), tw("3")) == expected

    def test_unit(self):
        w = one(tw("2.2 1"))
        assert qshuffle(w, one(EMPTY_WORD)) == w


class TestDeconcat:
    def test_single_letter(self):
        got = deconcat(one(tw("1")))
        assert got == LinComb([((EMPTY_WORD, tw("1")), 1),
                               ((tw("1"), EMPTY_WORD), 1)])

    def test_two_letters(self):
        got = deconcat(one(tw("1 2")))
        assert got == LinComb([((EMPTY_WORD, tw("1 2")), 1),
                               ((tw("1"), tw("2")), 1),
                               ((tw("1 2"), EMPTY_WORD), 1)])

    def test_unit_grouplike(self):
        assert deconcat(one(EMPTY_WORD)) == LinComb.single((EMPTY_WORD, EMPTY_WORD))

    def test_products_are_coalgebra_maps(self):
        for sizes in [(1, 1), (1, 2), (2, 2)]:
            x, y = segments(sizes)
            for prod in (shuffle, qshuffle):
                lhs = deconcat(prod(x, y))
                rhs = pair_product(prod, deconcat(one(x)), deconcat(one(y)))
                assert lhs == rhs

    def test_reduced_deconcat(self):
        got = reduced_deconcat(one(tw("1 2")))
        assert got == LinComb.single((tw("1"), tw("2")))
        assert not reduced_deconcat(one(tw("1")))
        with pytest.raises(EmptyWordError):
            reduced_deconcat(one(EMPTY_WORD))


class TestTwistedProduct:
    def test_identity_series_gives_shuffle(self):
        X = identity_series(6)
        for total in range(2, 6):
            for sizes in splits(total, 2):
                x, y = segments(sizes)
                assert twisted_product(X, x, y) == shuffle(x, y)

    def test_exp_twist_gives_quasi_shuffle(self):
        E1 = exp_minus_one(5)
        for total in range(2, 6):
            for sizes in splits(total, 2):
                x, y = segments(sizes)
                assert twisted_product(E1, x, y) == qshuffle(x, y), sizes

    def test_symbolic_q_degree_two(self):
        Eq = eq_series(F(1, 3), 2)
        got = twisted_product(Eq, tw("1"), tw("2"))
        assert got == (one(tw("1 2")) + one(tw("2 1"))
                       + F(1, 3) * one(tw("1.2")))

    def test_depends_only_on_low_coefficients(self):
        # Total degree 3: only p1..p3 can matter.
        base = series([1, F(1, 2), F(1, 6), 0, 0], 5)
        bumped = series([1, F(1, 2), F(1, 6), 7, -3], 5)
        x, y = segments((1, 2))
        assert twisted_product(base, x, y) == twisted_product(bumped, x, y)

    def test_order_too_small(self):
        with pytest.raises(OrderError):
            twisted_product(identity_series(2), tw("1 2"), tw("3"))

    def test_noninvertible_leading_coefficient(self):
        with pytest.raises(LeadingCoefficientError):
            twisted_product(series([0, 1], 2), tw("1"), tw("2"))
