from fractions import Fraction as F
from itertools import permutations, product
from math import factorial

import pytest

from shufflehopf.errors import ConstantTermError, MomentError, OrderError
from shufflehopf.hausdorff import (EulerSignature, NCPoly, eulerian_E,
                                   eulerian_counts, eulerian_identity_check,
                                   format_ncpoly, goldberg_coeff,
                                   goldberg_integrand, goldberg_moment_coeff,
                                   goldberg_signature, hausdorff_series,
                                   log_moments, nc_exp, nc_log,
                                   ncpoly_terms_json, reconstruct_check,
                                   reconstruct_report)
from shufflehopf.wqsym import PackedWord, pack, packed_words

from conftest import pw


def letter(i, k=2, n=4):
    return NCPoly.letter(i, k, n)


class TestNCPoly:
    def test_mul_example(self):
        assert letter(1) * letter(2) == NCPoly(2, 4, [((1, 2), 1)])

    def test_unit_expansion(self):
        one = NCPoly.one(2, 4)
        got = (one + letter(1)) * (one + letter(2))
        assert got == NCPoly(2, 4, [((), 1), ((1,), 1), ((2,), 1), ((1, 2), 1)])

    def test_truncation_drops_long_words(self):
        x = NCPoly.letter(1, 1, 1)
        assert not x * x

    def test_mismatch_rejected(self):
        with pytest.raises(OrderError):
            NCPoly.letter(1, 2, 3) * NCPoly.letter(1, 2, 4)
        with pytest.raises(OrderError):
            NCPoly(2, 1, [((1, 2), 1)])

    def test_scalar_and_sub(self):
        x = letter(1)
        assert 3 * x - x == 2 * x
        assert not (x - x)


class TestExpLog:
    def test_exp_of_zero(self):
        assert nc_exp(NCPoly.zero(2, 3)) == NCPoly.one(2, 3)

    def test_log_undoes_exp_single_letter(self):
        x = NCPoly.letter(1, 2, 5)
        assert nc_log(nc_exp(x)) == x

    def test_round_trip_random(self, rng):
        for _ in range(10):
            terms = []
            for _ in range(rng.randint(1, 4)):
                word = tuple(rng.randint(1, 2)
                             for _ in range(rng.randint(1, 3)))
                terms.append((word, F(rng.randint(-2, 2), rng.randint(1, 3))))
            x = NCPoly(2, 4, terms)
            assert nc_log(nc_exp(x)) == x
            y = NCPoly.one(2, 4) + x
            assert nc_exp(nc_log(y)) == y

    def test_degree_two_commutator_term(self):
        prod = nc_exp(letter(1, 2, 2)) * nc_exp(letter(2, 2, 2))
        got = nc_log(prod)
        assert got.coefficient((1, 2)) == F(1, 2)
        assert got.coefficient((2, 1)) == F(-1, 2)
        assert got.coefficient((1,)) == 1

    def test_preconditions(self):
        with pytest.raises(ConstantTermError):
            nc_exp(NCPoly.one(2, 2))
        with pytest.raises(ConstantTermError):
            nc_log(NCPoly.letter(1, 2, 2))


class TestHausdorffSeries:
    def test_degree_one(self):
        got = hausdorff_series(2, 1)
        assert format_ncpoly(got) == "x1 + x2"

    def test_degree_two(self):
        got = hausdorff_series(2, 2)
        assert format_ncpoly(got) == "x1 + x2 + 1/2 x1x2 - 1/2 x2x1"

    def test_degree_three_coefficient(self):
        assert hausdorff_series(2, 3).coefficient((1, 2, 1)) == F(-1, 6)

    def test_single_letter_collapses(self):
        got = hausdorff_series(1, 5)
        assert got == NCPoly(1, 5, [((1,), 1)])

    def test_projection_to_first_letter(self):
        # Discarding every word that uses a letter other than x1 leaves x1.
        got = hausdorff_series(3, 4)
        kept = [(w, c) for w, c in got.items() if set(w) <= {1}]
        assert kept == [((1,), F(1))]

    def test_coefficients_constant_on_pack_classes(self):
        got = hausdorff_series(3, 4)
        by_pack = {}
        for length in range(1, 5):
            for word in product((1, 2, 3), repeat=length):
                by_pack.setdefault(pack(word), set()).add(got.coefficient(word))
        for u, values in by_pack.items():
            if u.max_letter <= 3:
                assert len(values) == 1, u

    def test_json_rendering(self):
        got = ncpoly_terms_json(hausdorff_series(2, 2))
        assert got[0] == {"word": [1], "coeff": "1"}
        assert got[-1] == {"word": [2, 1], "coeff": "-1/2"}


class TestEulerian:
    def test_small_rows(self):
        assert eulerian_E(1) == [1]
        assert eulerian_E(2) == [1, 1]
        assert eulerian_E(3) == [1, 4, 1]

    def test_against_permutation_enumeration(self):
        for n in range(1, 8):
            counts = [0] * n
            for sigma in permutations(range(1, n + 1)):
                d = sum(1 for i in range(n - 1) if sigma[i] > sigma[i + 1])
                counts[d] += 1
            assert list(eulerian_counts(n)) == counts

    def test_row_sums(self):
        for n in range(1, 8):
            assert sum(eulerian_counts(n)) == factorial(n)

    def test_generating_identity(self):
        for n in range(1, 5):
            assert eulerian_identity_check(n)


class TestSignature:
    def test_examples(self):
        assert goldberg_signature(pw("12")) == EulerSignature(0, 1, (1, 1))
        assert goldberg_signature(pw("11")) == EulerSignature(0, 0, (2,))
        assert goldberg_signature(pw("1122")) == EulerSignature(0, 1, (2, 2))

    def test_block_identity(self):
        for n in range(1, 6):
            for u in packed_words(n):
                sig = goldberg_signature(u)
                assert sig.descents + sig.rises == len(sig.blocks) - 1
                assert sum(sig.blocks) == n


class TestGoldberg:
    def test_forced_values(self):
        assert goldberg_coeff(pw("12")) == F(1, 2)
        assert goldberg_coeff(pw("21")) == F(-1, 2)
        assert goldberg_coeff(pw("11")) == 0
        assert goldberg_coeff(pw("1122")) == F(1, 24)
        assert goldberg_coeff(pw("121")) == F(-1, 6)

    def test_constant_words_vanish(self):
        for n in range(2, 7):
            assert goldberg_coeff(PackedWord((1,) * n)) == 0

    def test_against_series_oracle_to_degree_four(self):
        phi = hausdorff_series(4, 4)
        for n in range(1, 5):
            for u in packed_words(n):
                assert goldberg_coeff(u) == phi.coefficient(u.values), u

    def test_integrand_has_zero_constant(self):
        for n in range(1, 5):
            for u in packed_words(n):
                q = goldberg_integrand(u)
                assert q.coefficient(0) == 0
                assert q.degree == n


class TestMoments:
    def test_log_moments_reproduce_coefficients(self):
        for n in range(1, 6):
            ms = log_moments(n)
            for u in packed_words(n):
                assert goldberg_moment_coeff(u, ms) == goldberg_coeff(u), u

    def test_linear_moments_give_divided_powers(self):
        # f(z) = z turns the ordered product of exponentials minus one into
        # the divided-power sum: 1/u! on nondecreasing words, zero otherwise.
        for n in range(1, 6):
            moments = [1] + [0] * (n - 1)
            for u in packed_words(n):
                got = goldberg_moment_coeff(u, moments)
                if u.is_nondecreasing():
                    assert got == F(1, u.factorial()), u
                else:
                    assert got == 0, u

    def test_uniform_measure_example(self):
        got = goldberg_moment_coeff(pw("12"), [F(1, 2), F(1, 3)])
        assert got == F(5, 6)

    def test_insufficient_moments(self):
        with pytest.raises(MomentError):
            goldberg_moment_coeff(pw("12"), [F(1, 2)])


class TestReconstruction:
    def test_tiny(self):
        assert reconstruct_check(2, 2)

    def test_degree_four(self):
        ok, count, mismatch = reconstruct_report(4, 4)
        assert ok and mismatch is None
        assert count == 1 + 3 + 13 + 75
