from fractions import Fraction as F

import pytest

from shufflehopf.errors import LeadingCoefficientError, OrderError, ParseError
from shufflehopf.exact import Poly
from shufflehopf.fps import (Series, compose, derivative, divide_truncated,
                             eq_series, exp_minus_one, identity_series,
                             inverse, log_one_plus, monomial_series,
                             named_series, parse_series, series,
                             xlog_one_plus)


def rand_tangent(rng, order):
    return series([1] + [F(rng.randint(-3, 3), rng.randint(1, 3))
                         for _ in range(order - 1)], order)


class TestSeriesBasics:
    def test_coefficient_access_is_strict(self):
        P = series([1, 2], 2)
        assert P.coeff(2) == 2
        with pytest.raises(OrderError):
            P.coeff(3)
        with pytest.raises(ValueError):
            P.coeff(0)

    def test_no_empty_series(self):
        with pytest.raises(ValueError):
            Series(())

    def test_add_needs_equal_orders(self):
        with pytest.raises(OrderError):
            series([1], 1) + series([1, 0], 2)


class TestCompose:
    def test_monomial_substitution(self):
        P = series([1, 1], 4)          # X + X^2
        Q = monomial_series(2, 4)      # X^2
        assert compose(P, Q) == series([0, 1, 0, 1], 4)

    def test_identity_neutral(self, rng):
        for _ in range(20):
            P = rand_tangent(rng, 6)
            assert compose(P, identity_series(6)) == P
            assert compose(identity_series(6), P) == P

    def test_exp_after_log_is_identity(self):
        got = compose(exp_minus_one(8), log_one_plus(8))
        assert got == identity_series(8)

    def test_order_mismatch(self):
        with pytest.raises(OrderError):
            compose(series([1], 1), series([1, 0], 2))

    def test_associative(self, rng):
        for _ in range(15):
            P, Q, R = (rand_tangent(rng, 8) for _ in range(3))
            assert compose(compose(P, Q), R) == compose(P, compose(Q, R))


class TestInverse:
    def test_identity(self):
        assert inverse(identity_series(5)) == identity_series(5)

    def test_exp_inverts_to_log(self):
        # Known expansion: coefficient (-1)^(n-1)/n, confirmed by round-trip.
        W = inverse(exp_minus_one(8))
        assert W == log_one_plus(8)
        assert compose(W, exp_minus_one(8)) == identity_series(8)
        assert compose(exp_minus_one(8), W) == identity_series(8)

    def test_involution_on_tangent_series(self, rng):
        for _ in range(15):
            P = rand_tangent(rng, 8)
            assert inverse(inverse(P)) == P

    def test_zero_leading_coefficient(self):
        with pytest.raises(LeadingCoefficientError):
            inverse(series([0, 1], 2))


class TestDerivative:
    def test_examples(self):
        assert derivative(identity_series(3)) == Poly((1,))
        assert derivative(monomial_series(2, 3)) == Poly((0, 2))
        assert derivative(exp_minus_one(4)).coefficient(0) == 1

    def test_chain_rule(self, rng):
        n = 7
        for _ in range(15):
            P, Q = rand_tangent(rng, n), rand_tangent(rng, n)
            lhs = derivative(compose(P, Q)).truncated(n - 1)
            rhs = (derivative(P).compose(Q.as_poly())
                   * derivative(Q)).truncated(n - 1)
            assert lhs == rhs

    def test_divide_truncated(self):
        num = compose(identity_series(6), log_one_plus(6)).as_poly()
        got = divide_truncated(num, derivative(log_one_plus(6)), 6)
        assert got == xlog_one_plus(6).as_poly()
        with pytest.raises(LeadingCoefficientError):
            divide_truncated(Poly((1,)), Poly((0, 1)), 3)


class TestNamedSeries:
    def test_eq_at_zero_is_identity(self):
        assert eq_series(0, 6) == identity_series(6)

    def test_exp_coefficients(self):
        assert exp_minus_one(4).coeffs == (F(1), F(1, 2), F(1, 6), F(1, 24))

    def test_xlog_coefficients(self):
        assert xlog_one_plus(4).coeffs == (F(1), F(1, 2), F(-1, 6), F(1, 12))

    def test_log_coefficients(self):
        assert log_one_plus(4).coeffs == (F(1), F(-1, 2), F(1, 3), F(-1, 4))

    def test_unknown_name(self):
        with pytest.raises(ParseError):
            named_series("nope", 3)
        assert named_series("id", 3) == identity_series(3)
        assert named_series("Eq", 3, q=F(1, 2)) == eq_series(F(1, 2), 3)


class TestParseSeries:
    def test_literals(self):
        assert parse_series("exp1", 5) == exp_minus_one(5)
        assert parse_series("Eq:1/2", 4) == eq_series(F(1, 2), 4)
        got = parse_series("coeffs:1,1/2,1/6", 99)
        assert got == series([1, F(1, 2), F(1, 6)], 3)

    def test_rejects(self):
        with pytest.raises(ParseError):
            parse_series("coeffs:", 3)
        with pytest.raises(ParseError):
            parse_series("Eq:x", 3)
        with pytest.raises(ParseError):
            parse_series("wat", 3)


class TestGroupStructure:
    def test_tangent_round_trips(self, rng):
        for _ in range(10):
            P = rand_tangent(rng, 8)
            W = inverse(P)
            assert compose(P, W) == identity_series(8)
            assert compose(W, P) == identity_series(8)
