from fractions import Fraction as F

import pytest

from shufflehopf.errors import ParseError
from shufflehopf.exact import Poly, format_rational, integrate, parse_rational


class TestRational:
    def test_lowest_terms_and_sign(self):
        assert F(2, 4) == F(1, 2)
        assert F(1, -2) == F(-1, 2)
        assert format_rational(F(1, -2)) == "-1/2"
        assert format_rational(F(0, 7)) == "0"
        assert format_rational(F(6, 3)) == "2"

    @pytest.mark.parametrize("text,value", [
        ("3/4", F(3, 4)),
        ("-3/4", F(-3, 4)),
        ("7", F(7)),
        ("  -7 ", F(-7)),
        ("0", F(0)),
    ])
    def test_parse(self, text, value):
        assert parse_rational(text) == value

    @pytest.mark.parametrize("text", ["3/-4", "1/0", "++1", "1.5", "", "a", "1 /2"])
    def test_parse_rejects(self, text):
        with pytest.raises(ParseError):
            parse_rational(text)

    def test_round_trip(self, rng):
        for _ in range(200):
            q = F(rng.randint(-999, 999), rng.randint(1, 999))
            assert parse_rational(format_rational(q)) == q

    def test_field_axioms_sampled(self, rng):
        for _ in range(100):
            a = F(rng.randint(-9, 9), rng.randint(1, 9))
            b = F(rng.randint(-9, 9), rng.randint(1, 9))
            c = F(rng.randint(-9, 9), rng.randint(1, 9))
            assert a * (b + c) == a * b + a * c
            assert (a + b) + c == a + (b + c)
            assert a + b == b + a and a * b == b * a
            if a:
                assert a * (1 / a) == 1


def P(*coeffs):
    return Poly(coeffs)


class TestPoly:
    def test_ring_examples(self):
        assert P(1, 1) * P(1, 2) == P(1, 3, 2)
        p = P(3, 0, -2, 5)
        assert p - p == Poly()
        assert not (p - p)

    def test_compose_example(self):
        assert Poly.monomial(2).compose(P(1, 1)) == P(1, 2, 1)

    def test_compose_associative(self, rng):
        def rand_poly():
            return Poly([F(rng.randint(-3, 3), rng.randint(1, 3))
                         for _ in range(rng.randint(1, 4))])
        for _ in range(25):
            p, q, r = rand_poly(), rand_poly(), rand_poly()
            assert p.compose(q).compose(r) == p.compose(q.compose(r))

    def test_canonical_form(self):
        assert Poly((1, 2, 0, 0)).coeffs == (F(1), F(2))
        assert Poly((0, 0)).coeffs == ()
        assert Poly() == Poly((0,))

    def test_integrate_examples(self):
        assert integrate(P(1, 1), F(-1), F(0)) == F(1, 2)
        assert integrate(P(F(1, 2), 1), F(-1), F(0)) == 0
        assert integrate(P(0, 1), F(0), F(1)) == F(1, 2)

    def test_integral_additive_over_intervals(self, rng):
        for _ in range(50):
            p = Poly([F(rng.randint(-4, 4), rng.randint(1, 4))
                      for _ in range(rng.randint(0, 5))])
            a, b, c = (F(rng.randint(-6, 6), rng.randint(1, 3)) for _ in range(3))
            assert (integrate(p, a, b) + integrate(p, b, c)
                    == integrate(p, a, c))

    def test_divided_by_x(self):
        assert P(0, 1, 2).divided_by_x() == P(1, 2)
        with pytest.raises(ValueError):
            P(1, 1).divided_by_x()

    def test_power_and_eval(self):
        assert P(1, 1) ** 3 == P(1, 3, 3, 1)
        assert P(1, 3, 2).eval(F(2)) == 15
