"""Exact scalar arithmetic, the string grammar, evaluation, derivatives.

Expected values for derived identities are frozen from an independent
Fraction-arithmetic oracle: every claimed identity is also evaluated at
rational sample points with stdlib Fractions only.
"""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import rand_nonzero_ratq, rand_ratq, sample_points
from yangbaxter.errors import EvaluationPole, ScalarParseError
from yangbaxter.scalars import (OMEGA, OMEGA_INV, ONE, Q, QINV, ZERO, RatQ,
                                derivative_at_one, eval_q, format_scalar,
                                is_laurent, laurent_terms, parse_scalar,
                                q_power, ratq)


def frac_omega(q0: Fraction) -> Fraction:
    return q0 - 1 / q0


class TestBasicArithmetic:
    def test_inverse_pair(self):
        assert Q * QINV == ONE

    def test_omega_inverse(self):
        assert OMEGA * OMEGA_INV == ONE

    def test_diagonal_hecke_identity(self):
        # (q/omega)^2 - (q/omega) = 1/omega^2, frozen canonical form
        lhs = (Q * OMEGA_INV) ** 2 - Q * OMEGA_INV
        assert lhs == OMEGA_INV ** 2
        assert lhs == RatQ((0, 0, 1), (1, 0, -2, 0, 1))
        # independent Fraction oracle at sample points
        for q0 in sample_points():
            w = frac_omega(q0)
            assert lhs.evaluate(q0) == (q0 / w) ** 2 - q0 / w

    def test_negative_and_subtraction(self):
        x = 3 * q_power(2) - q_power(-1)
        assert (-x) + x == ZERO
        assert x - x == ZERO

    def test_pow_negative(self):
        assert OMEGA ** -2 == OMEGA_INV * OMEGA_INV
        assert Q ** -3 == q_power(-3)

    def test_zero_inverse_raises(self):
        with pytest.raises(ZeroDivisionError):
            ZERO.inverse()
        with pytest.raises(ZeroDivisionError):
            ONE / ZERO

    def test_coercions(self):
        assert Q + 1 == 1 + Q
        assert Fraction(1, 2) * Q == Q / 2
        assert ratq(Fraction(-3, 4)) == RatQ((-3,), (4,))


class TestEvaluation:
    def test_omega_at_two(self):
        assert eval_q(OMEGA, 2) == Fraction(3, 2)

    def test_pole_at_one(self):
        with pytest.raises(EvaluationPole):
            eval_q(OMEGA_INV, 1)

    def test_q_squared_at_minus_one(self):
        assert eval_q(Q ** 2, -1) == 1

    def test_derivative_at_one(self):
        assert derivative_at_one(Q) == 1
        assert derivative_at_one(OMEGA) == 2
        assert derivative_at_one(ratq(7)) == 0

    def test_derivative_pole(self):
        with pytest.raises(EvaluationPole):
            derivative_at_one(OMEGA_INV)

    def test_derivative_matches_difference_quotient(self):
        # d/dq at 1 via the oracle: limit of (f(1+h)-f(1))/h with exact h
        rng = random.Random(7)
        for _ in range(20):
            x = rand_ratq(rng)
            try:
                d = x.derivative_at_one()
            except EvaluationPole:
                continue
            f1 = x.evaluate(1)
            h = Fraction(1, 10 ** 12)
            approx = (x.evaluate(1 + h) - f1) / h
            assert abs(approx - d) < Fraction(1, 10 ** 6)


class TestGrammar:
    @pytest.mark.parametrize("s", [
        "0", "3", "-7", "q^2", "-2*q^-1", "q^1 + -1*q^-1",
        "(q^2)/(q^4 + -2*q^2 + 1)", "(1)/(2)", "( q^1 + -1 ) / ( 3*q^2 )",
    ])
    def test_round_trip(self, s):
        v = parse_scalar(s)
        assert parse_scalar(format_scalar(v)) == v

    def test_omega_format(self):
        assert format_scalar(OMEGA) == "q^1 + -1*q^-1"
        assert parse_scalar("q^1 + -1*q^-1") == OMEGA

    def test_whitespace_insignificant(self):
        assert parse_scalar(" q^1 +  -1*q^-1 ") == OMEGA

    @pytest.mark.parametrize("s", ["", "q", "q^", "1*q2", "(1)/(0)", "2q^3", "--3"])
    def test_rejects_garbage(self, s):
        with pytest.raises(ScalarParseError):
            parse_scalar(s)

    def test_random_round_trip(self):
        rng = random.Random(11)
        for _ in range(200):
            x = rand_ratq(rng)
            assert parse_scalar(format_scalar(x)) == x


class TestLaurent:
    def test_from_laurent(self):
        x = RatQ.from_laurent({1: 1, -1: -1})
        assert x == OMEGA

    def test_laurent_terms(self):
        assert laurent_terms(OMEGA) == {1: Fraction(1), -1: Fraction(-1)}
        assert is_laurent(OMEGA)
        assert not is_laurent(OMEGA_INV)

    def test_laurent_terms_rejects_general_fraction(self):
        with pytest.raises(ValueError):
            laurent_terms(ONE / (ONE + Q))

    def test_fraction_coefficients(self):
        x = RatQ.from_laurent({0: Fraction(1, 2), 2: Fraction(-2, 3)})
        for q0 in sample_points():
            assert x.evaluate(q0) == Fraction(1, 2) - Fraction(2, 3) * q0 ** 2


ratq_strategy = st.builds(
    lambda coeffs, dencoeffs: _build_ratq(coeffs, dencoeffs),
    st.lists(st.integers(-5, 5), min_size=1, max_size=4),
    st.lists(st.integers(-5, 5), min_size=1, max_size=3),
)


def _build_ratq(coeffs, dencoeffs):
    num = RatQ(tuple(coeffs))
    den = RatQ(tuple(dencoeffs))
    if not den:
        den = ONE + Q
    return num / den


class TestFieldAxioms:
    @settings(max_examples=150, deadline=None)
    @given(ratq_strategy, ratq_strategy, ratq_strategy)
    def test_associativity_and_distributivity(self, a, b, c):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c

    @settings(max_examples=150, deadline=None)
    @given(ratq_strategy, ratq_strategy)
    def test_commutativity_and_canonical_form(self, a, b):
        # canonical form: equal values have identical representations
        assert a + b == b + a
        assert tuple(a + b) == tuple(b + a)
        assert a * b == b * a

    @settings(max_examples=150, deadline=None)
    @given(ratq_strategy)
    def test_multiplicative_inverse(self, a):
        if a:
            assert a * a.inverse() == ONE
            # canonical invariants: gcd divided out, positive leading den
            num, den = a
            assert den[-1] > 0

    @settings(max_examples=100, deadline=None)
    @given(ratq_strategy, ratq_strategy)
    def test_evaluation_is_a_homomorphism(self, a, b):
        for q0 in (Fraction(2), Fraction(-3, 2)):
            try:
                va, vb = a.evaluate(q0), b.evaluate(q0)
                assert (a + b).evaluate(q0) == va + vb
                assert (a * b).evaluate(q0) == va * vb
            except EvaluationPole:
                pass


class TestAssociationOrderCanonical:
    def test_sum_in_any_association_order(self):
        rng = random.Random(3)
        xs = [rand_ratq(rng) for _ in range(6)]
        left = xs[0]
        for x in xs[1:]:
            left = left + x
        right = xs[-1]
        for x in reversed(xs[:-1]):
            right = x + right
        assert tuple(left) == tuple(right)
