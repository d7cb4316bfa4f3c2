"""Special-function constructors and their built-in identities."""

import math
import random

import pytest

from trunclog.fields import inv_mod
from trunclog.polys import FpPoly, RatFn
from trunclog.quotient import XPoly
from trunclog.special import (
    alpha_p_minus_alpha,
    finite_polylog,
    laguerre_const,
    laguerre_const_routes,
    laguerre_pm1,
    laguerre_scaled,
    trunc_binomial,
)


def truncated_exponential(p):
    """Independent oracle: sum X^k / k! with factorials done in the integers."""
    return FpPoly(
        [inv_mod(math.factorial(k) % p, p) for k in range(p)], p, var="X"
    )


class TestLaguerrePm1:
    def test_p3_expansion(self):
        # expand term by term mod 3 by hand: (2a^2+1) + (2a+1) X + 2 X^2
        lag = laguerre_pm1(3)
        assert lag.coeffs[0] == RatFn.from_poly(FpPoly([1, 0, 2], 3))
        assert lag.coeffs[1] == RatFn.from_poly(FpPoly([1, 2], 3))
        assert lag.coeffs[2] == RatFn.const(2, 3)

    def test_constant_term(self):
        for p in (3, 5, 7, 11, 13):
            want = FpPoly.one(p) - FpPoly.monomial(1, p - 1, p)
            assert laguerre_pm1(p).coeffs[0] == RatFn.from_poly(want)

    def test_top_coefficient_is_minus_one(self):
        for p in (3, 5, 7, 11, 13):
            assert laguerre_pm1(p).coeffs[p - 1] == RatFn.const(-1, p)

    def test_specializes_to_truncated_exponential(self):
        for p in (3, 5, 7):
            assert laguerre_pm1(p).specialize(0) == truncated_exponential(p)

    def test_two_displayed_coefficient_forms_agree(self):
        # -(a-1)_(p-1-k) == C(a-1, p-1-k) * (-1)^k / k! for every k, p <= 31
        from trunclog.fields import binom_of_poly, pochhammer

        for p in (3, 5, 7, 11, 13, 17, 19, 23, 29, 31):
            a_minus_1 = FpPoly([-1, 1], p)
            for k in range(p):
                first = -pochhammer(a_minus_1, p - 1 - k)
                second = (
                    binom_of_poly(a_minus_1, p - 1 - k)
                    * pow(-1, k, p)
                    * inv_mod(math.factorial(k) % p, p)
                )
                assert first == second

    def test_p2_rejected(self):
        with pytest.raises(ValueError):
            laguerre_pm1(2)


class TestLaguerreScaled:
    def test_r_one_is_plain(self):
        for p in (3, 5, 7):
            assert laguerre_scaled(p, 1) == laguerre_pm1(p)

    def test_constant_term_r2_p3(self):
        # substitute into 1 - a^(p-1): 1 - (2a)^2 = 1 + 2a^2 mod 3
        assert laguerre_scaled(3, 2).coeffs[0] == RatFn.from_poly(FpPoly([1, 0, 2], 3))

    def test_specializes_to_scaled_exponential(self):
        for p in (3, 5):
            for r in range(1, p):
                want = truncated_exponential(p).compose(FpPoly([0, r], p, "X"))
                assert laguerre_scaled(p, r).specialize(0) == want

    def test_zero_scale_rejected(self):
        with pytest.raises(ValueError):
            laguerre_scaled(5, 5)


class TestFinitePolylog:
    def test_p3_d1(self):
        # 1/2 = 2 mod 3
        assert finite_polylog(3, 1) == FpPoly([0, 1, 2], 3, "X")

    def test_d0_all_units(self):
        for p in (3, 5, 7):
            assert finite_polylog(p, 0) == FpPoly([0] + [1] * (p - 1), p, "X")

    def test_p5_top_coefficient(self):
        # 1/4 = 4 mod 5
        assert finite_polylog(5, 1).coeff(4) == 4

    def test_shape(self):
        for p in (3, 5, 7, 11, 13):
            l1 = finite_polylog(p, 1)
            assert l1.degree == p - 1
            assert l1.coeff(0) == 0

    def test_shift_identity(self):
        # polylog_1(1 - X) == polylog_1(X) for p <= 13
        for p in (3, 5, 7, 11, 13):
            l1 = finite_polylog(p, 1)
            assert l1.compose(FpPoly([1, -1], p, "X")) == l1

    def test_reciprocal_identity(self):
        # polylog_1(X) == -X^p * polylog_1(1/X): compare the expanded polynomial
        for p in (3, 5, 7, 11, 13):
            l1 = finite_polylog(p, 1)
            rhs = FpPoly(
                [0] + [-inv_mod(p - k, p) % p for k in range(1, p)], p, "X"
            )
            assert l1 == rhs


class TestTruncBinomial:
    def test_f_zero(self):
        assert trunc_binomial(0, 1, 5) == XPoly.constant(1, 5)

    def test_small_integer_exponent_is_exact_binomial(self):
        for p in (5, 7):
            for a in range(p):
                got = trunc_binomial(a, 1, p)
                want = XPoly([math.comb(a, k) for k in range(a + 1)], p)
                assert got == want

    def test_product_rule_sampled(self):
        rng = random.Random(0)
        zero = RatFn.zero(5)
        for _ in range(10):
            p = 5
            f = FpPoly([rng.randrange(p) for _ in range(2)], p)
            g = FpPoly([rng.randrange(p) for _ in range(2)], p)
            lhs = trunc_binomial(f, 1, p).with_modulus(zero) * trunc_binomial(
                g, 1, p
            ).with_modulus(zero)
            assert lhs == trunc_binomial(f + g, 1, p).with_modulus(zero)

    def test_derivative_rule_polynomial_exponent(self):
        for p in (5, 7):
            for coeffs in ([4, 1], [1, 2], [1, 1, 1]):
                f = FpPoly(coeffs, p)
                lhs = trunc_binomial(f, 1, p).derivative()
                rhs = trunc_binomial(f - 1, 1, p).scalar_mul(f) + XPoly.x_power(
                    p, p - 1, scale=RatFn.from_poly(f.frobenius_p() - f)
                )
                assert lhs == rhs

    def test_derivative_rule_rational_exponent(self):
        # the rule holds verbatim with f a rational expression
        p = 5
        f = RatFn(FpPoly([1], p), FpPoly([1, 1], p))  # 1/(a+1)
        lhs = trunc_binomial(f, 1, p).derivative()
        rhs = trunc_binomial(f - 1, 1, p).scalar_mul(f) + XPoly.x_power(
            p, p - 1, scale=f.frobenius_p() - f
        )
        assert lhs == rhs

    def test_general_scale(self):
        # (1 + 2X)^3 over F_7
        got = trunc_binomial(3, 2, 7)
        want = XPoly([math.comb(3, k) * 2 ** k for k in range(4)], 7)
        assert got == want


class TestLaguerreConst:
    def test_p3_value(self):
        # (1+a)(1+2a)^2 expanded mod 3
        assert laguerre_const(3) == FpPoly([1, 2, 2, 1], 3)

    def test_value_at_zero_is_one(self):
        for p in (3, 5, 7, 11):
            assert laguerre_const(p).eval_int(0) == 1

    def test_degree(self):
        for p in (3, 5, 7, 11, 13):
            assert laguerre_const(p).degree == p * (p - 1) // 2

    def test_routes_agree_independently(self):
        for p in (3, 5, 7, 11, 13):
            sub_route, prod_route = laguerre_const_routes(p)
            assert sub_route == prod_route

    def test_alpha_p_minus_alpha(self):
        f = alpha_p_minus_alpha(5)
        assert f == FpPoly([0, -1, 0, 0, 0, 1], 5)
        for a in range(5):
            assert f.eval_int(a) == 0  # Fermat
