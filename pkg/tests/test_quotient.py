"""Quotient arena: reduction by X^p - c, modular products, composition."""

import random

import pytest

from trunclog.polys import FpPoly, RatFn
from trunclog.quotient import XPoly, compose_mod, mulmod, powmod, reduce_mod
from trunclog.quotient import _compose_horner
from trunclog.special import alpha_p_minus_alpha, laguerre_pm1, laguerre_scaled
from trunclog.bpoly import b_rs


def modulus(p):
    return RatFn.from_poly(alpha_p_minus_alpha(p))


class TestReduceMod:
    def test_x_to_p_becomes_constant(self):
        p = 5
        c = modulus(p)
        got = reduce_mod([0] * p + [1], c, p)
        assert got == XPoly.constant(c, p, modulus=c)

    def test_x_to_p_plus_one(self):
        p = 5
        c = modulus(p)
        got = reduce_mod([0] * (p + 1) + [1], c, p)
        assert got == XPoly.x_power(p, 1, modulus=c, scale=c)

    def test_the_modulus_reduces_to_zero(self):
        p = 5
        c = modulus(p)
        coeffs = [-c] + [0] * (p - 1) + [1]  # X^p - c
        assert reduce_mod(coeffs, c, p) == XPoly.zero(p, modulus=c)

    def test_idempotent(self):
        rng = random.Random(0)
        p = 5
        c = modulus(p)
        for _ in range(10):
            coeffs = [rng.randrange(p) for _ in range(2 * p)]
            once = reduce_mod(coeffs, c, p)
            again = reduce_mod(once.coeffs, c, p)
            assert once == again

    def test_cascading_reduction(self):
        # X^(2p) -> c * X^p -> c^2
        p = 3
        c = modulus(p)
        got = reduce_mod([0] * (2 * p) + [1], c, p)
        assert got.coeffs[0] == c * c


class TestMulmodPowmod:
    def test_x_pm1_times_x(self):
        p = 5
        c = modulus(p)
        a = XPoly.x_power(p, p - 1, modulus=c)
        b = XPoly.x_power(p, 1, modulus=c)
        assert mulmod(a, b) == XPoly.constant(c, p, modulus=c)

    def test_mismatched_tags_rejected(self):
        p = 5
        a = XPoly.x_power(p, 1, modulus=modulus(p))
        b = XPoly.x_power(p, 1, modulus=RatFn.one(p))
        with pytest.raises(ValueError):
            mulmod(a, b)

    def test_mul_requires_tag(self):
        p = 5
        a = XPoly.x_power(p, 1)
        with pytest.raises(ValueError):
            a * a

    def test_powmod_zero_is_one(self):
        p = 5
        a = XPoly.x_power(p, 2, modulus=modulus(p))
        assert powmod(a, 0) == XPoly.constant(1, p, modulus=modulus(p))

    def test_square_of_exponential_analogue(self):
        # L^2 = b[1,1] * L_scaled(2) in the quotient ring
        for p in (5, 7):
            c = modulus(p)
            lag = laguerre_pm1(p).with_modulus(c)
            want = laguerre_scaled(p, 2).with_modulus(c).scalar_mul(b_rs(p, 1, 1))
            assert powmod(lag, 2) == want

    def test_reduction_is_ring_homomorphism(self):
        rng = random.Random(1)
        p = 5
        c = modulus(p)
        for _ in range(15):
            fc = [rng.randrange(p) for _ in range(2 * p - 1)]
            gc = [rng.randrange(p) for _ in range(2 * p - 1)]
            full = [0] * (len(fc) + len(gc) - 1)
            for i, a in enumerate(fc):
                for j, b in enumerate(gc):
                    full[i + j] = (full[i + j] + a * b) % p
            lhs = reduce_mod(full, c, p)
            rhs = mulmod(reduce_mod(fc, c, p), reduce_mod(gc, c, p))
            assert lhs == rhs

    def test_specialization_commutes_with_reduction(self):
        # with c = a^p - a every specialization of the modulus is X^p
        rng = random.Random(2)
        p = 5
        c = modulus(p)
        zero_c = RatFn.zero(p)
        for _ in range(10):
            coeffs = [
                RatFn(FpPoly([rng.randrange(p) for _ in range(3)], p))
                for _ in range(2 * p)
            ]
            a = rng.randrange(p)
            reduced_then_special = reduce_mod(coeffs, c, p).specialize(a)
            specialized = [f.eval(a).value for f in coeffs]
            special_then_reduced = reduce_mod(specialized, zero_c, p).specialize(a)
            assert reduced_then_special == special_then_reduced


class TestComposeMod:
    def test_identity_outer(self):
        p = 5
        c = modulus(p)
        inner = laguerre_pm1(p)
        assert compose_mod(XPoly.x_power(p, 1), inner, c) == inner.with_modulus(c)

    def test_constant_outer(self):
        p = 5
        c = modulus(p)
        k = XPoly.constant(7, p)
        got = compose_mod(k, laguerre_pm1(p), c)
        assert got == XPoly.constant(7, p, modulus=c)

    def test_cleared_path_matches_generic_horner(self):
        rng = random.Random(3)
        p = 5
        c = modulus(p)
        for _ in range(6):
            outer = XPoly(
                [
                    RatFn(
                        FpPoly([rng.randrange(p) for _ in range(2)], p),
                        FpPoly([rng.randrange(1, p), 1], p),
                    )
                    for _ in range(p)
                ],
                p,
            )
            inner = XPoly(
                [FpPoly([rng.randrange(p) for _ in range(2)], p) for _ in range(p)],
                p,
            )
            assert compose_mod(outer, inner, c) == _compose_horner(outer, inner, c)

    def test_fraction_inner_supported(self):
        rng = random.Random(4)
        p = 5
        c = modulus(p)
        outer = XPoly([rng.randrange(p) for _ in range(p)], p)
        inner = XPoly(
            [
                RatFn(
                    FpPoly([rng.randrange(p) for _ in range(2)], p),
                    FpPoly([1, 1], p),
                )
                for _ in range(p)
            ],
            p,
        )
        assert compose_mod(outer, inner, c) == _compose_horner(outer, inner, c)

    def test_fractions_on_both_sides(self):
        rng = random.Random(5)
        p = 5
        c = modulus(p)
        outer = XPoly(
            [
                RatFn(
                    FpPoly([rng.randrange(p), 1], p),
                    FpPoly([rng.randrange(1, p), 1], p),
                )
                for _ in range(p)
            ],
            p,
        )
        inner = XPoly(
            [
                RatFn(
                    FpPoly([rng.randrange(p)], p),
                    FpPoly([2, 1], p),
                )
                for _ in range(p)
            ],
            p,
        )
        assert compose_mod(outer, inner, c) == _compose_horner(outer, inner, c)

    def test_fractional_modulus_constant_falls_back(self):
        p = 5
        c = RatFn(FpPoly([1], p), FpPoly([1, 1], p))  # 1/(a+1)
        outer = XPoly([0, 1, 1], p)
        inner = XPoly([0, 2], p)
        assert compose_mod(outer, inner, c) == _compose_horner(outer, inner, c)


class TestXPolyMisc:
    def test_specialize_names_offending_power(self):
        p = 3
        x = XPoly([RatFn.one(p), RatFn(FpPoly([1], p), FpPoly([2, 1], p))], p)
        from trunclog.errors import PoleError

        with pytest.raises(PoleError) as exc:
            x.specialize(1)
        assert exc.value.index == 1
        f = x.specialize(0)
        assert f == FpPoly([1, 2], p, "X")

    def test_degree_and_coeff_access(self):
        p = 5
        x = XPoly([1, 0, 3], p)
        assert x.degree == 2
        assert x.coeff(2) == RatFn.const(3, p)

    def test_equality_includes_modulus_tag(self):
        p = 5
        a = XPoly([1, 2], p)
        assert a != a.with_modulus(modulus(p))

    def test_derivative_only_untagged(self):
        p = 5
        x = XPoly([0, 1, 1], p)
        assert x.derivative() == XPoly([1, 2], p)
        with pytest.raises(ValueError):
            x.with_modulus(modulus(p)).derivative()

    def test_mixed_moduli_in_coefficients_rejected(self):
        with pytest.raises(ValueError):
            XPoly([RatFn.one(3)], 5)
        with pytest.raises(ValueError):
            XPoly([FpPoly([1], 7)], 5)
