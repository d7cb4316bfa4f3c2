"""The generalized truncated logarithm G(X) and its companions.

G(X) is the unique polynomial of degree < p over F_p(a) with

    G(L(X)) = X   modulo X^p - (a^p - a),

where L is the parametric exponential analogue from ``special``.  Its
coefficient of X^k is -(1/k) / prod_{s<k} b[1,s](a); there is no constant
term, the coefficient of X is -1, and at a = 0 the whole thing collapses to
minus the truncated logarithm.

``glog`` verifies the defining inverse identity at construction and caches
the result per prime.  The raw ``GLog`` constructor performs no check, which
is what the mutation tests use to build deliberately broken twins.

In normal form the k-th coefficient is N_k(a) / (1 - a^(p-1))^(k-1) with
N_k = -(1/k) * prod_{s<k} b[1,s](-a); ``glog_coeff_normal`` returns that pair
and asserts it against the reduced coefficient.

Whether a nonzero specialization point a is a pole of some coefficient is a
question this module measures rather than decides: ``glog_pole_table``
reports the offending (k, a) pairs and asserts nothing.
"""

from __future__ import annotations

import functools
import json

from .errors import PoleError, TheoremViolationError
from .bpoly import b_prefix_products
from .fields import check_odd_prime, inv_mod
from .polys import FpPoly, RatFn
from .quotient import XPoly, compose_mod
from .special import alpha_p_minus_alpha, laguerre_pm1


class GLog:
    """Coefficients of X^1 .. X^(p-1) of the generalized truncated logarithm."""

    __slots__ = ("p", "coeffs")

    def __init__(self, p: int, coeffs):
        check_odd_prime(p)
        coeffs = tuple(coeffs)
        if len(coeffs) != p - 1:
            raise ValueError(f"expected {p - 1} coefficients, got {len(coeffs)}")
        if any(c.p != p for c in coeffs):
            raise ValueError("coefficient modulus disagrees with p")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("GLog is immutable")

    def coeff(self, k: int) -> RatFn:
        """Coefficient of X^k, 1 <= k <= p-1."""
        if not 1 <= k <= self.p - 1:
            raise ValueError(f"coefficient index out of range: {k}")
        return self.coeffs[k - 1]

    def as_xpoly(self, modulus=None) -> XPoly:
        return XPoly((RatFn.zero(self.p),) + self.coeffs, self.p, modulus)

    def with_coeff(self, k: int, value: RatFn) -> "GLog":
        """A copy with coefficient k replaced; used to build broken twins."""
        new = list(self.coeffs)
        new[k - 1] = value
        return GLog(self.p, new)

    def subs_scale(self, h: int) -> "GLog":
        """Parameter substitution a -> h*a in every coefficient."""
        return GLog(self.p, [c.subs_scale(h) for c in self.coeffs])

    def __eq__(self, other):
        if not isinstance(other, GLog):
            return NotImplemented
        return self.p == other.p and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.p, self.coeffs))

    def render_text(self) -> str:
        """Signed rendering such as '-X - X^2/(a + 2)' (every term is negative)."""
        terms = []
        for k in range(1, self.p):
            c = -self.coeff(k)
            xs = "X" if k == 1 else f"X^{k}"
            num = str(c.num)
            body = xs if num == "1" else f"{num}*{xs}"
            if not c.den.is_one:
                body += f"/({c.den})"
            terms.append(body)
        return "-" + " - ".join(terms)

    def to_json(self) -> dict:
        return {
            "prime": self.p,
            "variable": "a",
            "coefficients": [
                {"power": k, "num": str(self.coeff(k).num), "den": str(self.coeff(k).den)}
                for k in range(1, self.p)
            ],
        }

    def __str__(self):
        return self.render_text()

    def __repr__(self):
        return f"GLog(p={self.p}, {self.render_text()})"


@functools.lru_cache(maxsize=None)
def glog(p: int) -> GLog:
    """Build G(X) and assert the left-inverse identity before returning."""
    check_odd_prime(p)
    pre = b_prefix_products(p)
    coeffs = [
        RatFn(FpPoly.const(-inv_mod(k, p), p), pre[k - 1]) for k in range(1, p)
    ]
    g = GLog(p, coeffs)
    c = _x_power_modulus(p)
    got = compose_mod(g.as_xpoly(), laguerre_pm1(p), c)
    if got != XPoly.x_power(p, 1, modulus=c):
        raise TheoremViolationError(f"left-inverse construction fails at p={p}")
    return g


def _x_power_modulus(p: int) -> RatFn:
    """The modulus constant a^p - a."""
    return RatFn.from_poly(alpha_p_minus_alpha(p))


def glog_coeff_normal(p: int, k: int):
    """Normal form (N_k, k-1) with coefficient_k = N_k / (1 - a^(p-1))^(k-1).

    N_k = -(1/k) * prod_{s<k} b[1,s](-a); the pair is asserted equal to the
    reduced coefficient before returning.
    """
    check_odd_prime(p)
    if not 1 <= k <= p - 1:
        raise ValueError(f"coefficient index out of range: {k}")
    pre_neg = b_prefix_products(p, negate=True)
    num = pre_neg[k - 1] * (-inv_mod(k, p))
    w = FpPoly.one(p) - FpPoly.monomial(1, p - 1, p)
    coeff = glog(p).coeff(k)
    # cross-multiplied comparison: num / w^(k-1) == coeff.num / coeff.den
    if num * coeff.den != coeff.num * w ** (k - 1):
        raise TheoremViolationError(
            f"normal form of coefficient {k} disagrees at p={p}"
        )
    return num, k - 1


def glog_specialize(g: GLog, a) -> FpPoly:
    """Substitute the parameter value a; PoleError names the offending k."""
    vals = [0]
    for k in range(1, g.p):
        try:
            vals.append(g.coeff(k).eval(a).value)
        except PoleError as exc:
            raise PoleError(exc.point, index=k) from None
    return FpPoly(vals, g.p, var="X")


def glog_pole_table(p: int):
    """Measured pole locations: {k: sorted tuple of a in F_p* with a pole}.

    Reported, never asserted; whether poles survive reduction at a given
    point is read off the reduced denominators.
    """
    g = glog(p)
    out = {}
    for k in range(1, p):
        den = g.coeff(k).den
        poles = tuple(a for a in range(1, p) if den.eval_int(a) == 0)
        if poles:
            out[k] = poles
    return out


def reciprocal_rhs(p: int) -> XPoly:
    """The reflected side -X^p * G_(-a)((1 - a^(p-1)) / X) of the reciprocal
    equation, expanded by formal substitution.

    Term k of G contributes (1/k) * (1 - a^(p-1))^k * X^(p-k) divided by
    prod_{s<k} b[1,s](-a); no constant term of G means no X^p survives, so
    the result is a genuine polynomial of degree <= p-1 in X.  It equals
    laguerre_const(p) * G(X) identically; the verifier checks that.
    """
    check_odd_prime(p)
    pre_neg = b_prefix_products(p, negate=True)
    w = FpPoly.one(p) - FpPoly.monomial(1, p - 1, p)
    coeffs = [RatFn.zero(p) for _ in range(p)]
    wk = FpPoly.one(p)
    for k in range(1, p):
        wk = wk * w
        coeffs[p - k] = RatFn(wk * inv_mod(k, p), pre_neg[k - 1])
    return XPoly(coeffs, p)


def glog_json_text(p: int) -> str:
    return json.dumps(glog(p).to_json(), sort_keys=True)
