"""Constructors for the characteristic-p special functions.

The central object is the degree-(p-1) parametric exponential analogue

    L(X) = -sum_{k<p} (a - 1)_(p-1-k) * X^k,

whose coefficient of X^k is minus the falling factorial of a - 1 of length
p-1-k.  At a = 0 it collapses to the truncated exponential
E(X) = sum_{k<p} X^k / k!.  Its scaled companions substitute a -> r*a and
X -> r*X.  The truncated logarithm and its higher relatives are the finite
polylogarithms sum_{k=1}^{p-1} X^k / k^d.

``laguerre_const`` builds the constant obtained by substituting a -> a^p in
the coefficients and X -> a^p - a.  It is computed both by that substitution
and by the product formula prod_{k=1}^{p-1} (1 + a/k)^k, and equality of the
two routes is asserted on every construction, turning the factorization
identity into a permanent self-check.
"""

from __future__ import annotations

import functools

from .errors import TheoremViolationError
from .fields import FpElem, check_odd_prime, inv_mod
from .polys import FpPoly, RatFn
from .quotient import XPoly


def _falling_factorials(f: FpPoly, upto: int):
    """[ (f)_0, (f)_1, ..., (f)_upto ] computed incrementally."""
    out = [FpPoly.one(f.p, f.var)]
    for m in range(upto):
        out.append(out[-1] * (f - m))
    return out


def binomials_of(f, p: int):
    """[C(f, 0), ..., C(f, p-1)] computed incrementally in f's domain.

    Works for FpPoly, RatFn and FpElem alike; only divisions by k < p occur.
    """
    out = [f ** 0]
    for k in range(1, p):
        out.append(out[-1] * (f - (k - 1)) * inv_mod(k, p))
    return out


@functools.lru_cache(maxsize=None)
def laguerre_pm1(p: int) -> XPoly:
    """The degree-(p-1) exponential analogue with parameter a.

    Coefficient of X^k is -(a - 1)_(p-1-k); the constant term is 1 - a^(p-1)
    and the top coefficient is -1.
    """
    check_odd_prime(p)
    a_minus_1 = FpPoly([-1, 1], p, "a")
    ff = _falling_factorials(a_minus_1, p - 1)
    coeffs = [RatFn.from_poly(-ff[p - 1 - k]) for k in range(p)]
    return XPoly(coeffs, p)


@functools.lru_cache(maxsize=None)
def laguerre_scaled(p: int, r: int) -> XPoly:
    """Substitution a -> r*a, X -> r*X: coefficient of X^k is -(ra-1)_(p-1-k) * r^k."""
    check_odd_prime(p)
    if r % p == 0:
        raise ValueError("scale r must be nonzero mod p")
    r %= p
    ra_minus_1 = FpPoly([-1, r], p, "a")
    ff = _falling_factorials(ra_minus_1, p - 1)
    coeffs = []
    rk = 1
    for k in range(p):
        coeffs.append(RatFn.from_poly(-ff[p - 1 - k] * rk))
        rk = rk * r % p
    return XPoly(coeffs, p)


def finite_polylog(p: int, d: int) -> FpPoly:
    """The finite polylogarithm sum_{k=1}^{p-1} X^k / k^d over F_p."""
    check_odd_prime(p)
    if d < 0:
        raise ValueError("polylog order must be >= 0")
    coeffs = [0] + [inv_mod(pow(k, d, p), p) if d else 1 for k in range(1, p)]
    return FpPoly(coeffs, p, var="X")


def trunc_binomial(f, b=1, p=None) -> XPoly:
    """The binomial series for (1 + b*X)^f cut before degree p.

    f may be an FpPoly or RatFn in the parameter, or an FpElem/int constant;
    b is a scalar or rational expression.  For an integer constant 0 <= f < p
    and b = 1 this is exactly (1 + X)^f.
    """
    if p is None:
        p = f.p
    check_odd_prime(p)
    if isinstance(f, int):
        f = FpPoly.const(f, p)
    bins = binomials_of(f, p)
    bk = _as_ratfn(b, p) ** 0
    br = _as_ratfn(b, p)
    out = []
    for k in range(p):
        out.append(_as_ratfn(bins[k], p) * bk)
        bk = bk * br
    return XPoly(out, p)


def _as_ratfn(v, p) -> RatFn:
    if isinstance(v, RatFn):
        return v
    if isinstance(v, FpPoly):
        return RatFn.from_poly(v)
    if isinstance(v, FpElem):
        return RatFn.const(v.value, p)
    return RatFn.const(int(v), p)


def alpha_p_minus_alpha(p: int) -> FpPoly:
    """The quotient constant a^p - a."""
    check_odd_prime(p)
    return FpPoly.monomial(1, p, p) - FpPoly.x(p)


def laguerre_const_routes(p: int):
    """Both routes to the modulus constant: (substitution, product formula)."""
    check_odd_prime(p)
    ap_minus_1 = FpPoly.monomial(1, p, p) - 1
    ff = _falling_factorials(ap_minus_1, p - 1)
    arg = alpha_p_minus_alpha(p)
    total = FpPoly.zero(p)
    arg_pow = FpPoly.one(p)
    for k in range(p):
        total = total - ff[p - 1 - k] * arg_pow
        if k < p - 1:
            arg_pow = arg_pow * arg
    prod = FpPoly.one(p)
    for k in range(1, p):
        prod = prod * (FpPoly([1, inv_mod(k, p)], p) ** k)
    return total, prod


@functools.lru_cache(maxsize=None)
def laguerre_const(p: int) -> FpPoly:
    """The modulus constant: the exponential analogue at (a^p; a^p - a).

    Computed two ways, coefficient substitution a -> a^p with argument
    a^p - a versus the product prod_{k=1}^{p-1} (1 + a/k)^k, and asserted
    equal before returning.  Degree p(p-1)/2; value 1 at a = 0.
    """
    total, prod = laguerre_const_routes(p)
    if total != prod:
        raise TheoremViolationError(
            f"factorization of the modulus constant fails at p={p}"
        )
    return total
