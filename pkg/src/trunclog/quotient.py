"""Arithmetic in F_p(a)[X] truncated below degree p, modulo a binomial X^p - c.

An ``XPoly`` holds exactly p rational-function coefficients (X^0 .. X^(p-1))
and an optional modulus constant c.  Operations between two XPoly values
require identical modulus tags; multiplication additionally requires a tag,
since the product must be reduced.  Only binomial moduli are supported; no
other shape is needed anywhere in this package.

``compose_mod`` clears denominators internally and works on plain polynomial
grids whenever the modulus constant is a polynomial, which keeps the heavy
compositions (inverse checks at p = 13) fast; the rational-coefficient Horner
fallback covers the general case.
"""

from __future__ import annotations

from functools import reduce

from .errors import PoleError
from .polys import FpPoly, RatFn


def _coerce_ratfn(v, p, var="a"):
    if isinstance(v, RatFn):
        if v.p != p:
            raise ValueError(f"mixed moduli: {p} and {v.p}")
        return v
    if isinstance(v, FpPoly):
        if v.p != p:
            raise ValueError(f"mixed moduli: {p} and {v.p}")
        return RatFn.from_poly(v)
    return RatFn.const(int(v), p, var)


class XPoly:
    """Polynomial of degree < p in X with RatFn coefficients in the parameter."""

    __slots__ = ("coeffs", "p", "modulus")

    def __init__(self, coeffs, p, modulus=None):
        coeffs = [_coerce_ratfn(c, p) for c in coeffs]
        if len(coeffs) > p:
            raise ValueError("degree in X must stay below p; use reduce_mod")
        coeffs += [RatFn.zero(p)] * (p - len(coeffs))
        if modulus is not None:
            modulus = _coerce_ratfn(modulus, p)
        object.__setattr__(self, "coeffs", tuple(coeffs))
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "modulus", modulus)

    def __setattr__(self, name, value):
        raise AttributeError("XPoly is immutable")

    # -- constructors ---------------------------------------------------------

    @classmethod
    def zero(cls, p, modulus=None):
        return cls((), p, modulus)

    @classmethod
    def constant(cls, c, p, modulus=None):
        return cls((c,), p, modulus)

    @classmethod
    def x_power(cls, p, e, modulus=None, scale=1):
        if not 0 <= e < p:
            raise ValueError("exponent out of range")
        coeffs = [0] * e + [scale]
        return cls(coeffs, p, modulus)

    def with_modulus(self, c):
        return XPoly(self.coeffs, self.p, c)

    # -- structure ------------------------------------------------------------

    @property
    def degree(self):
        for e in range(self.p - 1, -1, -1):
            if not self.coeffs[e].is_zero:
                return e
        return -1

    def coeff(self, e) -> RatFn:
        return self.coeffs[e]

    def _check_tags(self, other):
        if self.p != other.p:
            raise ValueError(f"mixed moduli: {self.p} and {other.p}")
        if self.modulus != other.modulus:
            raise ValueError(
                f"mismatched modulus tags: {self.modulus} and {other.modulus}"
            )

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (RatFn, FpPoly, int)):
            other = XPoly.constant(other, self.p, self.modulus)
        if not isinstance(other, XPoly):
            return NotImplemented
        self._check_tags(other)
        coeffs = [a + b for a, b in zip(self.coeffs, other.coeffs)]
        return XPoly(coeffs, self.p, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (RatFn, FpPoly, int)):
            other = XPoly.constant(other, self.p, self.modulus)
        if not isinstance(other, XPoly):
            return NotImplemented
        self._check_tags(other)
        coeffs = [a - b for a, b in zip(self.coeffs, other.coeffs)]
        return XPoly(coeffs, self.p, self.modulus)

    def __neg__(self):
        return XPoly([-c for c in self.coeffs], self.p, self.modulus)

    def scalar_mul(self, s):
        s = _coerce_ratfn(s, self.p)
        return XPoly([c * s for c in self.coeffs], self.p, self.modulus)

    def __mul__(self, other):
        if not isinstance(other, XPoly):
            return NotImplemented
        self._check_tags(other)
        if self.modulus is None:
            raise ValueError("multiplication requires a modulus tag for reduction")
        p = self.p
        full = [RatFn.zero(p) for _ in range(2 * p - 1)]
        for i, a in enumerate(self.coeffs):
            if a.is_zero:
                continue
            for j, b in enumerate(other.coeffs):
                if not b.is_zero:
                    full[i + j] = full[i + j] + a * b
        c = self.modulus
        for e in range(2 * p - 2, p - 1, -1):
            if not full[e].is_zero:
                full[e - p] = full[e - p] + c * full[e]
        return XPoly(full[:p], p, c)

    def powmod(self, j: int):
        """Repeated-multiplication power; j >= 0 (j stays below p here)."""
        if j < 0:
            raise ValueError("powmod requires j >= 0")
        out = XPoly.constant(1, self.p, self.modulus)
        for _ in range(j):
            out = out * self
        return out

    def derivative(self):
        """Formal d/dX; only meaningful for untagged values."""
        if self.modulus is not None:
            raise ValueError("derivative is defined for untagged XPoly values")
        coeffs = [self.coeffs[e] * e for e in range(1, self.p)]
        return XPoly(coeffs, self.p)

    # -- evaluation -----------------------------------------------------------

    def specialize(self, a) -> FpPoly:
        """Substitute the parameter value a into every coefficient.

        Raises PoleError naming the offending X-power when a reduced
        denominator vanishes at a.
        """
        vals = []
        for e, c in enumerate(self.coeffs):
            try:
                vals.append(c.eval(a).value)
            except PoleError as exc:
                raise PoleError(exc.point, index=e) from None
        return FpPoly(vals, self.p, var="X")

    # -- comparison and rendering ----------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, XPoly):
            return NotImplemented
        return (
            self.p == other.p
            and self.modulus == other.modulus
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.coeffs, self.p, self.modulus))

    def __str__(self):
        terms = []
        for e, c in enumerate(self.coeffs):
            if c.is_zero:
                continue
            cs = str(c)
            xs = "" if e == 0 else ("X" if e == 1 else f"X^{e}")
            if not xs:
                terms.append(cs if _is_plain(cs) else f"({cs})")
            elif cs == "1":
                terms.append(xs)
            else:
                head = cs if _is_plain(cs) else f"({cs})"
                terms.append(f"{head}*{xs}")
        return " + ".join(terms) if terms else "0"

    def __repr__(self):
        tag = f", mod X^{self.p} - ({self.modulus})" if self.modulus is not None else ""
        return f"XPoly({self}{tag}, p={self.p})"


def _is_plain(s: str) -> bool:
    return " " not in s and "/" not in s


def reduce_mod(coeffs, c, p) -> XPoly:
    """Reduce a polynomial in X of any degree to its representative below p.

    Rewrites X^(p+t) -> c * X^t repeatedly; idempotent on already-reduced
    input.
    """
    c = _coerce_ratfn(c, p)
    work = [_coerce_ratfn(v, p) for v in coeffs]
    for e in range(len(work) - 1, p - 1, -1):
        if not work[e].is_zero:
            work[e - p] = work[e - p] + c * work[e]
            work[e] = RatFn.zero(p)
    return XPoly(work[:p], p, c)


def mulmod(a: XPoly, b: XPoly) -> XPoly:
    return a * b


def powmod(a: XPoly, j: int) -> XPoly:
    return a.powmod(j)


# -- polynomial-grid helpers --------------------------------------------------
# Lists of FpPoly indexed by the X-power, used wherever every coefficient in
# sight is a polynomial: the verification battery and the cleared composition.


def grid_mulmod(a, b, cpoly: FpPoly, p: int):
    """Product of two length-p FpPoly grids, reduced by X^p -> cpoly."""
    zero = FpPoly.zero(p)
    full = [zero] * (2 * p - 1)
    for i, ai in enumerate(a):
        if ai.is_zero:
            continue
        for j, bj in enumerate(b):
            if not bj.is_zero:
                full[i + j] = full[i + j] + ai * bj
    for e in range(2 * p - 2, p - 1, -1):
        if not full[e].is_zero:
            full[e - p] = full[e - p] + cpoly * full[e]
    return full[:p]


def xpoly_to_grid(x: XPoly):
    """The coefficient grid of an XPoly whose coefficients are polynomials,
    or None if any coefficient has a nontrivial denominator."""
    out = []
    for c in x.coeffs:
        if not c.den.is_one:
            return None
        out.append(c.num)
    return out


def grid_to_xpoly(grid, p, modulus=None) -> XPoly:
    return XPoly([RatFn.from_poly(g) for g in grid], p, modulus)


def _lcm(a: FpPoly, b: FpPoly) -> FpPoly:
    g = a.gcd(b)
    return (a * (b // g)).monic()


def compose_mod(outer: XPoly, inner: XPoly, c) -> XPoly:
    """Horner evaluation of outer at inner, reduced modulo X^p - c.

    When c is a polynomial the computation runs on cleared-denominator
    grids: outer = P/D and inner = H/Din coefficient-wise, and

        outer(inner) = (sum_k P_k H^k Din^(p-1-k)) / (D * Din^(p-1)),

    with the single division performed at the end.  Otherwise a plain
    rational Horner loop is used.
    """
    p = outer.p
    c = _coerce_ratfn(c, p)
    if not c.den.is_one:
        return _compose_horner(outer, inner, c)

    cpoly = c.num
    var = cpoly.var if not cpoly.is_zero else "a"
    one = FpPoly.one(p, var)

    d_out = reduce(_lcm, (g.den for g in outer.coeffs), one)
    pnum = [g.num * (d_out // g.den) for g in outer.coeffs]
    d_in = reduce(_lcm, (h.den for h in inner.coeffs), one)
    hgrid = [h.num * (d_in // h.den) for h in inner.coeffs]

    din_pows = [one]
    for _ in range(p - 1):
        din_pows.append(din_pows[-1] * d_in)

    zero = FpPoly.zero(p)
    acc = [zero] * p
    acc[0] = pnum[p - 1]
    for k in range(p - 2, -1, -1):
        acc = grid_mulmod(acc, hgrid, cpoly, p)
        acc[0] = acc[0] + pnum[k] * din_pows[p - 1 - k]

    denom = d_out * din_pows[p - 1]
    return XPoly([RatFn(n, denom) for n in acc], p, c)


def _compose_horner(outer: XPoly, inner: XPoly, c: RatFn) -> XPoly:
    p = outer.p
    inner = inner.with_modulus(c)
    acc = XPoly.constant(outer.coeffs[p - 1], p, c)
    for k in range(p - 2, -1, -1):
        acc = acc * inner + outer.coeffs[k]
    return acc
