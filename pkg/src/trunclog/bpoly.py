"""The two-index family b[r,s](a) of polynomials over F_p.

Three independent construction routes are provided:

  * ``b_rs``       is the defining alternating sum over products of binomials
                     C(r*a - 1, p-1-k) * C(s*a - 1, k) weighted by (-r/s)^k;
  * ``b_rs_alt``   is the same sum with C(s*a, k) in place of C(s*a - 1, k),
                     valid whenever r + s != p;
  * ``b_rs_coeff`` is the coefficient of X^(p-1) in the product of the two
                     truncated binomials (1 + X/r)^(r*a-1) (1 - X/s)^(s*a-1).

For r + s = p the family degenerates to the zero polynomial; elsewhere the
constant term is 1 and the degree of b[1,s] is (p-1)/2 with all roots simple
and in F_p.  ``b_roots_predicted`` lists them directly: a is a root of b[1,s]
exactly when a + a' < p, where a' is the representative of s*a in (0, p).
``b_root_lucas`` decides the same membership from the single base-p binomial
coefficient C(a + s*a, a).

Indices r, s are read as elements of F_p*, so b[r,s] for r + s > p means the
reduction mod p throughout.  Results are memoized per (p, r, s): the family
is reused heavily by the truncated-logarithm coefficients and the verifier,
and entries are immutable, so concurrent duplicate inserts are harmless.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from .errors import TheoremViolationError
from .fields import binom_lucas, check_odd_prime, inv_mod
from .polys import FpPoly, roots_and_split
from .special import binomials_of, laguerre_const, trunc_binomial


@dataclass(frozen=True)
class BPolyKey:
    """Validated index triple for the family; 1 <= r, s <= p-1."""

    p: int
    r: int
    s: int

    def __post_init__(self):
        check_odd_prime(self.p)
        if not (1 <= self.r <= self.p - 1 and 1 <= self.s <= self.p - 1):
            raise ValueError(f"indices must lie in [1, p-1], got r={self.r}, s={self.s}")

    @property
    def is_degenerate(self) -> bool:
        """On the diagonal r + s = p the polynomial is identically zero."""
        return (self.r + self.s) % self.p == 0


def _key(key, r, s) -> BPolyKey:
    if isinstance(key, BPolyKey):
        return key
    return BPolyKey(key, r, s)


_B_CACHE: dict[tuple[int, int, int], FpPoly] = {}


def b_rs(key, r=None, s=None) -> FpPoly:
    """The defining sum; accepts b_rs(BPolyKey(p, r, s)) or b_rs(p, r, s)."""
    k = _key(key, r, s)
    cached = _B_CACHE.get((k.p, k.r, k.s))
    if cached is None:
        cached = _b_rs_build(k)
        _B_CACHE[(k.p, k.r, k.s)] = cached
    return cached


def _b_rs_build(k: BPolyKey) -> FpPoly:
    p = k.p
    binr = binomials_of(FpPoly([-1, k.r], p), p)
    bins = binomials_of(FpPoly([-1, k.s], p), p)
    t = (-k.r * inv_mod(k.s, p)) % p
    acc = FpPoly.zero(p)
    tk = 1
    for j in range(p):
        acc = acc + binr[p - 1 - j] * bins[j] * tk
        tk = tk * t % p
    return acc


def b_rs_alt(key, r=None, s=None) -> FpPoly:
    """Alternate sum with C(s*a, k); requires r + s != p."""
    k = _key(key, r, s)
    if k.is_degenerate:
        raise ValueError(f"alternate form requires r + s != p, got r={k.r}, s={k.s}")
    p = k.p
    binr = binomials_of(FpPoly([-1, k.r], p), p)
    bins = binomials_of(FpPoly([0, k.s], p), p)
    t = (-k.r * inv_mod(k.s, p)) % p
    acc = FpPoly.zero(p)
    tk = 1
    for j in range(p):
        acc = acc + binr[p - 1 - j] * bins[j] * tk
        tk = tk * t % p
    return acc


def b_rs_coeff(key, r=None, s=None) -> FpPoly:
    """X^(p-1) coefficient of (1 + X/r)^(r*a-1) * (1 - X/s)^(s*a-1)."""
    k = _key(key, r, s)
    p = k.p
    left = trunc_binomial(FpPoly([-1, k.r], p), inv_mod(k.r, p), p)
    right = trunc_binomial(FpPoly([-1, k.s], p), -inv_mod(k.s, p) % p, p)
    acc = FpPoly.zero(p)
    for j in range(p):
        term = left.coeffs[j] * right.coeffs[p - 1 - j]
        acc = acc + term.as_poly()
    return acc


def b_roots_predicted(p: int, s: int) -> frozenset:
    """Roots of b[1,s] in F_p*: the a with a + a' < p, a' = s*a mod p in (0, p).

    Exactly (p-1)/2 elements; requires 1 <= s <= p-2.
    """
    check_odd_prime(p)
    if not 1 <= s <= p - 2:
        raise ValueError(f"root prediction requires 1 <= s <= p-2, got s={s}")
    roots = frozenset(a for a in range(1, p) if a + (s * a % p) < p)
    assert len(roots) == (p - 1) // 2
    return roots


def b_root_lucas(p: int, s: int, a: int) -> bool:
    """Root test via base-p digits: a is a root of b[1,s] iff p does not
    divide the integer binomial C(a + s*a, a)."""
    check_odd_prime(p)
    if not 1 <= s <= p - 2:
        raise ValueError(f"Lucas criterion requires 1 <= s <= p-2, got s={s}")
    if not 1 <= a <= p - 1:
        raise ValueError(f"Lucas criterion requires 1 <= a <= p-1, got a={a}")
    return binom_lucas(a + s * a, a, p).value != 0


@functools.lru_cache(maxsize=None)
def b_prefix_products(p: int, negate: bool = False):
    """Prefix products (1, b[1,1], b[1,1]*b[1,2], ...) of length p-1.

    Entry j is the product over s <= j; with negate=True each factor is
    evaluated at -a instead.
    """
    check_odd_prime(p)
    out = [FpPoly.one(p)]
    for s in range(1, p - 1):
        f = b_rs(p, 1, s)
        if negate:
            f = f.subs_scale(p - 1)
        out.append(out[-1] * f)
    return tuple(out)


@functools.lru_cache(maxsize=None)
def product_all_b(p: int) -> FpPoly:
    """The full product prod_{s=1}^{p-2} b[1,s](a), computed three ways.

    Route 2 is prod_{k=2}^{p-1} (1 + a/k)^(k-1); route 3 divides the modulus
    constant by 1 - a^(p-1) exactly.  All three must agree.
    """
    check_odd_prime(p)
    r1 = b_prefix_products(p)[p - 2]
    r2 = FpPoly.one(p)
    for k in range(2, p):
        r2 = r2 * (FpPoly([1, inv_mod(k, p)], p) ** (k - 1))
    w = FpPoly.one(p) - FpPoly.monomial(1, p - 1, p)
    q, rem = divmod(laguerre_const(p), w)
    if not rem.is_zero or r1 != r2 or r1 != q:
        raise TheoremViolationError(f"product of the b-family disagrees at p={p}")
    return r1


CSV_HEADER = "p,s,roots,degree"


def b_roots_csv_rows(p: int):
    """Root-table rows 'p,s,roots,degree' with roots ascending, ;-separated."""
    rows = []
    for s in range(1, p - 1):
        f = b_rs(p, 1, s)
        _, roots = roots_and_split(f)
        listed = ";".join(str(a) for a in sorted(roots))
        rows.append(f"{p},{s},{listed},{f.degree}")
    return rows
