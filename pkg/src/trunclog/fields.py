"""Prime-field scalars, a quadratic extension field, and binomial combinatorics.

``FpElem`` is the runtime-modulus scalar everything else is built from: one
build serves every odd prime, with primality checked once per modulus by
trial division (desk-scale p).  ``ext_quadratic(p)`` constructs F_{p^2} as
F_p[t]/(t^2 - n) with n the smallest quadratic non-residue mod p; any
irreducible quadratic would do, this choice makes outputs reproducible.

All values are immutable and all operations are pure functions, so everything
here is safe to share between threads without synchronization.
"""

from __future__ import annotations

import functools


@functools.lru_cache(maxsize=None)
def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


def check_odd_prime(p) -> int:
    """Return p if it is an odd prime, raise ValueError otherwise."""
    if not isinstance(p, int) or isinstance(p, bool) or p < 3 or not _is_prime(p):
        raise ValueError(f"modulus must be an odd prime, got {p!r}")
    return p


def inv_mod(a: int, p: int) -> int:
    """Inverse of a modulo p via extended Euclid (deterministic)."""
    a %= p
    if a == 0:
        raise ZeroDivisionError(f"0 is not invertible modulo {p}")
    r0, r1, s0, s1 = p, a, 0, 1
    while r1:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    return s0 % p


@functools.lru_cache(maxsize=None)
def _factorials(p: int):
    """(k!, (k!)^-1) tables for 0 <= k < p."""
    fact = [1] * p
    for k in range(1, p):
        fact[k] = fact[k - 1] * k % p
    inv_fact = [inv_mod(f, p) for f in fact]
    return tuple(fact), tuple(inv_fact)


class FpElem:
    """An element of F_p; the residue and the modulus travel together.

    Arithmetic between elements with different moduli is rejected.  Plain
    ints mix freely (they are reduced mod p first).
    """

    __slots__ = ("value", "p")

    def __init__(self, value, p):
        check_odd_prime(p)
        object.__setattr__(self, "value", int(value) % p)
        object.__setattr__(self, "p", p)

    def __setattr__(self, name, value):
        raise AttributeError("FpElem is immutable")

    def _other_value(self, other):
        if isinstance(other, FpElem):
            if other.p != self.p:
                raise ValueError(f"mixed moduli: {self.p} and {other.p}")
            return other.value
        if isinstance(other, int):
            return other % self.p
        return None

    def __add__(self, other):
        v = self._other_value(other)
        if v is None:
            return NotImplemented
        return FpElem(self.value + v, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._other_value(other)
        if v is None:
            return NotImplemented
        return FpElem(self.value - v, self.p)

    def __rsub__(self, other):
        v = self._other_value(other)
        if v is None:
            return NotImplemented
        return FpElem(v - self.value, self.p)

    def __mul__(self, other):
        v = self._other_value(other)
        if v is None:
            return NotImplemented
        return FpElem(self.value * v, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._other_value(other)
        if v is None:
            return NotImplemented
        return FpElem(self.value * inv_mod(v, self.p), self.p)

    def __rtruediv__(self, other):
        v = self._other_value(other)
        if v is None:
            return NotImplemented
        return FpElem(v * inv_mod(self.value, self.p), self.p)

    def __neg__(self):
        return FpElem(-self.value, self.p)

    def __pow__(self, e):
        if e < 0:
            return FpElem(pow(inv_mod(self.value, self.p), -e, self.p), self.p)
        return FpElem(pow(self.value, e, self.p), self.p)

    def inv(self):
        return FpElem(inv_mod(self.value, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, FpElem):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __str__(self):
        return str(self.value)

    def __repr__(self):
        return f"FpElem({self.value}, p={self.p})"


def binom_lucas(n: int, k: int, p: int) -> FpElem:
    """C(n, k) mod p computed digit-wise in base p.

    Equals the factorial formula for n < p; for larger n each base-p digit
    pair contributes an ordinary small binomial.
    """
    check_odd_prime(p)
    if n < 0 or k < 0:
        raise ValueError("binom_lucas requires n, k >= 0")
    fact, inv_fact = _factorials(p)
    out = 1
    while n or k:
        nd, kd = n % p, k % p
        if kd > nd:
            return FpElem(0, p)
        out = out * fact[nd] * inv_fact[kd] * inv_fact[nd - kd] % p
        n //= p
        k //= p
    return FpElem(out, p)


def pochhammer(f, m: int):
    """Falling product f(f-1)...(f-m+1); the empty product (m = 0) is 1.

    Works uniformly for FpElem, FpPoly and RatFn operands, which all support
    subtraction of an int and multiplication.
    """
    if m < 0:
        raise ValueError("pochhammer requires m >= 0")
    out = f ** 0
    for j in range(m):
        out = out * (f - j)
    return out


def binom_of_poly(f, k: int):
    """Binomial C(f, k) = (f)_k / k! with f an FpElem, FpPoly or RatFn.

    Requires 0 <= k < p so that k! is invertible mod p.
    """
    p = f.p
    if not 0 <= k < p:
        raise ValueError(f"binomial lower index must satisfy 0 <= k < p, got {k}")
    _, inv_fact = _factorials(p)
    return pochhammer(f, k) * inv_fact[k]


class Ext2Elem:
    """An element c0 + c1*t of F_{p^2} = F_p[t]/(t^2 - n)."""

    __slots__ = ("field", "c0", "c1")

    def __init__(self, field, c0, c1=0):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "c0", int(c0) % field.p)
        object.__setattr__(self, "c1", int(c1) % field.p)

    def __setattr__(self, name, value):
        raise AttributeError("Ext2Elem is immutable")

    def _pair(self, other):
        if isinstance(other, Ext2Elem):
            if other.field is not self.field and other.field != self.field:
                raise ValueError("mixed extension fields")
            return (other.c0, other.c1)
        if isinstance(other, int):
            return (other % self.field.p, 0)
        return None

    def __add__(self, other):
        v = self._pair(other)
        if v is None:
            return NotImplemented
        return self.field.elem(*self.field.add_raw((self.c0, self.c1), v))

    __radd__ = __add__

    def __sub__(self, other):
        v = self._pair(other)
        if v is None:
            return NotImplemented
        return self.field.elem(*self.field.sub_raw((self.c0, self.c1), v))

    def __rsub__(self, other):
        v = self._pair(other)
        if v is None:
            return NotImplemented
        return self.field.elem(*self.field.sub_raw(v, (self.c0, self.c1)))

    def __mul__(self, other):
        v = self._pair(other)
        if v is None:
            return NotImplemented
        return self.field.elem(*self.field.mul_raw((self.c0, self.c1), v))

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._pair(other)
        if v is None:
            return NotImplemented
        return self.field.elem(
            *self.field.mul_raw((self.c0, self.c1), self.field.inv_raw(v))
        )

    def __neg__(self):
        p = self.field.p
        return self.field.elem(-self.c0 % p, -self.c1 % p)

    def __pow__(self, e: int):
        return self.field.elem(*self.field.pow_raw((self.c0, self.c1), e))

    def inv(self):
        return self.field.elem(*self.field.inv_raw((self.c0, self.c1)))

    def frobenius(self):
        """x -> x^p, the order-2 automorphism fixing exactly F_p."""
        return self.field.elem(*self.field.frobenius_raw((self.c0, self.c1)))

    def in_prime_field(self) -> bool:
        return self.c1 == 0

    def __eq__(self, other):
        if isinstance(other, Ext2Elem):
            return self.field == other.field and (self.c0, self.c1) == (
                other.c0,
                other.c1,
            )
        if isinstance(other, int):
            return (self.c0, self.c1) == (other % self.field.p, 0)
        return NotImplemented

    def __hash__(self):
        return hash((self.c0, self.c1, self.field.p))

    def __bool__(self):
        return self.c0 != 0 or self.c1 != 0

    def __repr__(self):
        return f"Ext2Elem({self.c0} + {self.c1}*t, p={self.field.p})"


class Ext2Field:
    """Descriptor for F_{p^2} with arithmetic on raw (c0, c1) int pairs.

    The raw tuple methods are the hot path used by bulk computations; the
    Ext2Elem wrapper delegates to them.
    """

    __slots__ = ("p", "nonres")

    def __init__(self, p: int, nonres: int):
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "nonres", nonres)

    def __setattr__(self, name, value):
        raise AttributeError("Ext2Field is immutable")

    def elem(self, c0, c1=0) -> Ext2Elem:
        return Ext2Elem(self, c0, c1)

    @property
    def zero(self):
        return self.elem(0)

    @property
    def one(self):
        return self.elem(1)

    @property
    def gen(self):
        """The class of t."""
        return self.elem(0, 1)

    def minpoly(self):
        """The monic irreducible quadratic t^2 - n as an FpPoly."""
        from .polys import FpPoly

        return FpPoly([-self.nonres, 0, 1], self.p, var="t")

    def elements(self):
        """All p^2 elements, in lexicographic (c0, c1) order."""
        for c0 in range(self.p):
            for c1 in range(self.p):
                yield self.elem(c0, c1)

    def order(self) -> int:
        return self.p * self.p

    # -- raw tuple arithmetic ------------------------------------------------

    def add_raw(self, a, b):
        p = self.p
        return ((a[0] + b[0]) % p, (a[1] + b[1]) % p)

    def sub_raw(self, a, b):
        p = self.p
        return ((a[0] - b[0]) % p, (a[1] - b[1]) % p)

    def mul_raw(self, a, b):
        p, n = self.p, self.nonres
        a0, a1 = a
        b0, b1 = b
        return ((a0 * b0 + n * a1 * b1) % p, (a0 * b1 + a1 * b0) % p)

    def inv_raw(self, a):
        p, n = self.p, self.nonres
        a0, a1 = a
        norm = (a0 * a0 - n * a1 * a1) % p
        d = inv_mod(norm, p)
        return (a0 * d % p, -a1 * d % p)

    def pow_raw(self, a, e: int):
        if e < 0:
            a, e = self.inv_raw(a), -e
        out = (1, 0)
        base = a
        while e:
            if e & 1:
                out = self.mul_raw(out, base)
            base = self.mul_raw(base, base)
            e >>= 1
        return out

    def frobenius_raw(self, a):
        # t^p = -t since the non-residue n satisfies n^((p-1)/2) = -1.
        return (a[0], -a[1] % self.p)

    def __eq__(self, other):
        if isinstance(other, Ext2Field):
            return self.p == other.p and self.nonres == other.nonres
        return NotImplemented

    def __hash__(self):
        return hash((self.p, self.nonres))

    def __repr__(self):
        return f"Ext2Field(p={self.p}, t^2 = {self.nonres})"


@functools.lru_cache(maxsize=None)
def ext_quadratic(p: int) -> Ext2Field:
    """F_{p^2} as F_p[t]/(t^2 - n), n the smallest quadratic non-residue."""
    check_odd_prime(p)
    squares = {x * x % p for x in range(p)}
    nonres = next(n for n in range(2, p) if n not in squares)
    # Degree 2, so irreducible over F_p iff it has no root there.
    assert all((x * x - nonres) % p != 0 for x in range(p))
    return Ext2Field(p, nonres)
