"""Dense univariate polynomials over F_p and the field of rational functions.

Polynomials are stored as tuples of int residues, lowest degree first, with no
trailing zero (the zero polynomial is the empty tuple).  The variable-name tag
is purely informational ("a" for the parameter, "X" for the main variable);
arithmetic never inspects it and mixing tags is permitted; binary operations
keep the left operand's tag.

Multiplication switches to Kronecker substitution (coefficients packed into a
single Python int) once the schoolbook cost would exceed a small threshold;
with desk-scale primes the packed products never overflow their slots.

``RatFn`` keeps fractions in canonical form at all times: the denominator is
monic and coprime to the numerator, and the zero fraction is 0/1.  Equality of
canonical forms is therefore plain coordinate equality.

Everything is immutable and pure, hence freely shareable across threads.
"""

from __future__ import annotations

from .errors import NonSplitError, PoleError
from .fields import FpElem, check_odd_prime, inv_mod

_SCHOOLBOOK_LIMIT = 2048  # product size (len_a * len_b) below which naive wins


def _trim(coeffs):
    n = len(coeffs)
    while n and coeffs[n - 1] == 0:
        n -= 1
    return tuple(coeffs[:n])


def _mul_tuples(a, b, p):
    la, lb = len(a), len(b)
    if not la or not lb:
        return ()
    if la * lb <= _SCHOOLBOOK_LIMIT:
        out = [0] * (la + lb - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return _trim([c % p for c in out])
    # Kronecker substitution: pack coefficients into fixed-width slots of one
    # big int, multiply once, unpack.  Slot width must dominate the largest
    # possible convolution entry, min(la, lb) * (p-1)^2.
    width = 4
    if min(la, lb) * (p - 1) * (p - 1) >= 1 << 32:
        width = 8
    na = int.from_bytes(b"".join(c.to_bytes(width, "little") for c in a), "little")
    nb = int.from_bytes(b"".join(c.to_bytes(width, "little") for c in b), "little")
    nc = na * nb
    n = la + lb - 1
    buf = nc.to_bytes(width * (n + 1), "little")
    out = [
        int.from_bytes(buf[width * i : width * i + width], "little") % p
        for i in range(n)
    ]
    return _trim(out)


def _divmod_tuples(a, b, p):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    la, lb = len(a), len(b)
    if la < lb:
        return (), a
    inv_lead = inv_mod(b[-1], p)
    r = list(a)
    q = [0] * (la - lb + 1)
    for i in range(la - lb, -1, -1):
        c = r[i + lb - 1] % p
        if c:
            c = c * inv_lead % p
            q[i] = c
            for j in range(lb):
                r[i + j] -= c * b[j]
    return _trim(q), _trim([c % p for c in r[: lb - 1]])


def _gcd_tuples(a, b, p):
    while b:
        a, b = b, _divmod_tuples(a, b, p)[1]
    if a:
        inv_lead = inv_mod(a[-1], p)
        a = tuple(c * inv_lead % p for c in a)
    return a


class FpPoly:
    """Dense polynomial over F_p, lowest-degree coefficient first."""

    __slots__ = ("coeffs", "p", "var")

    def __init__(self, coeffs, p, var="a"):
        check_odd_prime(p)
        object.__setattr__(self, "coeffs", _trim([int(c) % p for c in coeffs]))
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "var", var)

    def __setattr__(self, name, value):
        raise AttributeError("FpPoly is immutable")

    @classmethod
    def _raw(cls, coeffs, p, var):
        self = object.__new__(cls)
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "var", var)
        return self

    # -- constructors ---------------------------------------------------------

    @classmethod
    def zero(cls, p, var="a"):
        return cls._raw((), p, var)

    @classmethod
    def one(cls, p, var="a"):
        return cls._raw((1,), p, var)

    @classmethod
    def const(cls, c, p, var="a"):
        return cls((c,), p, var)

    @classmethod
    def x(cls, p, var="a"):
        return cls._raw((0, 1), p, var)

    @classmethod
    def monomial(cls, c, e, p, var="a"):
        c = int(c) % p
        if c == 0:
            return cls.zero(p, var)
        return cls._raw((0,) * e + (c,), p, var)

    # -- structure ------------------------------------------------------------

    @property
    def degree(self):
        """Degree, with deg 0 = -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self):
        return not self.coeffs

    @property
    def is_one(self):
        return self.coeffs == (1,)

    @property
    def lead(self):
        return self.coeffs[-1] if self.coeffs else 0

    def coeff(self, e) -> int:
        return self.coeffs[e] if 0 <= e < len(self.coeffs) else 0

    def monic(self):
        if self.is_zero or self.lead == 1:
            return self
        inv_lead = inv_mod(self.lead, self.p)
        return FpPoly._raw(
            tuple(c * inv_lead % self.p for c in self.coeffs), self.p, self.var
        )

    # -- arithmetic -----------------------------------------------------------

    def _other_coeffs(self, other):
        if isinstance(other, FpPoly):
            if other.p != self.p:
                raise ValueError(f"mixed moduli: {self.p} and {other.p}")
            return other.coeffs
        if isinstance(other, int):
            v = other % self.p
            return (v,) if v else ()
        if isinstance(other, FpElem):
            if other.p != self.p:
                raise ValueError(f"mixed moduli: {self.p} and {other.p}")
            return (other.value,) if other.value else ()
        return None

    def __add__(self, other):
        oc = self._other_coeffs(other)
        if oc is None:
            return NotImplemented
        a, b, p = self.coeffs, oc, self.p
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = (out[i] + c) % p
        return FpPoly._raw(_trim(out), p, self.var)

    __radd__ = __add__

    def __sub__(self, other):
        oc = self._other_coeffs(other)
        if oc is None:
            return NotImplemented
        p = self.p
        n = max(len(self.coeffs), len(oc))
        out = [
            ((self.coeffs[i] if i < len(self.coeffs) else 0)
             - (oc[i] if i < len(oc) else 0)) % p
            for i in range(n)
        ]
        return FpPoly._raw(_trim(out), p, self.var)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __neg__(self):
        p = self.p
        return FpPoly._raw(tuple(-c % p for c in self.coeffs), p, self.var)

    def __mul__(self, other):
        oc = self._other_coeffs(other)
        if oc is None:
            return NotImplemented
        if len(oc) == 1:
            s, p = oc[0], self.p
            if s == 1:
                return self
            return FpPoly._raw(tuple(c * s % p for c in self.coeffs), p, self.var)
        return FpPoly._raw(_mul_tuples(self.coeffs, oc, self.p), self.p, self.var)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power of a polynomial")
        out = FpPoly.one(self.p, self.var)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base if e > 1 else base
            e >>= 1
        return out

    def __divmod__(self, other):
        oc = self._other_coeffs(other)
        if oc is None:
            return NotImplemented
        q, r = _divmod_tuples(self.coeffs, oc, self.p)
        return (FpPoly._raw(q, self.p, self.var), FpPoly._raw(r, self.p, self.var))

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def gcd(self, other):
        """Monic greatest common divisor."""
        oc = self._other_coeffs(other)
        if oc is None:
            raise TypeError("gcd with incompatible operand")
        return FpPoly._raw(_gcd_tuples(self.coeffs, oc, self.p), self.p, self.var)

    # -- evaluation and substitution -------------------------------------------

    def eval_int(self, a: int) -> int:
        p = self.p
        a %= p
        out = 0
        for c in reversed(self.coeffs):
            out = (out * a + c) % p
        return out

    def __call__(self, a) -> FpElem:
        return FpElem(self.eval_int(int(a)), self.p)

    def derivative(self):
        p = self.p
        out = [i * c % p for i, c in enumerate(self.coeffs)][1:]
        return FpPoly._raw(_trim(out), p, self.var)

    def compose(self, g: "FpPoly") -> "FpPoly":
        """Substitution self(g) by Horner."""
        if not self.coeffs:
            return FpPoly.zero(self.p, g.var)
        out = FpPoly.const(self.coeffs[-1], self.p, g.var)
        for c in reversed(self.coeffs[:-1]):
            out = out * g + c
        return out

    def subs_scale(self, h: int) -> "FpPoly":
        """Substitute var -> h*var (an automorphism for h != 0)."""
        p = self.p
        h %= p
        out, hk = [], 1
        for c in self.coeffs:
            out.append(c * hk % p)
            hk = hk * h % p
        return FpPoly._raw(_trim(out), p, self.var)

    def frobenius_p(self) -> "FpPoly":
        """The p-th power: coefficients spread to exponents p*i."""
        if self.is_zero:
            return self
        p = self.p
        out = [0] * (p * (len(self.coeffs) - 1) + 1)
        for i, c in enumerate(self.coeffs):
            out[p * i] = c
        return FpPoly._raw(_trim(out), p, self.var)

    def shift(self, e: int) -> "FpPoly":
        """Multiply by var^e."""
        if self.is_zero or e == 0:
            return self
        return FpPoly._raw((0,) * e + self.coeffs, self.p, self.var)

    # -- comparison and rendering ----------------------------------------------

    def __eq__(self, other):
        if isinstance(other, FpPoly):
            return self.p == other.p and self.coeffs == other.coeffs
        if isinstance(other, int):
            oc = self._other_coeffs(other)
            return self.coeffs == oc
        return NotImplemented

    def __hash__(self):
        return hash((self.coeffs, self.p))

    def __bool__(self):
        return bool(self.coeffs)

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for e in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[e]
            if not c:
                continue
            if e == 0:
                terms.append(str(c))
            elif e == 1:
                terms.append(self.var if c == 1 else f"{c}*{self.var}")
            else:
                head = "" if c == 1 else f"{c}*"
                terms.append(f"{head}{self.var}^{e}")
        return " + ".join(terms)

    def __repr__(self):
        return f"FpPoly({self}, p={self.p})"


def roots_and_split(f: FpPoly):
    """Split f into linear factors over F_p.

    Returns (leading coefficient, {root: multiplicity}).  Raises NonSplitError
    if a factor of degree > 1 without roots in F_p remains; for the b-family
    such a remainder would witness a violated identity.
    """
    if f.is_zero:
        raise ValueError("cannot split the zero polynomial")
    lead = FpElem(f.lead, f.p)
    g = f.monic()
    p = f.p
    roots: dict[int, int] = {}
    for a in range(p):
        while g.degree > 0 and g.eval_int(a) == 0:
            # synthetic division by (var - a)
            coeffs = g.coeffs
            out = [0] * (len(coeffs) - 1)
            acc = 0
            for i in range(len(coeffs) - 1, 0, -1):
                acc = (acc * a + coeffs[i]) % p
                out[i - 1] = acc
            g = FpPoly._raw(_trim(out), p, g.var)
            roots[a] = roots.get(a, 0) + 1
    if g.degree > 0:
        raise NonSplitError(g)
    return lead, roots


class RatFn:
    """A reduced fraction of two FpPoly values.

    Canonical form: monic nonzero denominator, gcd(num, den) = 1, and the
    zero fraction is 0/1.  Construction canonicalizes; a cheap exact-division
    probe runs before the full gcd because results in this package are very
    often polynomials in disguise.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if isinstance(num, (int, FpElem)):
            raise TypeError("RatFn numerator must be an FpPoly; use RatFn.const")
        p = num.p
        if den is None:
            den = FpPoly.one(p, num.var)
        elif isinstance(den, int):
            den = FpPoly.const(den, p, num.var)
        if den.p != p:
            raise ValueError(f"mixed moduli: {p} and {den.p}")
        if den.is_zero:
            raise ZeroDivisionError("zero denominator")
        num, den = self._canonical(num, den)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RatFn is immutable")

    @staticmethod
    def _canonical(num, den):
        p = num.p
        if num.is_zero:
            return FpPoly.zero(p, num.var), FpPoly.one(p, num.var)
        if den.degree == 0:
            s = inv_mod(den.lead, p)
            return num * s, FpPoly.one(p, num.var)
        if num.degree >= den.degree:
            q, r = divmod(num, den)
            if r.is_zero:
                return q, FpPoly.one(p, num.var)
            g = den.gcd(r)
        else:
            g = num.gcd(den)
        if g.degree > 0:
            num = num // g
            den = den // g
        if den.lead != 1:
            s = inv_mod(den.lead, p)
            num = num * s
            den = den * s
        return num, den

    @classmethod
    def _raw(cls, num, den):
        self = object.__new__(cls)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)
        return self

    @classmethod
    def from_poly(cls, f: FpPoly):
        return cls._raw(f, FpPoly.one(f.p, f.var))

    @classmethod
    def const(cls, c, p, var="a"):
        return cls.from_poly(FpPoly.const(int(c), p, var))

    @classmethod
    def zero(cls, p, var="a"):
        return cls._raw(FpPoly.zero(p, var), FpPoly.one(p, var))

    @classmethod
    def one(cls, p, var="a"):
        return cls.from_poly(FpPoly.one(p, var))

    @property
    def p(self):
        return self.num.p

    @property
    def var(self):
        return self.num.var

    @property
    def is_zero(self):
        return self.num.is_zero

    @property
    def is_polynomial(self):
        return self.den.is_one

    def as_poly(self) -> FpPoly:
        if not self.den.is_one:
            raise ValueError(f"not a polynomial: {self}")
        return self.num

    def _coerce(self, other):
        if isinstance(other, RatFn):
            if other.p != self.p:
                raise ValueError(f"mixed moduli: {self.p} and {other.p}")
            return other
        if isinstance(other, FpPoly):
            return RatFn.from_poly(other)
        if isinstance(other, (int, FpElem)):
            return RatFn.const(int(other), self.p, self.var)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den.is_one and o.den.is_one:
            return RatFn._raw(self.num + o.num, self.den)
        return RatFn(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den.is_one and o.den.is_one:
            return RatFn._raw(self.num - o.num, self.den)
        return RatFn(self.num * o.den - o.num * self.den, self.den * o.den)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den.is_one and o.den.is_one:
            return RatFn._raw(self.num * o.num, self.den)
        return RatFn(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero:
            raise ZeroDivisionError("division by the zero fraction")
        return RatFn(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __neg__(self):
        return RatFn._raw(-self.num, self.den)

    def __pow__(self, e: int):
        if e < 0:
            if self.is_zero:
                raise ZeroDivisionError("negative power of zero")
            return (RatFn.one(self.p, self.var) / self) ** (-e)
        # num and den stay coprime under powering; den stays monic
        return RatFn._raw(self.num ** e, self.den ** e)

    def eval(self, a) -> FpElem:
        """Evaluate at a point of F_p; raises PoleError at a denominator root."""
        a = int(a)
        dv = self.den.eval_int(a)
        if dv == 0:
            raise PoleError(a % self.p)
        return FpElem(self.num.eval_int(a) * inv_mod(dv, self.p), self.p)

    def subs_scale(self, h: int) -> "RatFn":
        """Substitute var -> h*var for h != 0 mod p; an automorphism, so the
        reduced form survives up to re-scaling the denominator monic."""
        p = self.p
        if h % p == 0:
            raise ValueError("scale must be nonzero mod p")
        num = self.num.subs_scale(h)
        den = self.den.subs_scale(h)
        if den.lead != 1:
            s = inv_mod(den.lead, p)
            num = num * s
            den = den * s
        return RatFn._raw(num, den)

    def frobenius_p(self) -> "RatFn":
        """The literal p-th power: Frobenius applied to num and den."""
        return RatFn._raw(self.num.frobenius_p(), self.den.frobenius_p())

    def __eq__(self, other):
        if isinstance(other, RatFn):
            return (
                self.p == other.p
                and self.num == other.num
                and self.den == other.den
            )
        if isinstance(other, (FpPoly, int, FpElem)):
            try:
                o = self._coerce(other)
            except ValueError:
                return False
            return self.num == o.num and self.den == o.den
        return NotImplemented

    def __hash__(self):
        return hash((self.num, self.den))

    def __bool__(self):
        return not self.num.is_zero

    def __str__(self):
        if self.den.is_one:
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    def __repr__(self):
        return f"RatFn({self}, p={self.p})"
