"""The parametric exponential analogue and its compositional inverse.

Everything happens over F_p(a)[X] with exact arithmetic.  The star of the
show is the pair (L, G): L generalizes the truncated exponential, G is the
unique degree-< p polynomial with G(L(X)) = X modulo X^p - (a^p - a), and at
a = 0 the pair collapses to (truncated exp, minus truncated log).
"""

from trunclog import (
    RatFn,
    XPoly,
    alpha_p_minus_alpha,
    compose_mod,
    finite_polylog,
    glog,
    glog_specialize,
    laguerre_pm1,
)
from trunclog.errors import PoleError

p = 5

L = laguerre_pm1(p)
print(f"p = {p}")
print(f"L(X)  = {L}")

g = glog(p)
print(f"G(X)  = {g}")

# the defining identity, checked here explicitly even though glog() already
# asserted it at construction
c = RatFn.from_poly(alpha_p_minus_alpha(p))
composed = compose_mod(g.as_xpoly(), L, c)
print(f"G(L(X)) mod X^{p} - (a^{p} - a)  =  {composed}")
assert composed == XPoly.x_power(p, 1, modulus=c)

# at a = 0: L becomes the truncated exponential, G minus the truncated log
print()
print(f"L at a=0: {L.specialize(0)}")
print(f"G at a=0: {glog_specialize(g, 0)}")
assert glog_specialize(g, 0) == -finite_polylog(p, 1)

# some parameter values hit poles of G's coefficients; that is measured,
# never hidden
for a in range(p):
    try:
        glog_specialize(g, a)
        print(f"G specializes at a={a}")
    except PoleError as exc:
        print(f"G has a pole at a={a} (coefficient of X^{exc.index})")
