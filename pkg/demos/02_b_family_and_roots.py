"""The b[r,s](a) family: three routes to the same polynomial, and its roots.

The family controls products of scaled exponential analogues in the quotient
ring and hence the denominators of the generalized truncated logarithm.  Its
roots are completely predictable: a is a root of b[1,s] exactly when
a + (s*a mod p) < p, equivalently when p does not divide C(a + s*a, a).
"""

from trunclog import (
    b_root_lucas,
    b_roots_csv_rows,
    b_roots_predicted,
    b_rs,
    b_rs_alt,
    b_rs_coeff,
    product_all_b,
    roots_and_split,
)

p = 11

print(f"p = {p}")
print(f"b[1,2](a) = {b_rs(p, 1, 2)}")
print(f"  defining sum == alternate sum:      {b_rs(p, 1, 2) == b_rs_alt(p, 1, 2)}")
print(f"  defining sum == coefficient route:  {b_rs(p, 1, 2) == b_rs_coeff(p, 1, 2)}")

print()
print("predicted versus actual roots:")
for s in range(1, p - 1):
    predicted = sorted(b_roots_predicted(p, s))
    _, actual = roots_and_split(b_rs(p, 1, s))
    lucas = sorted(a for a in range(1, p) if b_root_lucas(p, s, a))
    assert predicted == sorted(actual) == lucas
    print(f"  s={s}: roots {predicted}")

print()
print("the full product over s picks up root a with multiplicity p-1-a:")
prod = product_all_b(p)
_, roots = roots_and_split(prod)
print(f"  prod b[1,s] has degree {prod.degree}")
for a in sorted(roots):
    print(f"  root {a}: multiplicity {roots[a]} (expected {p - 1 - a})")

print()
print("CSV table (what `trunclog table b-roots` prints):")
for row in b_roots_csv_rows(p):
    print(" ", row)
