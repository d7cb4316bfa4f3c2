"""The whole battery at once, plus what a failure report looks like.

verify_all runs every checker in a fixed order and returns structured,
deterministic reports.  To show a failure honestly, we hand the left-inverse
checker a deliberately corrupted logarithm and print its witness.
"""

import json

from trunclog import TheoremId, glog, verify_all, verify_theorem
from trunclog.polys import RatFn

p = 5

print(f"p = {p}: running all {len(TheoremId)} checkers")
for report in verify_all(p):
    line = report.one_line()
    if report.notes:
        line += f"   [{report.notes}]"
    print(" ", line)

print()
print("JSON shape of one report:")
print(json.dumps(verify_theorem(p, TheoremId.RootsTheorem).to_json_dict(), indent=2))

print()
print("a corrupted logarithm (X^2 coefficient numerator bumped by 1):")
g = glog(p)
c2 = g.coeff(2)
broken = g.with_coeff(2, RatFn(c2.num + 1, c2.den))
report = verify_theorem(p, TheoremId.LeftInverse, g=broken)
print(" ", report.one_line())
print("  witness:", json.dumps(report.witness, indent=2))
