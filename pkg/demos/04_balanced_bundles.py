"""
Balanced bundles O(d)^q
=======================

Global sections of every obstruction sheaf, level by level.
"""

from math import comb

from obstructor import Model, classify, obstruction_report
from obstructor.obstruction import balanced_h0_profile

for q in range(2, 7):
    rows = {d: balanced_h0_profile(q, d) for d in (-3, -2, -1)}
    print(f"q={q}: " + "   ".join(f"d={d}: {v}" for d, v in rows.items()), f"  C(q,2)={comb(q, 2)}")

m = Model.on_p1([-2] * 4)
rep = obstruction_report(m)
for note in rep.notes:
    print("note:", note)
print(classify(m), "|", classify(Model.on_p1([-1] * 4)))
