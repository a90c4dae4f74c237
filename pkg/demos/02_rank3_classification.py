"""
Good models of rank 3 on P^1
============================

The classifier's verdicts over a box of degrees, with the obstruction table
for the one model that supports exotic atlases.
"""

from collections import Counter
from itertools import product

from obstructor import Model, classify, obstruction_report

tally = Counter()
for degrees in product(range(-3, 3), repeat=3):
    tally[classify(Model.on_p1(degrees), with_witness=False).status.value] += 1
print("verdicts on [-3,2]^3:", dict(tally))

m = Model.on_p1([-1, -1, -1])
for lvl in obstruction_report(m).levels:
    print(f"k={lvl.k}: Q = {lvl.sheaf}   h0={lvl.dims.h0} h1={lvl.dims.h1}")

verdict = classify(m)
phi, classes = verdict.witness
print(verdict)
print("witness section:", phi.label())
print("its boundary class:", ", ".join(map(str, classes)))
