"""
Line bundle cohomology on P^1, two ways
=======================================

Bott's closed form against the Cech complex of the standard two-chart cover.
"""

from obstructor import LineBundleClass, P1, line_cohomology
from obstructor.cech import cech_dims, oracle_listing, reduce_class, transition_convention
from obstructor.laurent import LaurentPoly

print(transition_convention(-3))
print()

# the rank computation and the closed form agree degree by degree
for d in range(-6, 5):
    exact = line_cohomology(LineBundleClass(d), P1)
    print(f"O({d:>2}):  Bott h0={exact.h0} h1={exact.h1}   Cech {cech_dims(d)}")

# a class in H^1(O(-4)) is whatever survives both charts
cocycle = LaurentPoly({-7: 1, -2: 3, -1: -1, 2: 5})
cls = reduce_class(-4, cocycle)
print()
print(f"cocycle {cocycle} in O(-4) reduces to {cls}")
print("basis:", oracle_listing(-4)["h1_basis"])
