"""
Scalar automorphisms and the split image
========================================

lambda * 1_E conjugates the odd generators.  On the Q^(2) layer this scales by
lambda^2, which is what kills the primary obstruction of anything in the image
of Aut(E).
"""

from fractions import Fraction

from obstructor.exotic import TruncatedAutomorphism, scale_star, split_image_cocycle, split_image_obstruction
from obstructor.laurent import LaurentPoly

g = TruncatedAutomorphism(0, deg2=(LaurentPoly({-1: 1}), 0, 0), deg3=(0, 0, LaurentPoly({-1: 1})))
for lam in (2, 3, Fraction(1, 2)):
    print(f"lambda={lam}: {scale_star(lam, g)}")
# the top layer scales by lambda^2 as well, not lambda^3

psi = (2, -1, Fraction(3, 5))
print("delta(psi) on (-3,-2,0):", split_image_cocycle((-3, -2, 0), psi))
print("its primary obstruction:", ", ".join(map(str, split_image_obstruction((-3, -2, 0), psi))))
