"""
The boundary map H^0(Q^(2)) -> H^1(Q^(3))
=========================================

Lift a global vector field theta_a theta_b phi(z) d/dz chart by chart,
glue, and read off what is left in the top layer.  On O(-1)^3 this gives an
isomorphism.  It is also nonzero on other models, which is where the
computation and the rank-3 classification part ways.
"""

from itertools import product

from obstructor.exotic import alpha_rank, atlas_cocycle, boundary_alpha, exotic_by_construction, q2_global_basis

DW = (-1, -1, -1)
for phi in q2_global_basis(DW):
    nu = atlas_cocycle(DW, phi)
    print(f"{phi.label():<18} overlap {nu}")
    print(" " * 18, "class", ", ".join(map(str, boundary_alpha(DW, phi))))
print("rank on O(-1)^3:", alpha_rank(DW))

print()
for degrees in [(-2, 0, 3), (-1, -1, -2), (0, -1, -1)]:
    print(degrees, "rank", alpha_rank(degrees))

hits = [d for d in product(range(-3, 4), repeat=3) if exotic_by_construction(d)]
print(f"\nnonzero boundary map on {len(hits)} of 343 models in [-3,3]^3")
print("every hit has a pair summing to -2 with the third degree nonzero:",
      all(any(d[a] + d[b] == -2 and d[3 - a - b] != 0 for a, b in ((0, 1), (0, 2), (1, 2))) for d in hits))
