"""
Segre-SM series, Euler characteristics of zero loci, and BGL(1)
===============================================================

"""

from equichern.charclass import bgl1_stage_map, bgl1_truncated, linear_form, torus_ring
from equichern.thom import euler_of_singular_locus, segre_sm_smooth

# a coordinate subspace of weights t1, t2 in a rank-2 torus representation
R = torus_ring(2, 4)
s = segre_sm_smooth([linear_form(R, [1, 0]), linear_form(R, [0, 1])], R)
print("series:", s)
print("leading term:", s.lowest_part())

# smooth plane curves of degree d have chi = 3d - d^2
print("plane curves:", [str(euler_of_singular_locus([d], 2)) for d in range(1, 7)])

# complete intersections in P^3: a quadric surface, an elliptic curve, 8 points
print("P^3:", [str(euler_of_singular_locus(ds, 3)) for ds in ([2], [2, 2], [2, 2, 2])])

# finite stages of BGL(1) are projective spaces with one class per even degree
for m in range(4):
    H = bgl1_truncated(m)
    print(f"m={m}", "shifted degrees", H.shifted_degrees, "ranks", H.ranks)
print("stage 1 -> stage 3:", bgl1_stage_map(1, 3))
