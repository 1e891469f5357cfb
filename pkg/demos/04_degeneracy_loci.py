"""
Degeneracy loci over projective space
=====================================

"""

from equichern.thom import BundleData, PorteousSpec, degeneracy_class, porteous_tp

# the Thom polynomial of the rank drop is a Schur determinant in c(F - E)
for e, f, i in [(1, 1, 1), (2, 3, 1), (2, 2, 2), (3, 4, 2)]:
    spec = PorteousSpec(e, f, i)
    print(f"e={e} f={f} i={i} codim={spec.codim}:", porteous_tp(spec))

# a section of O(d) on P^1 vanishes at d points
print([str(degeneracy_class(PorteousSpec(1, 1, 1), BundleData(1, [0], [d]))) for d in range(1, 6)])

# a 2x2 matrix of linear forms on P^2 degenerates along a conic
print(degeneracy_class(PorteousSpec(2, 2, 1), BundleData(2, [0, 0], [1, 1])))

# a 2x3 matrix of linear forms on P^3 drops rank along a twisted cubic
print(degeneracy_class(PorteousSpec(2, 3, 1), BundleData(3, [0, 0], [1, 1, 1])))
