"""Equivariant Euler calculus and characteristic-class computations, exactly.

Submodules:

* :mod:`equichern.groups` -- enumerated permutation groups, centralizers,
  commuting tuples
* :mod:`equichern.gspace` -- atom models of G-spaces, fixed sets, quotients
* :mod:`equichern.constructible` -- constructible functions, Euler
  integration, pushforward and pullback
* :mod:`equichern.orbifold` -- canonical functions, orbifold Euler
  characteristics, symmetric products
* :mod:`equichern.charclass` -- truncated graded series, Chern classes of
  torus weights, Hankel determinants, ``H^*(P^n)``
* :mod:`equichern.thom` -- Thom-Porteous classes and Segre-SM series
"""

from .charclass import (GradedRing, GradedSeries, GradedVariable, bgl1_truncated, chern_of_weights,
                        hankel_det, proj_integrate, proj_ring, proj_substitute)
from .constructible import (CellMap, ConstructibleFunction, compose_maps, cross, identity_map, indicator,
                            integral, map_to_point, pullback, pushforward, quotient_map)
from .groups import (FiniteGroup, Permutation, Subgroup, centralizer, commuting_tuples, conjugacy_classes,
                     count_commuting_tuples, group_from_generators, subgroup_from)
from .gspace import Atom, GSpace, Space, euler, fixed_chi, product, quotient, validate
from .orbifold import (canonical_function, degree_c0, orbifold_euler, power_fixed_chi, power_orbifold_euler,
                       quo_orb_function, quotient_pushforward_check, symprod_genfun)
from .thom import (BundleData, PorteousSpec, degeneracy_class, euler_of_singular_locus, porteous_tp,
                   segre_sm_smooth)

__version__ = "0.1.0"
