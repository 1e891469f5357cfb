"""
Orbifold Euler characteristics of symmetric products
====================================================

"""

from equichern.groups import conjugacy_classes, count_commuting_tuples, symmetric_group
from equichern.models import point, small_groups
from equichern.orbifold import orbifold_euler, power_orbifold_euler, symprod_closed_form, symprod_genfun

# a point with isotropy G: commuting pairs divided by |G| count conjugacy classes
for name, G in small_groups()[::6]:
    print(f"{name:6s} |G|={G.order:2d} classes={len(conjugacy_classes(G)):2d}",
          "chi_2(pt) =", orbifold_euler(point(G), 2))

# commuting tuples in S_4
S4 = symmetric_group(4)
print("commuting k-tuples in S4:", [count_commuting_tuples(S4, k) for k in range(4)])

# X^2 under S_2 with chi(X) = 2
print("chi_1(X^2, S2) =", power_orbifold_euler(2, 2, 1), " chi_2(X^2, S2) =", power_orbifold_euler(2, 2, 2))

# generating functions over n for chi(X) = 3
chi = 3
for k, N in [(0, 5), (1, 6), (2, 5)]:
    brute = symprod_genfun(chi, N, k)
    closed = symprod_closed_form(chi, N, k)
    print(f"k={k}:", [str(c) for c in brute], "matches closed form:", brute == closed)
