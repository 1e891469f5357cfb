"""
Fixed points and quotients of a rotated projective line
=======================================================

"""

from equichern.gspace import euler, fixed_chi, quotient, validate
from equichern.models import p1_rotation
from equichern.orbifold import orbifold_euler, quo_orb_function, quotient_pushforward_check

# Z/4 turning P^1 about its poles: two fixed poles plus four sectors of C*
G, X = p1_rotation(4)
print("atoms:", [(a.id, a.chi, a.isotropy.order) for a in X.atoms])
print(validate(X).to_json())

# every rotation fixes exactly the two poles
print("chi(X) =", euler(X))
print("chi(X^g) =", [fixed_chi(X, [g]) for g in range(G.order)])

# the orbit space keeps the poles and folds the sectors into one stratum
Q = quotient(X)
print("X/G:", [(c.id, c.chi) for c in Q.atoms], "chi =", euler(Q))

# the quotient function weights a point by 1/|orbit|, and pushes forward to 1
print("quotient function:", [str(v) for v in quo_orb_function(X, 1).values])
print("pushed to X/G:", [str(v) for v in quotient_pushforward_check(X).values])

# orbifold Euler characteristics for k = 0..3 commuting elements
for k in range(4):
    print(f"chi_{k}(X, G) =", orbifold_euler(X, k))
