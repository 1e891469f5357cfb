"""
Euler calculus on cell spaces
=============================

"""

import random

from equichern.constructible import (ConstructibleFunction, compose_maps, cross, indicator, integral,
                                     map_to_point, pullback, pushforward)
from equichern.models import random_fibration, random_space

rng = random.Random(1)

# a base with three strata and a space fibred over it
Z = random_space(rng, 3, name="Z")
f = random_fibration(rng, Z, 5, name="Y")
g = random_fibration(rng, f.source, 7, name="X")
X, Y = g.source, f.source
print("Z:", [(c.id, c.chi) for c in Z.atoms])
print("Y over Z:", [(c.id, Z.atoms[b].id, str(fib)) for c, b, fib in zip(Y.atoms, f.image, f.fiber_chi)])

# integrating the constant function gives the Euler characteristic
one = ConstructibleFunction.constant(X)
print("integral of 1_X =", integral(one), "=", sum(c.chi for c in X.atoms))

# pushforward is functorial and preserves integrals
alpha = ConstructibleFunction(X, [rng.randint(-2, 2) for _ in X.atoms])
direct = pushforward(compose_maps(f, g), alpha)
stepwise = pushforward(f, pushforward(g, alpha))
print("(f g)_* alpha:", [str(v) for v in direct.values])
print("f_* g_* alpha:", [str(v) for v in stepwise.values])
print("to a point:", pushforward(map_to_point(X), alpha).values[0], "=", integral(alpha))

# pulling back an indicator gives the indicator of the preimage
b = indicator(Z, [Z.atoms[0].id])
print("pullback of 1_{Z0} to Y:", [str(v) for v in pullback(f, b).values])

# cross products multiply integrals
beta = ConstructibleFunction(Z, [1, -1, 2])
print("integral of alpha x beta =", integral(cross(alpha, beta)), "=", integral(alpha) * integral(beta))
