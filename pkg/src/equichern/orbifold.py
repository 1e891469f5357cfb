"""Canonical constructible functions and orbifold Euler characteristics.

Two fixed-point backends are used.  General actions go through
:class:`~equichern.gspace.GSpace` atoms.  Cartesian powers ``X^n`` with a
permutation group acting on the factors go through the orbit-count rule
``chi((X^n)^H) = chi(X) ** (number of H-orbits on the factors)``, which the
atom model cannot express because a factor swap fixes product cells
setwise without fixing them pointwise.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from itertools import product as iproduct
from math import factorial
from typing import Sequence

from . import charclass
from .constructible import ConstructibleFunction, integral, pushforward, quotient_map
from .groups import (FiniteGroup, Permutation, commuting_tuples, conjugacy_classes,
                     count_commuting_tuples, orbit_count, symmetric_group, _iter_bits)
from .gspace import GSpace, fixed_chi


def canonical_function(X: GSpace, k: int) -> ConstructibleFunction:
    """Atom ``A`` goes to the number of commuting k-tuples in its isotropy group."""
    if k < 0:
        raise ValueError("k must be non-negative")
    cache: dict[int, int] = {}
    values = []
    for atom in X.atoms:
        m = atom.isotropy.mask
        if m not in cache:
            cache[m] = count_commuting_tuples(X.group, k, within=atom.isotropy)
        values.append(cache[m])
    return ConstructibleFunction(X, values)


def quo_orb_function(X: GSpace, k: int) -> ConstructibleFunction:
    """Canonical function divided by ``|G|`` (the Euler characteristic of a finite group).

    ``k = 1`` is the quotient function and ``k = 2`` the orbifold function.
    """
    return canonical_function(X, k) / X.group.order


def orbifold_euler_by_tuples(X: GSpace, k: int) -> Fraction:
    """``(1/|G|) * sum over Com(G; k) of chi(X^tuple)``, by direct enumeration."""
    total = sum(fixed_chi(X, t) for t in commuting_tuples(X.group, k))
    return Fraction(total, X.group.order)


def orbifold_euler(X: GSpace, k: int, check: bool = True) -> Fraction:
    """Degree of the k-th rational canonical function.

    With ``check`` set the commuting-tuple sum is computed as well and an
    ``ArithmeticError`` raised if the two routes disagree.
    """
    value = integral(quo_orb_function(X, k))
    if check:
        other = orbifold_euler_by_tuples(X, k)
        if other != value:
            raise ArithmeticError(f"orbifold Euler characteristic routes disagree: {value} vs {other}")
    return value


def quotient_pushforward_check(X: GSpace) -> ConstructibleFunction:
    """Push the quotient function forward to ``X/G``; should be identically 1."""
    return pushforward(quotient_map(X), quo_orb_function(X, 1))


def degree_c0(alpha: ConstructibleFunction) -> Fraction:
    """Degree of the 0-th component of the Chern class of ``alpha``, i.e. its Euler integral."""
    return integral(alpha)


# -- power backend ---------------------------------------------------------

def power_fixed_chi(chi_x: int, n: int, subgroup_gens: Sequence[Permutation | Sequence[int]]) -> int:
    perms = [g if isinstance(g, Permutation) else Permutation(tuple(g)) for g in subgroup_gens]
    for p in perms:
        if p.degree != n:
            raise ValueError(f"{p} is not a permutation of {n} points")
    return chi_x ** orbit_count(n, perms)


def _walk_tuples(G: FiniteGroup, g: int, k: int):
    """Yield the commuting k-tuples whose first entry is ``g``."""
    stack = [((g,), G.centralizer_mask(g))]
    while stack:
        prefix, cand = stack.pop()
        if len(prefix) == k:
            yield prefix
            continue
        for h in _iter_bits(cand):
            stack.append((prefix + (h,), cand & G.centralizer_mask(h)))


def orbit_count_distribution(G: FiniteGroup, k: int) -> dict[int, int]:
    """Number of commuting k-tuples of ``G`` per orbit count of the subgroup they generate.

    Orbit counts are conjugation invariant, so the first entry only runs
    over class representatives, weighted by class size.
    """
    cache = _DISTRIBUTIONS.setdefault(id(G), (G, {}))[1]
    if k in cache:
        return cache[k]
    n, elems = G.degree, G.elements
    dist: Counter[int] = Counter()
    if k == 0:
        dist[n] = 1
    elif k == 1:
        for p in elems:
            dist[len(p.cycles())] += 1
    else:
        for cls in conjugacy_classes(G):
            for t in _walk_tuples(G, cls[0], k):
                dist[orbit_count(n, [elems[i] for i in t])] += len(cls)
    cache[k] = dict(sorted(dist.items()))
    return cache[k]


_DISTRIBUTIONS: dict[int, tuple[FiniteGroup, dict[int, dict[int, int]]]] = {}


@lru_cache(maxsize=None)
def _symmetric(n: int) -> FiniteGroup:
    return symmetric_group(n)


def power_orbifold_euler(chi_x: int, n: int, k: int, group: FiniteGroup | None = None) -> Fraction:
    """Generalized orbifold Euler characteristic of ``X^n`` under ``group`` (default ``S_n``).

    ``(1/|G|) * sum over commuting k-tuples of chi_x ** orbits``.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if k < 0:
        raise ValueError("k must be non-negative")
    G = group if group is not None else _symmetric(n)
    if G.degree != n:
        raise ValueError(f"group acts on {G.degree} points, expected {n}")
    dist = orbit_count_distribution(G, k)
    return Fraction(sum(c * chi_x ** orbits for orbits, c in dist.items()), G.order)


def power_orbifold_euler_brute(chi_x: int, n: int, k: int, group: FiniteGroup | None = None) -> Fraction:
    """Same value as :func:`power_orbifold_euler`, enumerating all of ``G^k``
    and testing commutativity pair by pair (test oracle; tiny groups only)."""
    G = group if group is not None else symmetric_group(n)
    elems = G.elements
    total = 0
    for t in iproduct(range(G.order), repeat=k):
        ps = [elems[i] for i in t]
        if all((a * b).images == (b * a).images for a in ps for b in ps):
            total += chi_x ** orbit_count(n, ps)
    return Fraction(total, G.order)


def symprod_genfun(chi_x: int, max_n: int, k: int) -> list[Fraction]:
    """Coefficients of ``t^0..t^max_n`` of ``sum_n chi_k(X^n, S_n) t^n``."""
    if max_n < 0:
        raise ValueError("max_n must be non-negative")
    return [Fraction(1)] + [power_orbifold_euler(chi_x, n, k) for n in range(1, max_n + 1)]


def symprod_closed_form(chi_x: int, max_n: int, k: int) -> list[Fraction]:
    """Truncated expansion of the closed form for ``k`` in {0, 1, 2}.

    ``k = 0``: ``exp(chi t)``; ``k = 1``: ``(1 - t)^(-chi)``;
    ``k = 2``: ``prod_{m>=1} (1 - t^m)^(-chi)``.
    """
    ring = charclass.GradedRing.of(["t"], max_n)
    t = ring.gen("t")
    if k == 0:
        return [Fraction(chi_x ** n, factorial(n)) for n in range(max_n + 1)]
    if k == 1:
        f = (1 - t) ** (-chi_x)
    elif k == 2:
        f = ring.one()
        for m in range(1, max_n + 1):
            f = f * (1 - t ** m) ** (-chi_x)
    else:
        raise ValueError("closed form only for k <= 2")
    return [f.coeff((n,)) for n in range(max_n + 1)]

