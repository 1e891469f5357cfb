"""Constructible functions on atom models and Euler integration.

A constructible function assigns a rational number to each atom.  Maps
between spaces are :class:`CellMap` objects that carry, for every source
atom, the Euler characteristic of its fiber over one point of the target
atom; pushforward is then the finite sum
``(f_* a)(B) = sum over A -> B of a(A) * fiber_chi(A)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence

from .errors import GroupMismatchError, InconsistentMapError, SpaceMismatchError
from .gspace import AnySpace, Cell, GSpace, Space, product, quotient


def _same(a: AnySpace, b: AnySpace) -> bool:
    return a is b or a == b


class ConstructibleFunction:
    """Rational values, one per atom of ``space``. Supports ``+``, ``-`` and scalar ``*``."""

    __slots__ = ("space", "values")

    def __init__(self, space: AnySpace, values: Iterable):
        self.space = space
        self.values: tuple[Fraction, ...] = tuple(Fraction(v) for v in values)
        if len(self.values) != len(space.atoms):
            raise ValueError(f"{len(self.values)} values for {len(space.atoms)} atoms")

    @classmethod
    def zero(cls, space: AnySpace) -> ConstructibleFunction:
        return cls(space, [0] * len(space.atoms))

    @classmethod
    def constant(cls, space: AnySpace, c=1) -> ConstructibleFunction:
        return cls(space, [c] * len(space.atoms))

    def __getitem__(self, atom_id: str) -> Fraction:
        return self.values[self.space.atom_index(atom_id)]

    def as_dict(self) -> dict[str, Fraction]:
        return {a.id: v for a, v in zip(self.space.atoms, self.values)}

    def _check(self, other: ConstructibleFunction):
        if not _same(self.space, other.space):
            raise SpaceMismatchError("functions live on different spaces")

    def __add__(self, other):
        self._check(other)
        return ConstructibleFunction(self.space, [a + b for a, b in zip(self.values, other.values)])

    def __sub__(self, other):
        self._check(other)
        return ConstructibleFunction(self.space, [a - b for a, b in zip(self.values, other.values)])

    def __neg__(self):
        return ConstructibleFunction(self.space, [-a for a in self.values])

    def __mul__(self, c):
        if not isinstance(c, (Rational, int)):
            return NotImplemented
        return ConstructibleFunction(self.space, [a * c for a in self.values])

    __rmul__ = __mul__

    def __truediv__(self, c):
        return ConstructibleFunction(self.space, [a / Fraction(c) for a in self.values])

    def __eq__(self, other):
        if not isinstance(other, ConstructibleFunction):
            return NotImplemented
        return _same(self.space, other.space) and self.values == other.values

    __hash__ = None

    def __repr__(self):
        vals = ", ".join(f"{k}: {v}" for k, v in self.as_dict().items())
        return f"ConstructibleFunction({{{vals}}})"

    def is_integer_valued(self) -> bool:
        return all(v.denominator == 1 for v in self.values)

    def is_invariant(self) -> bool:
        """True when the function is constant on orbits (always true without an action)."""
        if not isinstance(self.space, GSpace):
            return True
        return all(len({self.values[a] for a in orb}) == 1 for orb in self.space.orbits())


def indicator(space: AnySpace, atom_ids: Iterable[str]) -> ConstructibleFunction:
    chosen = {space.atom_index(i) for i in atom_ids}
    return ConstructibleFunction(space, [1 if k in chosen else 0 for k in range(len(space.atoms))])


def integral(alpha: ConstructibleFunction) -> Fraction:
    return sum((v * a.chi for v, a in zip(alpha.values, alpha.space.atoms)), Fraction(0))


@dataclass(frozen=True, eq=False)
class CellMap:
    """Atom-level model of a proper map ``source -> target``.

    ``image[i]`` is the target atom hit by source atom ``i`` and
    ``fiber_chi[i]`` the Euler characteristic of that atom's fiber over a
    point.  Construction checks ``chi(A) == fiber_chi(A) * chi(f(A))``
    wherever ``chi(f(A))`` is nonzero.
    """

    source: AnySpace
    target: AnySpace
    image: tuple[int, ...]
    fiber_chi: tuple[Fraction, ...]

    def __post_init__(self):
        image = tuple(int(i) for i in self.image)
        fiber = tuple(Fraction(c) for c in self.fiber_chi)
        n, m = len(self.source.atoms), len(self.target.atoms)
        if len(image) != n or len(fiber) != n:
            raise InconsistentMapError(f"map needs one image and one fiber_chi per source atom ({n})")
        for i, (b, fib) in enumerate(zip(image, fiber)):
            if not 0 <= b < m:
                raise InconsistentMapError(f"source atom {self.source.atoms[i].id!r} maps to missing target atom {b}")
            tchi = self.target.atoms[b].chi
            if tchi != 0 and self.source.atoms[i].chi != fib * tchi:
                raise InconsistentMapError(
                    f"atom {self.source.atoms[i].id!r}: chi {self.source.atoms[i].chi} != "
                    f"fiber_chi {fib} * chi {tchi} of {self.target.atoms[b].id!r}")
        object.__setattr__(self, "image", image)
        object.__setattr__(self, "fiber_chi", fiber)

    def __eq__(self, other):
        if not isinstance(other, CellMap):
            return NotImplemented
        return (_same(self.source, other.source) and _same(self.target, other.target)
                and self.image == other.image and self.fiber_chi == other.fiber_chi)

    __hash__ = None

    def is_equivariant(self) -> bool:
        """Image orbit and fiber data constant along source orbits."""
        if not isinstance(self.source, GSpace):
            return True
        if isinstance(self.target, GSpace):
            where = self.target.orbit_of_atom()
            img = [where[b] for b in self.image]
        else:
            img = list(self.image)
        return all(len({(img[a], self.fiber_chi[a]) for a in orb}) == 1 for orb in self.source.orbits())


def pushforward(f: CellMap, alpha: ConstructibleFunction) -> ConstructibleFunction:
    if not _same(alpha.space, f.source):
        raise SpaceMismatchError("function does not live on the map's source")
    out = [Fraction(0)] * len(f.target.atoms)
    for v, b, fib in zip(alpha.values, f.image, f.fiber_chi):
        out[b] += v * fib
    return ConstructibleFunction(f.target, out)


def pullback(f: CellMap, beta: ConstructibleFunction) -> ConstructibleFunction:
    if not _same(beta.space, f.target):
        raise SpaceMismatchError("function does not live on the map's target")
    return ConstructibleFunction(f.source, [beta.values[b] for b in f.image])


def cross(alpha: ConstructibleFunction, beta: ConstructibleFunction,
          space: GSpace | None = None) -> ConstructibleFunction:
    """``(a x b)(A, B) = a(A) b(B)`` on the product space.

    Pass ``space`` to reuse an existing ``product(X, Y)``; otherwise a new
    product is built.
    """
    X, Y = alpha.space, beta.space
    if isinstance(X, GSpace) != isinstance(Y, GSpace):
        raise GroupMismatchError("cannot cross a G-space function with a plain-space function")
    if space is None:
        if isinstance(X, GSpace):
            space = product(X, Y)
        else:
            space = Space(tuple(Cell(f"({a.id},{b.id})", a.chi * b.chi) for a in X.atoms for b in Y.atoms),
                          name=f"{X.name}x{Y.name}")
    if len(space.atoms) != len(X.atoms) * len(Y.atoms):
        raise SpaceMismatchError("given product space has the wrong number of atoms")
    return ConstructibleFunction(space, [a * b for a in alpha.values for b in beta.values])


def compose_maps(f: CellMap, g: CellMap) -> CellMap:
    """``f ∘ g`` (apply ``g`` first)."""
    if not _same(g.target, f.source):
        raise SpaceMismatchError("g's target is not f's source")
    image = tuple(f.image[b] for b in g.image)
    fiber = tuple(fg * f.fiber_chi[b] for fg, b in zip(g.fiber_chi, g.image))
    return CellMap(g.source, f.target, image, fiber)


# -- standard maps -------------------------------------------------------

def point_space(name: str = "pt") -> Space:
    return Space((Cell(name, 1),), name=name)


def map_to_point(space: AnySpace, target: Space | None = None) -> CellMap:
    """Collapse to a point; fiber of each atom is the atom itself."""
    target = target if target is not None else point_space()
    return CellMap(space, target, (0,) * len(space.atoms), tuple(a.chi for a in space.atoms))


def identity_map(space: AnySpace) -> CellMap:
    n = len(space.atoms)
    return CellMap(space, space, tuple(range(n)), (1,) * n)


def quotient_map(X: GSpace, target: Space | None = None) -> CellMap:
    """Projection to the orbit space; each atom maps isomorphically onto its orbit atom."""
    target = target if target is not None else quotient(X)
    return CellMap(X, target, tuple(X.orbit_of_atom()), (1,) * len(X.atoms))


def projections(X: AnySpace, Y: AnySpace, XY: AnySpace) -> tuple[CellMap, CellMap]:
    """The two factor projections of ``XY = product(X, Y)``."""
    m = len(Y.atoms)
    n = len(X.atoms)
    p1 = CellMap(XY, X, tuple(i for i in range(n) for _ in range(m)),
                 tuple(Y.atoms[j].chi for _ in range(n) for j in range(m)))
    p2 = CellMap(XY, Y, tuple(j for _ in range(n) for j in range(m)),
                 tuple(X.atoms[i].chi for i in range(n) for _ in range(m)))
    return p1, p2


def equivariant_function(space: GSpace, orbit_values: Sequence) -> ConstructibleFunction:
    """Orbit-constant function from one value per orbit (in :meth:`GSpace.orbits` order)."""
    where = space.orbit_of_atom()
    return ConstructibleFunction(space, [orbit_values[k] for k in where])
