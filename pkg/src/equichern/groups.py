"""Finite permutation groups, fully enumerated.

Elements are stored in a fixed order (breadth-first over the generators,
each layer sorted lexicographically by one-line notation), so element ids
are stable across runs and can be referenced from files.  Subgroups are
bitmasks over element ids.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .errors import MalformedPermutationError, SizeLimitError

DEFAULT_MAX_ORDER = 10**6


@dataclass(frozen=True)
class Permutation:
    """A bijection of ``{0, ..., degree-1}`` in one-line notation.

    ``images[i]`` is the image of ``i``.  Products compose right to left:
    ``(p * q)[i] == p[q[i]]``.
    """

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(i) for i in self.images)
        n = len(images)
        if sorted(images) != list(range(n)):
            raise MalformedPermutationError(f"{list(self.images)} is not a permutation of 0..{n - 1}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        return cls(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, degree: int, cycles: Iterable[Sequence[int]]) -> Permutation:
        images = list(range(degree))
        for cyc in cycles:
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                if not 0 <= a < degree:
                    raise MalformedPermutationError(f"point {a} outside 0..{degree - 1}")
                images[a] = b
        return cls(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __getitem__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: Permutation) -> Permutation:
        if other.degree != self.degree:
            raise MalformedPermutationError("cannot compose permutations of different degree")
        p = self.images
        return Permutation(tuple(p[j] for j in other.images))

    def inverse(self) -> Permutation:
        inv = [0] * self.degree
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        """Cycle decomposition including fixed points."""
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cyc = []
            i = start
            while not seen[i]:
                seen[i] = True
                cyc.append(i)
                i = self.images[i]
            out.append(tuple(cyc))
        return out

    def __repr__(self):
        return f"Permutation({list(self.images)})"


def _iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class FiniteGroup:
    """A permutation group with every element enumerated.

    Build instances with :func:`group_from_generators`.  Element 0 is the
    identity.  ``word(i)`` returns ``(generator index, parent id)`` such that
    ``elements[i] == generators[gen] * elements[parent]``; the identity has
    ``(-1, -1)``.  This spanning tree is what lets a group action given on
    generators be extended to every element.
    """

    def __init__(self, degree: int, generators: tuple[Permutation, ...],
                 elements: list[Permutation], words: list[tuple[int, int]]):
        self.degree = degree
        self.generators = generators
        self.elements: tuple[Permutation, ...] = tuple(elements)
        self.index: dict[tuple[int, ...], int] = {p.images: i for i, p in enumerate(elements)}
        self._words = tuple(words)
        self._centralizers: dict[int, int] = {}
        self._mul_cache: dict[tuple[int, int], int] = {}

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __repr__(self):
        return f"FiniteGroup(degree={self.degree}, order={self.order})"

    def word(self, i: int) -> tuple[int, int]:
        return self._words[i]

    def id_of(self, p: Permutation | Sequence[int]) -> int:
        key = p.images if isinstance(p, Permutation) else tuple(p)
        try:
            return self.index[key]
        except KeyError:
            raise KeyError(f"{list(key)} is not an element of this group") from None

    def check_id(self, i: int) -> int:
        if not (isinstance(i, int) and 0 <= i < len(self.elements)):
            raise IndexError(f"element id {i!r} out of range 0..{len(self.elements) - 1}")
        return i

    def mul(self, a: int, b: int) -> int:
        key = (a, b)
        r = self._mul_cache.get(key)
        if r is None:
            r = self.index[(self.elements[a] * self.elements[b]).images]
            self._mul_cache[key] = r
        return r

    def inv(self, a: int) -> int:
        return self.index[self.elements[a].inverse().images]

    def conjugate(self, g: int, x: int) -> int:
        """Return the id of ``g x g^-1``."""
        return self.mul(self.mul(g, x), self.inv(g))

    @property
    def full_mask(self) -> int:
        return (1 << self.order) - 1

    def whole(self) -> Subgroup:
        return Subgroup(self, self.full_mask)

    def trivial_subgroup(self) -> Subgroup:
        return Subgroup(self, 1)

    def centralizer_mask(self, g: int) -> int:
        mask = self._centralizers.get(g)
        if mask is None:
            pg = self.elements[g]
            mask = 0
            for h, ph in enumerate(self.elements):
                if (ph * pg).images == (pg * ph).images:
                    mask |= 1 << h
            self._centralizers[g] = mask
        return mask


@dataclass(frozen=True, eq=False)
class Subgroup:
    parent: FiniteGroup
    mask: int

    @property
    def member_ids(self) -> tuple[int, ...]:
        return tuple(_iter_bits(self.mask))

    @property
    def order(self) -> int:
        return self.mask.bit_count()

    def __len__(self):
        return self.order

    def __contains__(self, g: int) -> bool:
        return bool(self.mask >> g & 1)

    def __iter__(self):
        return _iter_bits(self.mask)

    def __eq__(self, other):
        return isinstance(other, Subgroup) and other.parent is self.parent and other.mask == self.mask

    def __hash__(self):
        return hash((id(self.parent), self.mask))

    def __and__(self, other: Subgroup) -> Subgroup:
        return Subgroup(self.parent, self.mask & other.mask)

    def conjugate_by(self, g: int) -> Subgroup:
        """Return ``g H g^-1``."""
        G = self.parent
        mask = 0
        for h in self:
            mask |= 1 << G.conjugate(g, h)
        return Subgroup(G, mask)

    def __repr__(self):
        return f"Subgroup(order={self.order}, members={list(self.member_ids)})"


def group_from_generators(degree: int, generators: Sequence[Permutation | Sequence[int]],
                          max_order: int = DEFAULT_MAX_ORDER) -> FiniteGroup:
    """Enumerate the group generated by ``generators`` acting on ``degree`` points.

    Raises :class:`MalformedPermutationError` for a generator that is not a
    bijection of the right degree and :class:`SizeLimitError` once more than
    ``max_order`` elements have been found.
    """
    gens = []
    for g in generators:
        p = g if isinstance(g, Permutation) else Permutation(tuple(g))
        if p.degree != degree:
            raise MalformedPermutationError(f"generator {list(p.images)} has degree {p.degree}, expected {degree}")
        gens.append(p)
    gens = tuple(gens)

    e = Permutation.identity(degree)
    elements = [e]
    words = [(-1, -1)]
    seen = {e.images}
    layer = [0]
    while layer:
        found: dict[tuple[int, ...], tuple[int, int]] = {}
        for x in layer:
            px = elements[x]
            for gi, g in enumerate(gens):
                y = (g * px).images
                if y not in seen and y not in found:
                    found[y] = (gi, x)
        layer = []
        for y in sorted(found):
            if len(elements) >= max_order:
                raise SizeLimitError(f"group has more than {max_order} elements")
            seen.add(y)
            layer.append(len(elements))
            elements.append(Permutation(y))
            words.append(found[y])
    return FiniteGroup(degree, gens, elements, words)


def centralizer(G: FiniteGroup, g: int) -> Subgroup:
    return Subgroup(G, G.centralizer_mask(G.check_id(g)))


def subgroup_from(G: FiniteGroup, gens: Iterable[int]) -> Subgroup:
    """Closure of the given element ids inside ``G``."""
    gens = [G.check_id(g) for g in gens]
    mask = 1
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = G.mul(g, x)
                if not mask >> y & 1:
                    mask |= 1 << y
                    nxt.append(y)
        frontier = nxt
    return Subgroup(G, mask)


def conjugacy_classes(G: FiniteGroup) -> list[tuple[int, ...]]:
    """Partition of element ids into conjugacy classes, sorted by least member."""
    gen_ids = [G.id_of(g) for g in G.generators]
    gen_inv = [G.inv(s) for s in gen_ids]
    assigned = [False] * G.order
    classes = []
    for start in range(G.order):
        if assigned[start]:
            continue
        assigned[start] = True
        cls = [start]
        stack = [start]
        while stack:
            x = stack.pop()
            for s, si in zip(gen_ids, gen_inv):
                y = G.mul(G.mul(s, x), si)
                if not assigned[y]:
                    assigned[y] = True
                    cls.append(y)
                    stack.append(y)
        classes.append(tuple(sorted(cls)))
    return classes


def _candidates(G: FiniteGroup, within: Subgroup | None) -> int:
    if within is None:
        return G.full_mask
    if within.parent is not G:
        raise ValueError("subgroup belongs to a different group")
    return within.mask


def commuting_tuples(G: FiniteGroup, k: int, within: Subgroup | None = None) -> Iterator[tuple[int, ...]]:
    """Yield the pairwise-commuting k-tuples of ``G`` (or of ``within``).

    Tuples come out in lexicographic order of element ids.  Candidates for
    each further entry are restricted to the running simultaneous
    centralizer, so only commuting tuples are ever visited.
    """
    if k < 0:
        raise ValueError("k must be non-negative")

    def rec(prefix, cand, depth):
        if depth == 0:
            yield tuple(prefix)
            return
        for g in _iter_bits(cand):
            prefix.append(g)
            yield from rec(prefix, cand & G.centralizer_mask(g), depth - 1)
            prefix.pop()

    yield from rec([], _candidates(G, within), k)


def count_commuting_tuples(G: FiniteGroup, k: int, within: Subgroup | None = None) -> int:
    """``|Com(H; k)|`` for ``H = within`` (default ``G``), as an exact integer."""
    if k < 0:
        raise ValueError("k must be non-negative")

    @lru_cache(maxsize=None)
    def rec(cand: int, depth: int) -> int:
        if depth == 0:
            return 1
        if depth == 1:
            return cand.bit_count()
        return sum(rec(cand & G.centralizer_mask(g), depth - 1) for g in _iter_bits(cand))

    return rec(_candidates(G, within), k)


def orbit_count(degree: int, perms: Iterable[Permutation]) -> int:
    """Number of orbits on ``{0..degree-1}`` of the group generated by ``perms``."""
    parent = list(range(degree))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    count = degree
    for p in perms:
        for i, j in enumerate(p.images):
            a, b = find(i), find(j)
            if a != b:
                parent[a] = b
                count -= 1
    return count


# -- standard families ---------------------------------------------------

def trivial_group(degree: int = 1) -> FiniteGroup:
    return group_from_generators(degree, [])


def symmetric_group(n: int) -> FiniteGroup:
    if n <= 1:
        return trivial_group(max(n, 1))
    gens = [Permutation.from_cycles(n, [(0, 1)])]
    if n > 2:
        gens.append(Permutation.from_cycles(n, [tuple(range(n))]))
    return group_from_generators(n, gens)


def alternating_group(n: int) -> FiniteGroup:
    if n <= 2:
        return trivial_group(max(n, 1))
    gens = [Permutation.from_cycles(n, [(0, 1, i)]) for i in range(2, n)]
    return group_from_generators(n, gens)


def cyclic_group(n: int) -> FiniteGroup:
    if n == 1:
        return trivial_group(1)
    return group_from_generators(n, [Permutation.from_cycles(n, [tuple(range(n))])])


def dihedral_group(n: int) -> FiniteGroup:
    """Symmetries of the regular n-gon (order 2n), for n >= 3."""
    rot = Permutation.from_cycles(n, [tuple(range(n))])
    ref = Permutation(tuple((-i) % n for i in range(n)))
    return group_from_generators(n, [rot, ref])


def quaternion_group() -> FiniteGroup:
    # regular representation; points 0..7 stand for 1,i,j,k,-1,-i,-j,-k
    i = Permutation((1, 4, 3, 6, 5, 0, 7, 2))
    j = Permutation((2, 7, 4, 1, 6, 3, 0, 5))
    return group_from_generators(8, [i, j])


def direct_product(G: FiniteGroup, H: FiniteGroup) -> FiniteGroup:
    """``G x H`` acting on the disjoint union of their points."""
    n, m = G.degree, H.degree
    gens = [Permutation(g.images + tuple(range(n, n + m))) for g in G.generators]
    gens += [Permutation(tuple(range(n)) + tuple(n + j for j in h.images)) for h in H.generators]
    return group_from_generators(n + m, gens)
