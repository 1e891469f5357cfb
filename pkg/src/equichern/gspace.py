"""Finite models of G-varieties.

A :class:`GSpace` is a list of strata ("atoms"), each carrying its
compactly supported Euler characteristic and the subgroup that fixes it.
Every point of an atom has exactly that subgroup as stabilizer and that
subgroup is also the setwise stabilizer, so fixed-point sets of any set of
group elements are unions of atoms and all Euler characteristics become
finite sums.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence, Union

from .errors import GroupMismatchError
from .groups import FiniteGroup, Subgroup


@dataclass(frozen=True)
class Cell:
    """Atom of a space without group action."""

    id: str
    chi: int


@dataclass(frozen=True)
class Atom:
    id: str
    chi: int
    isotropy: Subgroup


@dataclass(frozen=True, eq=False)
class Space:
    atoms: tuple[Cell, ...]
    name: str = "space"

    def __post_init__(self):
        object.__setattr__(self, "atoms", tuple(self.atoms))
        ids = [a.id for a in self.atoms]
        if len(set(ids)) != len(ids):
            raise ValueError("atom ids must be unique")

    def __len__(self):
        return len(self.atoms)

    def atom_index(self, atom_id: str) -> int:
        for i, a in enumerate(self.atoms):
            if a.id == atom_id:
                return i
        raise KeyError(f"unknown atom id {atom_id!r}")

    def __eq__(self, other):
        return isinstance(other, Space) and self.atoms == other.atoms

    def __hash__(self):
        return hash(self.atoms)


class GSpace:
    """Atoms plus an action of a finite group permuting them.

    ``action`` maps a generator index of ``group`` to the permutation of atom
    indices it induces; generators left out act trivially.  The action of
    an arbitrary element is obtained along the group's spanning tree, so it
    is a homomorphism exactly when :func:`validate` says so.
    """

    def __init__(self, group: FiniteGroup, atoms: Sequence[Atom],
                 action: Mapping[int, Sequence[int]] | None = None, name: str = "space"):
        self.group = group
        self.atoms: tuple[Atom, ...] = tuple(atoms)
        self.name = name
        n = len(self.atoms)
        action = dict(action or {})
        self.action: dict[int, tuple[int, ...]] = {
            gi: tuple(action.get(gi, range(n))) for gi in range(len(group.generators))
        }
        self._element_actions: list[tuple[int, ...]] | None = None
        self.iso_masks = tuple(a.isotropy.mask for a in self.atoms)

    def __len__(self):
        return len(self.atoms)

    def __repr__(self):
        return f"GSpace(name={self.name!r}, |G|={self.group.order}, atoms={len(self.atoms)})"

    def __eq__(self, other):
        if not isinstance(other, GSpace):
            return NotImplemented
        return (self.group.elements == other.group.elements
                and self.group.generators == other.group.generators
                and [(a.id, a.chi, a.isotropy.mask) for a in self.atoms]
                == [(a.id, a.chi, a.isotropy.mask) for a in other.atoms]
                and self.action == other.action)

    __hash__ = None

    def atom_index(self, atom_id: str) -> int:
        for i, a in enumerate(self.atoms):
            if a.id == atom_id:
                return i
        raise KeyError(f"unknown atom id {atom_id!r}")

    def element_action(self, g: int) -> tuple[int, ...]:
        """Permutation of atom indices induced by group element ``g``."""
        if self._element_actions is None:
            G = self.group
            acts: list[tuple[int, ...]] = [tuple(range(len(self.atoms)))]
            for i in range(1, G.order):
                gi, parent = G.word(i)
                gen, prev = self.action[gi], acts[parent]
                acts.append(tuple(gen[a] for a in prev))
            self._element_actions = acts
        return self._element_actions[self.group.check_id(g)]

    def orbits(self) -> list[tuple[int, ...]]:
        """Atom-index orbits, each sorted, listed by least member."""
        seen = [False] * len(self.atoms)
        out = []
        gens = list(self.action.values())
        for start in range(len(self.atoms)):
            if seen[start]:
                continue
            seen[start] = True
            orb = [start]
            stack = [start]
            while stack:
                a = stack.pop()
                for perm in gens:
                    b = perm[a]
                    if not seen[b]:
                        seen[b] = True
                        orb.append(b)
                        stack.append(b)
            out.append(tuple(sorted(orb)))
        return out

    def orbit_of_atom(self) -> list[int]:
        """For each atom index, the index of its orbit in :meth:`orbits`."""
        where = [0] * len(self.atoms)
        for k, orb in enumerate(self.orbits()):
            for a in orb:
                where[a] = k
        return where


AnySpace = Union[Space, GSpace]


@dataclass
class ValidationReport:
    ok: bool
    invariant: str | None = None
    message: str = ""
    witness: dict = field(default_factory=dict)

    def __bool__(self):
        return self.ok

    def to_json(self) -> dict:
        out = {"ok": self.ok}
        if not self.ok:
            out.update(invariant=self.invariant, message=self.message, witness=self.witness)
        return out


def validate(X: GSpace) -> ValidationReport:
    """Check every GSpace invariant and report the first violation.

    The homomorphism check compares ``act(s*x)`` with ``act(s)∘act(x)`` for
    every generator ``s`` and every element ``x``; by induction on word
    length this is equivalent to checking all pairs.
    """
    G = X.group
    n = len(X.atoms)
    ids = [a.id for a in X.atoms]
    if len(set(ids)) != n:
        dup = next(i for i in ids if ids.count(i) > 1)
        return ValidationReport(False, "unique-ids", f"atom id {dup!r} repeated", {"atom": dup})
    for a in X.atoms:
        if a.isotropy.parent is not G:
            return ValidationReport(False, "isotropy-parent", f"isotropy of {a.id!r} is not a subgroup of the space's group",
                                    {"atom": a.id})
    for gi, perm in X.action.items():
        if sorted(perm) != list(range(n)):
            return ValidationReport(False, "action-permutation",
                                    f"generator {gi} does not permute the {n} atoms", {"generator": gi, "images": list(perm)})

    gen_ids = [G.id_of(s) for s in G.generators]
    for gi, s in enumerate(gen_ids):
        act_s = X.action[gi]
        for x in range(G.order):
            act_x = X.element_action(x)
            lhs = X.element_action(G.mul(s, x))
            if any(lhs[a] != act_s[act_x[a]] for a in range(n)):
                return ValidationReport(False, "homomorphism", f"action of generator {gi} times element {x} is not the composite",
                                        {"generator": gi, "element": x})

    for g in range(G.order):
        act = X.element_action(g)
        for a, atom in enumerate(X.atoms):
            fixes = act[a] == a
            if fixes != (g in atom.isotropy):
                return ValidationReport(False, "isotropy-exactness",
                                        f"element {g} {'fixes' if fixes else 'moves'} atom {atom.id!r} "
                                        f"but is {'not ' if fixes else ''}in its isotropy",
                                        {"element": g, "atom": atom.id})

    for g in range(G.order):
        act = X.element_action(g)
        for a, atom in enumerate(X.atoms):
            target = X.atoms[act[a]]
            if target.isotropy.mask != atom.isotropy.conjugate_by(g).mask:
                return ValidationReport(False, "isotropy-equivariance",
                                        f"isotropy of {target.id!r} is not the conjugate of that of {atom.id!r} by element {g}",
                                        {"element": g, "atom": atom.id, "image": target.id})
    return ValidationReport(True)


def fixed_atoms(X: GSpace, elements: Iterable[int]) -> list[int]:
    """Indices of atoms fixed by every element of the tuple."""
    mask = 0
    for g in elements:
        mask |= 1 << X.group.check_id(g)
    return [i for i, iso in enumerate(X.iso_masks) if iso & mask == mask]


def fixed_chi(X: GSpace, elements: Sequence[int]) -> int:
    """Euler characteristic of the simultaneous fixed-point set of ``elements``."""
    return sum(X.atoms[i].chi for i in fixed_atoms(X, elements))


def quotient(X: GSpace) -> Space:
    """Orbit space; each orbit is named after its least-index atom."""
    cells = [Cell(X.atoms[orb[0]].id, X.atoms[orb[0]].chi) for orb in X.orbits()]
    return Space(tuple(cells), name=f"{X.name}/G")


def product(X: GSpace, Y: GSpace) -> GSpace:
    """Cartesian product with the diagonal action."""
    if X.group is not Y.group:
        raise GroupMismatchError("product needs both spaces over the same group object")
    m = len(Y.atoms)
    atoms = [Atom(f"({a.id},{b.id})", a.chi * b.chi, a.isotropy & b.isotropy)
             for a in X.atoms for b in Y.atoms]
    action = {gi: [X.action[gi][i] * m + Y.action[gi][j] for i in range(len(X.atoms)) for j in range(m)]
              for gi in X.action}
    return GSpace(X.group, atoms, action, name=f"{X.name}x{Y.name}")


def disjoint_union(X: GSpace, Y: GSpace) -> GSpace:
    if X.group is not Y.group:
        raise GroupMismatchError("disjoint union needs both spaces over the same group object")
    n = len(X.atoms)
    atoms = [Atom(f"L.{a.id}", a.chi, a.isotropy) for a in X.atoms]
    atoms += [Atom(f"R.{b.id}", b.chi, b.isotropy) for b in Y.atoms]
    action = {gi: list(X.action[gi]) + [n + j for j in Y.action[gi]] for gi in X.action}
    return GSpace(X.group, atoms, action, name=f"{X.name}+{Y.name}")


def euler(S: AnySpace) -> int:
    return sum(a.chi for a in S.atoms)
