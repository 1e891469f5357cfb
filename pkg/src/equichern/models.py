"""Ready-made G-spaces and groups: points, homogeneous orbits, the rotated
projective line, and random valid models for property tests."""

from __future__ import annotations

import random
from typing import Sequence

from .groups import (FiniteGroup, Subgroup, alternating_group, cyclic_group, dihedral_group,
                     direct_product, quaternion_group, subgroup_from, symmetric_group, trivial_group)
from .constructible import CellMap
from .gspace import Atom, Cell, GSpace, Space


def point(G: FiniteGroup, chi: int = 1, name: str = "pt") -> GSpace:
    """A single atom fixed by all of ``G``."""
    return GSpace(G, [Atom(name, chi, G.whole())], name=name)


def orbit_atoms(G: FiniteGroup, H: Subgroup, chi: int, prefix: str = "o") -> tuple[list[Atom], dict[int, list[int]]]:
    """Atoms of the homogeneous space ``G/H`` (one atom per coset) and the
    left-multiplication action on them, indexed by generator."""
    coset_of = {}
    reps = []
    for g in range(G.order):
        if g in coset_of:
            continue
        k = len(reps)
        reps.append(g)
        for h in H:
            coset_of[G.mul(g, h)] = k
    atoms = [Atom(f"{prefix}{k}", chi, H.conjugate_by(g)) for k, g in enumerate(reps)]
    gen_ids = [G.id_of(s) for s in G.generators]
    action = {gi: [coset_of[G.mul(s, g)] for g in reps] for gi, s in enumerate(gen_ids)}
    return atoms, action


def assemble(G: FiniteGroup, orbits: Sequence[tuple[Subgroup, int]], name: str = "X") -> GSpace:
    """Disjoint union of homogeneous orbits ``G/H`` with Euler characteristic ``chi`` per atom."""
    atoms: list[Atom] = []
    action: dict[int, list[int]] = {gi: [] for gi in range(len(G.generators))}
    for k, (H, chi) in enumerate(orbits):
        offset = len(atoms)
        new, act = orbit_atoms(G, H, chi, prefix=f"o{k}.")
        atoms.extend(new)
        for gi, images in act.items():
            action[gi].extend(offset + i for i in images)
    return GSpace(G, atoms, action, name=name)


def p1_rotation(n: int = 4) -> tuple[FiniteGroup, GSpace]:
    """``Z/n`` rotating the projective line about the poles.

    Atoms: the two poles (chi 1, fixed by everything) and ``n`` half-open
    sectors ``C*.k`` of the punctured line (chi 0 each), permuted freely.
    C* as a single atom would be mapped to itself by every rotation while
    having trivial isotropy, which isotropy-constant atoms do not allow.
    """
    G = cyclic_group(n)
    sectors, act = orbit_atoms(G, G.trivial_subgroup(), 0, prefix="C*.")
    atoms = [Atom("0", 1, G.whole()), Atom("inf", 1, G.whole())] + sectors
    action = {gi: [0, 1] + [2 + i for i in images] for gi, images in act.items()}
    return G, GSpace(G, atoms, action, name="p1rot")


def random_subgroup(G: FiniteGroup, rng: random.Random, max_gens: int = 2) -> Subgroup:
    gens = [rng.randrange(G.order) for _ in range(rng.randint(0, max_gens))]
    return subgroup_from(G, gens)


def random_gspace(G: FiniteGroup, rng: random.Random, max_atoms: int = 12,
                  chi_range: tuple[int, int] = (-3, 3), name: str = "X") -> GSpace:
    """A random valid model: a disjoint union of orbits ``G/H`` with random
    stabilizers and atom Euler characteristics, at most ``max_atoms`` atoms."""
    orbits = []
    budget = max_atoms
    for _ in range(rng.randint(1, 4)):
        for _attempt in range(6):
            H = random_subgroup(G, rng)
            if G.order // H.order <= budget:
                break
        else:
            H = G.whole()
        if G.order // H.order > budget:
            break
        budget -= G.order // H.order
        orbits.append((H, rng.randint(*chi_range)))
        if budget == 0:
            break
    return assemble(G, orbits, name=name)


def small_groups() -> list[tuple[str, FiniteGroup]]:
    """A catalogue of permutation groups of order at most 24."""
    C = cyclic_group
    return [
        ("C1", trivial_group()),
        ("C2", C(2)), ("C3", C(3)), ("C4", C(4)), ("C2xC2", direct_product(C(2), C(2))),
        ("C5", C(5)), ("C6", C(6)), ("S3", symmetric_group(3)), ("C7", C(7)),
        ("C8", C(8)), ("C2xC4", direct_product(C(2), C(4))),
        ("C2xC2xC2", direct_product(direct_product(C(2), C(2)), C(2))),
        ("D4", dihedral_group(4)), ("Q8", quaternion_group()), ("C9", C(9)),
        ("C3xC3", direct_product(C(3), C(3))), ("D5", dihedral_group(5)), ("C10", C(10)),
        ("A4", alternating_group(4)), ("D6", dihedral_group(6)), ("C12", C(12)),
        ("C2xD4", direct_product(C(2), dihedral_group(4))), ("C3xS3", direct_product(C(3), symmetric_group(3))),
        ("C2xS3", direct_product(C(2), symmetric_group(3))), ("S4", symmetric_group(4)),
        ("C2xA4", direct_product(C(2), alternating_group(4))), ("D12", dihedral_group(12)),
        ("C3xQ8", direct_product(C(3), quaternion_group())), ("C24", C(24)),
    ]


def random_space(rng: random.Random, n_atoms: int, chi_range: tuple[int, int] = (-3, 3), name: str = "S") -> Space:
    return Space(tuple(Cell(f"{name}{i}", rng.randint(*chi_range)) for i in range(n_atoms)), name=name)


def random_fibration(rng: random.Random, target: Space, n_atoms: int,
                     fiber_range: tuple[int, int] = (-2, 3), name: str = "S") -> CellMap:
    """A random map onto ``target`` from a new space whose atoms are built as
    fibrations ``chi(A) = fiber_chi(A) * chi(f(A))``."""
    image = [rng.randrange(len(target.atoms)) for _ in range(n_atoms)]
    fiber = [rng.randint(*fiber_range) for _ in range(n_atoms)]
    source = Space(tuple(Cell(f"{name}{i}", fiber[i] * target.atoms[b].chi) for i, b in enumerate(image)), name=name)
    return CellMap(source, target, tuple(image), tuple(fiber))
