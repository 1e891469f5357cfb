import random
from fractions import Fraction

import pytest

from equichern.errors import GroupMismatchError
from equichern.groups import cyclic_group, subgroup_from, symmetric_group
from equichern.gspace import (Atom, GSpace, disjoint_union, euler, fixed_atoms, fixed_chi, product, quotient,
                              validate)
from equichern.models import assemble, point, random_gspace


def free_orbit(G, chi=1):
    return assemble(G, [(G.trivial_subgroup(), chi)], name="free")


class TestValidate:
    def test_trivial_action(self, s3):
        X = GSpace(s3, [Atom("a", 2, s3.whole()), Atom("b", -1, s3.whole())])
        assert validate(X).ok

    def test_exactness_violation(self, z4):
        X = GSpace(z4, [Atom("a", 1, z4.trivial_subgroup())])
        report = validate(X)
        assert not report.ok
        assert report.invariant == "isotropy-exactness"
        assert report.witness["atom"] == "a"

    def test_free_orbit(self, s3):
        X = free_orbit(s3)
        assert len(X) == 6
        assert validate(X).ok

    def test_not_a_permutation(self, z4):
        X = GSpace(z4, [Atom("a", 1, z4.whole()), Atom("b", 1, z4.whole())], {0: [0, 0]})
        assert validate(X).invariant == "action-permutation"

    def test_not_a_homomorphism(self, z4):
        # generator of order 4 acting as a 3-cycle: 4 does not divide 3
        H = z4.trivial_subgroup()
        X = GSpace(z4, [Atom(f"a{i}", 0, H) for i in range(3)], {0: [1, 2, 0]})
        assert validate(X).invariant == "homomorphism"

    def test_equivariance_violation(self, s3):
        # an orbit of size 3 whose atoms all claim the same order-2 isotropy
        t = s3.id_of([1, 0, 2])
        good = assemble(s3, [(subgroup_from(s3, [t]), 1)])
        bad = GSpace(s3, [Atom(a.id, a.chi, good.atoms[0].isotropy) for a in good.atoms], good.action)
        report = validate(bad)
        assert not report.ok
        assert report.invariant in {"isotropy-exactness", "isotropy-equivariance"}

    def test_duplicate_ids(self, s3):
        X = GSpace(s3, [Atom("a", 1, s3.whole()), Atom("a", 1, s3.whole())])
        assert validate(X).invariant == "unique-ids"

    def test_random_models_valid(self, catalogue, rng):
        for _, G in catalogue:
            for _ in range(3):
                assert validate(random_gspace(G, rng)).ok


class TestFixedChi:
    def test_empty_tuple(self, p1rot):
        G, X = p1rot
        assert fixed_chi(X, []) == euler(X) == 2

    def test_rotation(self, p1rot):
        G, X = p1rot
        for g in range(1, G.order):
            assert fixed_chi(X, [g]) == 2

    def test_free(self, s3):
        X = free_orbit(s3, chi=3)
        assert all(fixed_chi(X, [g]) == 0 for g in range(1, 6))
        assert fixed_chi(X, [0]) == 18

    def test_bad_id(self, p1rot):
        with pytest.raises(IndexError):
            fixed_chi(p1rot[1], [9])

    def test_support_shrinks(self, catalogue, rng):
        for _, G in catalogue[::3]:
            X = random_gspace(G, rng)
            t = []
            prev = set(range(len(X)))
            for _ in range(3):
                t.append(rng.randrange(G.order))
                cur = set(fixed_atoms(X, t))
                assert cur <= prev
                prev = cur


class TestQuotient:
    def test_trivial_action(self, s3):
        X = GSpace(s3, [Atom("a", 2, s3.whole()), Atom("b", -1, s3.whole())])
        Q = quotient(X)
        assert [(c.id, c.chi) for c in Q.atoms] == [("a", 2), ("b", -1)]

    def test_free_swap(self):
        G = cyclic_group(2)
        X = free_orbit(G)
        Q = quotient(X)
        assert len(Q) == 1 and euler(Q) == 1

    def test_p1(self, p1rot):
        Q = quotient(p1rot[1])
        assert [c.chi for c in Q.atoms] == [1, 1, 0]
        assert euler(Q) == 2

    def test_representative_minimal(self, s3):
        X = free_orbit(s3)
        assert quotient(X).atoms[0].id == X.atoms[0].id

    def test_with_point(self, catalogue, rng):
        for _, G in catalogue[::4]:
            X = random_gspace(G, rng)
            qa = quotient(X)
            qb = quotient(product(X, point(G)))
            assert [c.chi for c in qa.atoms] == [c.chi for c in qb.atoms]


class TestProduct:
    def test_unit(self, p1rot):
        G, X = p1rot
        XP = product(X, point(G))
        assert [a.chi for a in XP.atoms] == [a.chi for a in X.atoms]
        assert [a.isotropy for a in XP.atoms] == [a.isotropy for a in X.atoms]

    def test_multiplicative(self, catalogue, rng):
        for _, G in catalogue[::3]:
            X = random_gspace(G, rng, max_atoms=6)
            Y = random_gspace(G, rng, max_atoms=6)
            XY = product(X, Y)
            assert validate(XY).ok
            assert euler(XY) == euler(X) * euler(Y)
            for g in range(G.order):
                assert fixed_chi(XY, [g]) == fixed_chi(X, [g]) * fixed_chi(Y, [g])

    def test_group_mismatch(self):
        X = point(cyclic_group(2))
        Y = point(cyclic_group(2))
        with pytest.raises(GroupMismatchError):
            product(X, Y)


class TestEuler:
    def test_p1(self, p1rot):
        assert euler(p1rot[1]) == 2

    def test_empty(self, s3):
        assert euler(GSpace(s3, [])) == 0

    def test_additive(self, catalogue, rng):
        for _, G in catalogue[::5]:
            X, Y = random_gspace(G, rng), random_gspace(G, rng)
            U = disjoint_union(X, Y)
            assert validate(U).ok
            assert euler(U) == euler(X) + euler(Y)


def test_burnside(catalogue):
    rng = random.Random(7)
    for _, G in catalogue:
        for _ in range(4):
            X = random_gspace(G, rng)
            lhs = Fraction(sum(fixed_chi(X, [g]) for g in range(G.order)), G.order)
            assert lhs == euler(quotient(X))


def test_element_action_homomorphism():
    G = symmetric_group(4)
    X = random_gspace(G, random.Random(3))
    for a in range(0, G.order, 5):
        for b in range(0, G.order, 7):
            ab = X.element_action(G.mul(a, b))
            pa, pb = X.element_action(a), X.element_action(b)
            assert ab == tuple(pa[pb[i]] for i in range(len(X)))
