import itertools
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from equichern.errors import MalformedPermutationError, SizeLimitError
from equichern.groups import (Permutation, centralizer, commuting_tuples, conjugacy_classes,
                              count_commuting_tuples, cyclic_group, group_from_generators, orbit_count,
                              subgroup_from, symmetric_group)


def compose(p, q):
    return tuple(p[i] for i in q)


def brute_commuting_count(elements, k):
    els = [e.images for e in elements]
    return sum(1 for t in itertools.product(els, repeat=k)
               if all(compose(a, b) == compose(b, a) for a, b in itertools.combinations(t, 2)))


class TestGroupFromGenerators:
    def test_s3(self):
        G = group_from_generators(3, [[1, 0, 2], [1, 2, 0]])
        assert G.order == 6

    def test_trivial(self):
        G = group_from_generators(1, [])
        assert G.order == 1
        assert G.elements[0].is_identity()

    def test_cyclic4(self):
        assert group_from_generators(4, [[1, 2, 3, 0]]).order == 4

    def test_identity_first(self, catalogue):
        for _, G in catalogue:
            assert G.elements[0].is_identity()

    def test_malformed(self):
        with pytest.raises(MalformedPermutationError):
            group_from_generators(3, [[0, 0, 1]])
        with pytest.raises(MalformedPermutationError):
            group_from_generators(3, [[1, 0]])

    def test_size_limit(self):
        with pytest.raises(SizeLimitError):
            group_from_generators(5, symmetric_group(5).generators, max_order=100)

    def test_deterministic(self):
        a = symmetric_group(4)
        b = symmetric_group(4)
        assert a.elements == b.elements

    def test_layers_sorted(self):
        # with (01),(012) the first BFS layer is the two generators in lex order
        G = group_from_generators(3, [[1, 2, 0], [1, 0, 2]])
        assert G.elements[1].images == (1, 0, 2)
        assert G.elements[2].images == (1, 2, 0)

    def test_words_reconstruct_elements(self, catalogue):
        for _, G in catalogue:
            for i in range(1, G.order):
                gi, parent = G.word(i)
                assert (G.generators[gi] * G.elements[parent]).images == G.elements[i].images

    def test_closed(self, catalogue):
        for _, G in catalogue[:12]:
            for a in G.elements:
                assert a.inverse().images in G.index
                for b in G.elements:
                    assert (a * b).images in G.index


class TestCentralizer:
    def test_identity(self, s3):
        assert centralizer(s3, 0).order == 6

    def test_s3_transposition(self, s3):
        g = s3.id_of([1, 0, 2])
        brute = sum(1 for h in s3.elements if compose(h.images, (1, 0, 2)) == compose((1, 0, 2), h.images))
        assert brute == 2
        assert centralizer(s3, g).order == 2

    def test_s3_three_cycle(self, s3):
        g = s3.id_of([1, 2, 0])
        assert centralizer(s3, g).order == 3

    def test_bad_id(self, s3):
        with pytest.raises(IndexError):
            centralizer(s3, 6)

    def test_orbit_stabilizer(self, catalogue):
        for _, G in catalogue:
            where = {}
            for cls in conjugacy_classes(G):
                for g in cls:
                    where[g] = len(cls)
            for g in range(G.order):
                assert centralizer(G, g).order * where[g] == G.order


class TestConjugacyClasses:
    def test_abelian(self):
        G = cyclic_group(6)
        assert len(conjugacy_classes(G)) == 6

    def test_s3(self, s3):
        assert [len(c) for c in conjugacy_classes(s3)] == [1, 3, 2]

    def test_identity_class(self, catalogue):
        for _, G in catalogue:
            assert conjugacy_classes(G)[0] == (0,)

    def test_partition(self, catalogue):
        for _, G in catalogue:
            classes = conjugacy_classes(G)
            assert sorted(g for c in classes for g in c) == list(range(G.order))
            assert [c[0] for c in classes] == sorted(c[0] for c in classes)

    def test_matches_brute_conjugation(self, catalogue):
        for _, G in catalogue[:14]:
            brute = set()
            for x in G.elements:
                brute.add(frozenset((g * x * g.inverse()).images for g in G.elements))
            ours = {frozenset(G.elements[i].images for i in c) for c in conjugacy_classes(G)}
            assert ours == brute


class TestCommutingTuples:
    def test_k0(self, s3):
        assert list(commuting_tuples(s3, 0)) == [()]
        assert count_commuting_tuples(s3, 0) == 1

    def test_k1(self, catalogue):
        for _, G in catalogue:
            assert count_commuting_tuples(G, 1) == G.order

    def test_s3_pairs(self, s3):
        assert brute_commuting_count(s3.elements, 2) == 18
        assert count_commuting_tuples(s3, 2) == 18
        assert len(list(commuting_tuples(s3, 2))) == 18

    def test_abelian_pairs(self):
        G = cyclic_group(5)
        assert count_commuting_tuples(G, 2) == 25

    def test_lexicographic(self, s3):
        tuples = list(commuting_tuples(s3, 3))
        assert tuples == sorted(tuples)
        assert len(tuples) == count_commuting_tuples(s3, 3)

    def test_within(self, s3):
        H = subgroup_from(s3, [s3.id_of([1, 0, 2])])
        tuples = list(commuting_tuples(s3, 2, within=H))
        assert len(tuples) == 4
        assert all(g in H for t in tuples for g in t)

    def test_pairs_class_equation(self, catalogue):
        for _, G in catalogue:
            assert count_commuting_tuples(G, 2) == G.order * len(conjugacy_classes(G))
            assert brute_commuting_count(G.elements, 2) == G.order * len(conjugacy_classes(G))

    def test_recursive_count(self, catalogue):
        for _, G in catalogue:
            if G.order > 12:
                continue
            for k in range(1, 4):
                via_prefix = 0
                for t in commuting_tuples(G, k - 1):
                    mask = G.full_mask
                    for g in t:
                        mask &= G.centralizer_mask(g)
                    via_prefix += mask.bit_count()
                assert count_commuting_tuples(G, k) == via_prefix
                assert count_commuting_tuples(G, k) == brute_commuting_count(G.elements, k)

    def test_deterministic(self, s3):
        assert list(commuting_tuples(s3, 3)) == list(commuting_tuples(s3, 3))


class TestSubgroupFrom:
    def test_empty(self, s3):
        assert subgroup_from(s3, []).order == 1

    def test_all(self, s3):
        assert subgroup_from(s3, range(6)).order == 6

    def test_transposition(self, s3):
        assert subgroup_from(s3, [s3.id_of([0, 2, 1])]).order == 2

    def test_bad_id(self, s3):
        with pytest.raises(IndexError):
            subgroup_from(s3, [17])

    def test_closed(self, catalogue):
        for _, G in catalogue[:14]:
            H = subgroup_from(G, [G.order - 1, G.order // 2])
            for a in H:
                assert G.inv(a) in H
                for b in H:
                    assert G.mul(a, b) in H


perms = st.integers(min_value=1, max_value=6).flatmap(
    lambda n: st.lists(st.permutations(list(range(n))), min_size=0, max_size=3).map(lambda gs: (n, gs)))


@settings(max_examples=40, deadline=None)
@given(perms)
def test_random_groups(data):
    n, gens = data
    G = group_from_generators(n, gens)
    assert G.order == len(set(p.images for p in G.elements))
    for g in gens:
        assert tuple(g) in G.index
    assert math.factorial(n) % G.order == 0
    assert count_commuting_tuples(G, 2) == G.order * len(conjugacy_classes(G))


def test_orbit_count():
    assert orbit_count(4, [Permutation((1, 0, 3, 2))]) == 2
    assert orbit_count(4, []) == 4
    assert orbit_count(4, [Permutation((1, 2, 3, 0))]) == 1
