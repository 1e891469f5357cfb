import random
from fractions import Fraction

import pytest

from equichern.constructible import (CellMap, ConstructibleFunction, compose_maps, cross, equivariant_function,
                                     identity_map, indicator, integral, map_to_point, point_space, projections,
                                     pullback, pushforward, quotient_map)
from equichern.errors import InconsistentMapError, SpaceMismatchError
from equichern.gspace import euler, product, quotient
from equichern.models import random_fibration, random_gspace, random_space


def random_function(rng, space):
    return ConstructibleFunction(space, [Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in space.atoms])


class TestIndicatorIntegral:
    def test_indicator_p1(self, p1rot):
        X = p1rot[1]
        one = indicator(X, [a.id for a in X.atoms])
        assert one.values == (1,) * 6
        assert integral(one) == 2

    def test_empty_indicator(self, p1rot):
        X = p1rot[1]
        assert indicator(X, []) == ConstructibleFunction.zero(X)
        assert integral(indicator(X, [])) == 0

    def test_basis_vector(self, p1rot):
        X = p1rot[1]
        assert indicator(X, ["inf"]).values == (0, 1, 0, 0, 0, 0)
        assert integral(3 * indicator(X, ["0"])) == 3

    def test_unknown_atom(self, p1rot):
        with pytest.raises(KeyError):
            indicator(p1rot[1], ["nowhere"])


class TestPushforward:
    def test_to_point_is_integral(self, rng):
        S = random_space(rng, 6)
        a = random_function(rng, S)
        f = map_to_point(S)
        assert pushforward(f, a).values == (integral(a),)

    def test_identity(self, rng):
        S = random_space(rng, 5)
        a = random_function(rng, S)
        assert pushforward(identity_map(S), a) == a

    def test_quotient_of_p1(self, p1rot):
        X = p1rot[1]
        pi = quotient_map(X)
        out = pushforward(pi, ConstructibleFunction.constant(X))
        assert out["C*.0"] == 4
        assert out.values == (1, 1, 4)

    def test_space_mismatch(self, rng):
        S, T = random_space(rng, 3, name="S"), random_space(rng, 4, name="T")
        with pytest.raises(SpaceMismatchError):
            pushforward(identity_map(S), ConstructibleFunction.zero(T))

    def test_inconsistent_fiber(self):
        S = random_space(random.Random(0), 1, chi_range=(2, 2))
        T = point_space()
        with pytest.raises(InconsistentMapError):
            CellMap(S, T, (0,), (3,))

    def test_integral_preserved(self, rng):
        for _ in range(50):
            T = random_space(rng, rng.randint(1, 5), name="T")
            f = random_fibration(rng, T, rng.randint(1, 8))
            a = random_function(rng, f.source)
            assert integral(pushforward(f, a)) == integral(a)

    def test_linear(self, rng):
        T = random_space(rng, 4, name="T")
        f = random_fibration(rng, T, 7)
        a, b = random_function(rng, f.source), random_function(rng, f.source)
        c = Fraction(3, 7)
        assert pushforward(f, a + c * b) == pushforward(f, a) + c * pushforward(f, b)

    def test_equivariance_preserved(self, catalogue, rng):
        for _, G in catalogue[::4]:
            X = random_gspace(G, rng)
            Y = random_gspace(G, rng)
            XY = product(X, Y)
            p1, _ = projections(X, Y, XY)
            assert p1.is_equivariant()
            vals = [rng.randint(-3, 3) for _ in XY.orbits()]
            a = equivariant_function(XY, vals)
            assert a.is_invariant()
            assert pushforward(p1, a).is_invariant()


class TestPullback:
    def test_of_one(self, rng):
        T = random_space(rng, 3, name="T")
        f = random_fibration(rng, T, 6)
        assert pullback(f, ConstructibleFunction.constant(T)) == ConstructibleFunction.constant(f.source)

    def test_identity(self, rng):
        S = random_space(rng, 4)
        b = random_function(rng, S)
        assert pullback(identity_map(S), b) == b

    def test_basis_vector(self, rng):
        T = random_space(rng, 3, name="T")
        f = random_fibration(rng, T, 8)
        pre = [a.id for a, j in zip(f.source.atoms, f.image) if j == 1]
        assert pullback(f, indicator(T, [T.atoms[1].id])) == indicator(f.source, pre)

    def test_linear(self, rng):
        T = random_space(rng, 3, name="T")
        f = random_fibration(rng, T, 5)
        a, b = random_function(rng, T), random_function(rng, T)
        assert pullback(f, a - 2 * b) == pullback(f, a) - 2 * pullback(f, b)


class TestCross:
    def test_ones(self, catalogue, rng):
        G = catalogue[7][1]
        X, Y = random_gspace(G, rng), random_gspace(G, rng)
        XY = product(X, Y)
        assert cross(ConstructibleFunction.constant(X), ConstructibleFunction.constant(Y), XY) \
            == ConstructibleFunction.constant(XY)

    def test_fubini(self, rng):
        for _ in range(30):
            S, T = random_space(rng, rng.randint(1, 5), name="S"), random_space(rng, rng.randint(1, 5), name="T")
            a, b = random_function(rng, S), random_function(rng, T)
            assert integral(cross(a, b)) == integral(a) * integral(b)

    def test_zero(self, rng):
        S, T = random_space(rng, 3, name="S"), random_space(rng, 2, name="T")
        assert cross(ConstructibleFunction.zero(S), random_function(rng, T)).values == (0,) * 6

    def test_bilinear(self, rng):
        S, T = random_space(rng, 3, name="S"), random_space(rng, 2, name="T")
        a1, a2, b = random_function(rng, S), random_function(rng, S), random_function(rng, T)
        XY = cross(a1, b).space
        assert cross(a1 + a2, b, XY) == cross(a1, b, XY) + cross(a2, b, XY)


class TestCompose:
    def test_identity_left(self, rng):
        T = random_space(rng, 3, name="T")
        f = random_fibration(rng, T, 5)
        assert compose_maps(identity_map(T), f) == f

    def test_to_point(self, rng):
        T = random_space(rng, 3, name="T")
        f = random_fibration(rng, T, 5)
        a = random_function(rng, f.source)
        g = compose_maps(map_to_point(T), f)
        assert pushforward(g, a).values == (integral(a),)

    def test_functorial_and_associative(self, rng):
        for _ in range(40):
            W = random_space(rng, rng.randint(1, 3), name="W")
            h = random_fibration(rng, W, rng.randint(1, 5), name="Z")
            f = random_fibration(rng, h.source, rng.randint(1, 6), name="Y")
            g = random_fibration(rng, f.source, rng.randint(1, 8), name="X")
            a = random_function(rng, g.source)
            assert pushforward(compose_maps(f, g), a) == pushforward(f, pushforward(g, a))
            assert compose_maps(h, compose_maps(f, g)) == compose_maps(compose_maps(h, f), g)

    def test_mismatch(self, rng):
        S, T = random_space(rng, 3, name="S"), random_space(rng, 4, name="T")
        with pytest.raises(SpaceMismatchError):
            compose_maps(identity_map(S), identity_map(T))


def test_quotient_then_point_is_integral(catalogue, rng):
    for _, G in catalogue[::3]:
        X = random_gspace(G, rng)
        pi = quotient_map(X)
        a = equivariant_function(X, [rng.randint(-2, 2) for _ in X.orbits()])
        total = compose_maps(map_to_point(pi.target), pi)
        assert pushforward(total, a).values == (integral(a),)
        assert integral(pushforward(pi, ConstructibleFunction.constant(X))) == euler(X)
        assert euler(pi.target) == euler(quotient(X))
