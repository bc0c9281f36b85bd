"""Tests for permutations and the stabilizer-chain group engine."""

import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quandles.perm import (
    BoundExceededError,
    DegreeMismatchError,
    NotAMemberError,
    PermGroup,
    Permutation,
    compose,
    conjugate,
)


def cyc(n, *cycles):
    return Permutation.from_cycles(n, cycles)


def symmetric(n):
    if n == 1:
        return PermGroup.trivial(1)
    return PermGroup([cyc(n, (1, 2)), cyc(n, tuple(range(1, n + 1)))])


perms = st.integers(1, 8).flatmap(
    lambda n: st.permutations(list(range(1, n + 1))))


class TestPermutation:
    def test_identity_and_images(self):
        e = Permutation.identity(4)
        assert e.images == (1, 2, 3, 4)
        assert e.is_identity
        assert e(3) == 3

    def test_rejects_non_bijection(self):
        with pytest.raises(ValueError):
            Permutation([1, 1, 3])
        with pytest.raises(ValueError):
            Permutation([0, 1])

    def test_compose_left_to_right(self):
        # image of x under p*q is (x^p)^q; (1 2) then (2 3) sends 1 to 3
        p = cyc(3, (1, 2))
        q = cyc(3, (2, 3))
        r = compose(p, q)
        assert r.images == (3, 1, 2)
        assert r == cyc(3, (1, 3, 2))
        for x in (1, 2, 3):
            assert r(x) == q(p(x))

    def test_compose_identity_and_inverse(self):
        p = cyc(5, (1, 4, 2))
        assert p * Permutation.identity(5) == p
        assert (p * p.inverse()).is_identity

    def test_compose_degree_mismatch(self):
        with pytest.raises(DegreeMismatchError):
            compose(cyc(3, (1, 2)), cyc(4, (1, 2)))

    def test_conjugate(self):
        assert conjugate(cyc(3, (1, 2)), cyc(3, (1, 3))) == cyc(3, (2, 3))
        p = cyc(4, (1, 2, 3))
        assert conjugate(p, Permutation.identity(4)) == p
        assert conjugate(Permutation.identity(4), p).is_identity

    def test_conjugate_preserves_cycle_type(self):
        rng = random.Random(7)
        for _ in range(50):
            imgs = list(range(1, 7))
            rng.shuffle(imgs)
            p = Permutation(imgs)
            rng.shuffle(imgs)
            g = Permutation(imgs)
            assert p.conj(g).cycle_type() == p.cycle_type()

    def test_pow_and_order(self):
        c = cyc(6, (1, 2, 3, 4, 5, 6))
        assert (c ** 6).is_identity
        assert c ** -1 == c.inverse()
        assert c.order() == 6
        assert cyc(6, (1, 2), (3, 4, 5)).order() == 6

    def test_cycle_type_includes_fixed_points(self):
        assert cyc(5, (1, 2)).cycle_type() == (2, 1, 1, 1)

    def test_text_round_trip(self):
        p = cyc(4, (1, 2), (3, 4))
        assert str(p) == "2 1 4 3"
        assert Permutation.parse("2 1 4 3") == p
        assert Permutation.parse("(1,2)(3,4)", degree=4) == p
        assert Permutation.parse("(1 2)", degree=3) == cyc(3, (1, 2))

    def test_parse_cycles_needs_degree(self):
        with pytest.raises(ValueError):
            Permutation.parse("(1,2)")

    @given(perms)
    def test_inverse_involutive(self, imgs):
        p = Permutation(imgs)
        assert p.inverse().inverse() == p
        assert (p * p.inverse()).is_identity

    @given(st.integers(2, 7).flatmap(lambda n: st.tuples(
        st.permutations(list(range(1, n + 1))),
        st.permutations(list(range(1, n + 1))),
        st.integers(1, n))))
    def test_composition_convention_pointwise(self, data):
        pi, qi, x = data
        p, q = Permutation(pi), Permutation(qi)
        assert (p * q)(x) == q(p(x))

    @given(st.integers(2, 7).flatmap(lambda n: st.tuples(
        st.permutations(list(range(1, n + 1))),
        st.permutations(list(range(1, n + 1))))))
    def test_conjugation_matches_definition(self, data):
        pi, gi = data
        p, g = Permutation(pi), Permutation(gi)
        assert p.conj(g) == g.inverse() * p * g


class TestPermGroup:
    def test_order_s3(self):
        G = PermGroup([cyc(3, (1, 2)), cyc(3, (1, 2, 3))])
        assert G.order == 6

    def test_trivial_group(self):
        G = PermGroup([Permutation.identity(4)])
        assert G.order == 1
        assert list(G.elements()) == [Permutation.identity(4)]

    def test_cyclic_group(self):
        G = PermGroup([cyc(5, (1, 2, 3, 4, 5))])
        assert G.order == 5

    def test_empty_generator_list_rejected(self):
        with pytest.raises(ValueError):
            PermGroup([])

    def test_generator_degree_mismatch(self):
        with pytest.raises(DegreeMismatchError):
            PermGroup([cyc(3, (1, 2)), cyc(4, (1, 2))])

    def test_orbit_with_witnesses(self):
        G = PermGroup([cyc(4, (1, 2, 3))])
        orb = G.orbit(1)
        assert sorted(orb) == [1, 2, 3]
        for pt, w in orb.items():
            assert w(1) == pt
            assert w in G

    def test_orbit_trivial_and_transitive(self):
        assert sorted(PermGroup.trivial(3).orbit(2)) == [2]
        assert sorted(symmetric(3).orbit(3)) == [1, 2, 3]
        with pytest.raises(ValueError):
            symmetric(3).orbit(4)

    def test_is_transitive(self):
        assert symmetric(3).is_transitive()
        assert not PermGroup([cyc(3, (1, 2))]).is_transitive()
        assert PermGroup([cyc(4, (1, 2, 3, 4))]).is_transitive()

    def test_stabilizer(self):
        S = symmetric(3).stabilizer(1)
        assert S.order == 2
        assert cyc(3, (2, 3)) in S
        assert PermGroup.trivial(3).stabilizer(2).order == 1
        assert symmetric(4).stabilizer(1).order == 6

    def test_membership(self):
        G = symmetric(4)
        assert cyc(4, (1, 3)) in G
        A4 = G.derived_subgroup()
        assert cyc(4, (1, 2)) not in A4
        assert Permutation.identity(4) in A4

    def test_center(self):
        assert symmetric(3).center().order == 1
        klein = PermGroup([cyc(4, (1, 2), (3, 4)), cyc(4, (1, 3), (2, 4))])
        assert klein.center().order == 4
        Z6 = PermGroup([cyc(6, (1, 2, 3, 4, 5, 6))])
        assert Z6.center().equals(Z6)

    def test_center_bound(self):
        with pytest.raises(BoundExceededError):
            symmetric(8).center(bound=100)

    def test_derived_subgroup(self):
        A3 = symmetric(3).derived_subgroup()
        assert A3.order == 3
        klein = PermGroup([cyc(4, (1, 2), (3, 4)), cyc(4, (1, 3), (2, 4))])
        assert klein.derived_subgroup().order == 1
        assert symmetric(4).derived_subgroup().order == 12

    def test_derived_subgroup_is_normal(self):
        for G in (symmetric(4), symmetric(5)):
            D = G.derived_subgroup()
            for d in D.generators:
                for g in G.generators:
                    assert d.conj(g) in D

    def test_normal_closure(self):
        S3 = symmetric(3)
        assert S3.normal_closure([cyc(3, (2, 3))]).order == 6
        assert S3.normal_closure([Permutation.identity(3)]).order == 1
        S4 = symmetric(4)
        assert S4.normal_closure([cyc(4, (1, 2, 3))]).order == 12

    def test_normal_closure_invariance(self):
        S4 = symmetric(4)
        N = S4.normal_closure([cyc(4, (1, 2), (3, 4))])
        for ng in N.generators:
            for g in S4.generators:
                assert ng.conj(g) in N
        assert cyc(4, (1, 2), (3, 4)) in N

    def test_normal_closure_requires_membership(self):
        A4 = symmetric(4).derived_subgroup()
        with pytest.raises(NotAMemberError):
            A4.normal_closure([cyc(4, (1, 2))])

    def test_abelian_and_metabelian(self):
        klein = PermGroup([cyc(4, (1, 2), (3, 4)), cyc(4, (1, 3), (2, 4))])
        assert klein.is_abelian()
        assert symmetric(3).is_metabelian()
        assert not symmetric(4).is_metabelian()

    def test_cyclic_derived_quotient(self):
        assert symmetric(4).has_cyclic_derived_quotient()
        klein = PermGroup([cyc(4, (1, 2), (3, 4)), cyc(4, (1, 3), (2, 4))])
        assert not klein.has_cyclic_derived_quotient()
        assert PermGroup([cyc(6, (1, 2, 3, 4, 5, 6))]).has_cyclic_derived_quotient()

    def test_groups_equal(self):
        S3 = symmetric(3)
        regenerated = PermGroup(list(S3.elements()))
        assert S3.equals(regenerated)
        assert not S3.equals(S3.derived_subgroup())
        G1 = PermGroup([cyc(3, (1, 2, 3)), cyc(3, (1, 2))])
        G2 = PermGroup([cyc(3, (2, 3)), cyc(3, (1, 3))])
        assert G1.equals(G2)

    def test_element_iteration_exact(self):
        for G in (symmetric(4), PermGroup([cyc(5, (1, 2, 3, 4, 5))]),
                  symmetric(5).derived_subgroup()):
            els = list(G.elements())
            assert len(els) == G.order == len(set(els))
            assert all(e in G for e in els)

    def test_element_iteration_bound(self):
        with pytest.raises(BoundExceededError):
            list(symmetric(8).elements(bound=1000))

    def test_orbit_stabilizer_property(self):
        rng = random.Random(11)
        for _ in range(10):
            n = rng.randint(2, 7)
            gens = []
            for _ in range(rng.randint(1, 3)):
                imgs = list(range(1, n + 1))
                rng.shuffle(imgs)
                gens.append(Permutation(imgs))
            G = PermGroup(gens)
            for x in range(1, n + 1):
                assert G.order == len(G.orbit(x)) * G.stabilizer(x).order

    def test_center_elements_commute_with_everything(self):
        for G in (symmetric(4), PermGroup([cyc(6, (1, 2, 3), (4, 5))]),
                  PermGroup([cyc(4, (1, 2, 3, 4)), cyc(4, (1, 3))])):
            Z = G.center()
            for z in Z.elements():
                for g in G.elements():
                    assert z * g == g * z

    def test_deterministic_construction(self):
        gens = [cyc(6, (1, 2), (3, 4, 5)), cyc(6, (2, 6, 4))]
        G1, G2 = PermGroup(gens), PermGroup(gens)
        assert list(G1.elements()) == list(G2.elements())
        assert G1.orbit(1) == G2.orbit(1)

    def test_big_symmetric(self):
        assert symmetric(8).order == math.factorial(8)

    @settings(max_examples=30)
    @given(st.integers(2, 6), st.randoms(use_true_random=False))
    def test_product_of_elements_is_member(self, n, rng):
        imgs = list(range(1, n + 1))
        rng.shuffle(imgs)
        a = Permutation(imgs)
        rng.shuffle(imgs)
        b = Permutation(imgs)
        G = PermGroup([a, b])
        assert a * b in G
        assert a.inverse() in G
        assert b.conj(a) in G
