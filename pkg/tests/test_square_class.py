from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cremona import (
    Mobius,
    P1Point,
    RamificationTriplet,
    SquareClass,
    delta_canonical_form,
    realizable_profiles,
    square_class_of,
    stabilizer,
    triplet_canonical_form,
    triplet_from_profile,
    validate_triplet,
)
from cremona.errors import (
    CoverageViolation,
    DuplicatePoint,
    OddCardinality,
    TooFewPoints,
    TooSmall,
)
from cremona.square_class import InvolutionRep, involutions_conjugate, multiply

import oracles


def pts(*values) -> tuple[P1Point, ...]:
    return tuple(
        P1Point.infinity() if v is None else P1Point.from_value(Fraction(v))
        for v in values
    )


def support_sets():
    values = st.sets(
        st.integers(min_value=-8, max_value=8), min_size=0, max_size=6
    ).filter(lambda s: len(s) % 2 == 0)
    return values.map(lambda s: pts(*sorted(s)))


class TestSquareClass:
    def test_support_is_normalized(self):
        c = square_class_of(pts(3, 0))
        assert c.support == pts(0, 3)

    def test_odd_support_rejected(self):
        with pytest.raises(OddCardinality):
            square_class_of(pts(0, 1, 2))

    def test_duplicate_rejected(self):
        with pytest.raises(DuplicatePoint):
            square_class_of(pts(0, 0))

    def test_product_is_symmetric_difference(self):
        c1 = square_class_of(pts(0, 1))
        c2 = square_class_of(pts(1, 2))
        assert multiply(c1, c2) == square_class_of(pts(0, 2))

    @given(support_sets(), support_sets())
    def test_group_laws(self, s1, s2):
        c1, c2 = SquareClass(s1), SquareClass(s2)
        assert c1 * c2 == c2 * c1
        assert (c1 * c1).is_trivial()
        assert c1 * SquareClass.identity() == c1

    def test_conjugacy_is_class_equality(self):
        a = InvolutionRep(square_class_of(pts(0, None)))
        b = InvolutionRep(square_class_of(pts(None, 0)))
        c = InvolutionRep(square_class_of(pts(1, 2)))
        assert involutions_conjugate(a, b)
        assert not involutions_conjugate(a, c)


class TestValidateTriplet:
    def test_profile_and_support(self):
        t = validate_triplet(pts(0, 1), pts(0, 2), pts(1, 2))
        assert t.profile == (1, 1, 1)
        assert t.k == 3
        assert t.support == pts(0, 1, 2)

    def test_third_set_is_symmetric_difference(self):
        t = validate_triplet(pts(0, 1), pts(2, 3), pts(0, 1, 2, 3))
        assert set(t.sets[2]) == set(t.sets[0]) ^ set(t.sets[1])
        assert t.profile == (1, 1, 2)

    def test_membership_lists_exactly_two_sets(self):
        t = validate_triplet(pts(0, 1), pts(0, 2), pts(1, 2))
        for p in t.support:
            assert len(t.membership(p)) == 2

    def test_sets_are_sorted_among_themselves(self):
        t1 = validate_triplet(pts(1, 2), pts(0, 1), pts(0, 2))
        t2 = validate_triplet(pts(0, 1), pts(0, 2), pts(1, 2))
        assert t1 == t2

    def test_too_small(self):
        with pytest.raises(TooSmall):
            validate_triplet((), pts(0, 1), pts(0, 1))

    def test_odd_cardinality(self):
        with pytest.raises(OddCardinality):
            validate_triplet(pts(0, 1, 2), pts(0, 1), pts(2, 3))

    def test_coverage_violation(self):
        with pytest.raises(CoverageViolation):
            validate_triplet(pts(0, 1), pts(2, 3), pts(4, 5))


class TestProfiles:
    def test_realizable_profiles_k_le_6(self):
        assert realizable_profiles(6) == (
            (1, 1, 1), (1, 1, 2), (1, 2, 2), (1, 2, 3), (2, 2, 2),
        )

    def test_triangle_bound_excludes_spread_profiles(self):
        # (1, 1, 3) fails a3 <= a1 + a2 and must not appear
        assert (1, 1, 3) not in realizable_profiles(12)
        assert all(a3 <= a1 + a2 for a1, a2, a3 in realizable_profiles(12))

    def test_standard_triplet_round_trips_the_profile(self):
        for profile in realizable_profiles(10):
            t = triplet_from_profile(profile)
            assert t.profile == profile
            assert t.k == sum(profile)

    def test_unrealizable_profile_rejected(self):
        with pytest.raises(CoverageViolation):
            triplet_from_profile((1, 1, 3))


class TestStabilizer:
    def test_three_point_stabilizer_order(self):
        maps = stabilizer(pts(0, 1, None))
        assert len(maps) == 6
        assert len(maps) == oracles.stabilizer_order_oracle((0, 1, None))

    def test_harmonic_four_points(self):
        maps = stabilizer(pts(0, None, 1, -1))
        assert len(maps) == 8
        assert len(maps) == oracles.stabilizer_order_oracle((0, None, 1, -1))

    def test_generic_four_points(self):
        maps = stabilizer(pts(0, 1, 2, 3))
        assert len(maps) == 4
        assert len(maps) == oracles.stabilizer_order_oracle((0, 1, 2, 3))

    def test_every_map_permutes_the_set(self):
        support = pts(0, None, 1, -1)
        for m in stabilizer(support):
            assert {m.apply(p) for p in support} == set(support)

    def test_too_few_points(self):
        with pytest.raises(TooFewPoints):
            stabilizer(pts(0, 1))


class TestCanonicalForms:
    def test_canonical_support_contains_the_pinned_triple(self):
        t = validate_triplet(pts(5, 7), pts(5, 11), pts(7, 11))
        canon = triplet_canonical_form(t)
        assert set(pts(0, 1, None)) <= set(canon.support)

    def test_canonical_form_is_idempotent(self):
        t = triplet_from_profile((1, 2, 2))
        canon = triplet_canonical_form(t)
        assert triplet_canonical_form(canon) == canon

    def test_invariance_under_a_mobius_map(self):
        t = validate_triplet(pts(0, 1), pts(2, 3), pts(0, 1, 2, 3))
        m = Mobius.from_coeffs(2, 1, 1, 3)
        assert triplet_canonical_form(t.transformed(m)) == triplet_canonical_form(t)

    def test_different_cross_ratios_do_not_collide(self):
        generic = validate_triplet(pts(0, 1), pts(2, 3), pts(0, 1, 2, 3))
        harmonic = validate_triplet(pts(0, None), pts(1, -1), pts(0, 1, -1, None))
        assert triplet_canonical_form(generic) != triplet_canonical_form(harmonic)

    def test_delta_canonical_form_pins_and_is_invariant(self):
        delta = pts(0, 1, 2, 3)
        canon = delta_canonical_form(delta)
        assert set(pts(0, 1, None)) <= set(canon)
        m = Mobius.from_coeffs(0, 1, 1, 0)  # t -> 1/t
        moved = tuple(m.apply(p) for p in delta)
        assert delta_canonical_form(moved) == canon

    def test_delta_canonical_form_too_few(self):
        with pytest.raises(TooFewPoints):
            delta_canonical_form(pts(0, 1))


class TestTransformed:
    @given(st.permutations([0, 1, 2]))
    def test_relabelling_support_preserves_the_triplet_shape(self, perm):
        t = validate_triplet(pts(0, 1), pts(0, 2), pts(1, 2))
        src = pts(0, 1, 2)
        from cremona import mobius_from_triples

        m = mobius_from_triples(src, tuple(src[i] for i in perm))
        assert t.transformed(m).profile == t.profile
        assert set(t.transformed(m).support) == set(src)
