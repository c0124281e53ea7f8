import itertools

import pytest

from cremona import (
    BlowupLattice,
    DivisorClass,
    FiberedMarking,
    LatticeAction,
    P1Point,
    adjunction_genus,
    enumerate_minus_one_classes,
    intersect,
    invariant_sublattice,
    is_pair_minimal,
    orbits,
    reflection_matrix,
    verify_mori_fibration,
)
from cremona import intlinalg as la
from cremona.corpus import cubic_coxeter_action, cubic_coxeter_matrix
from cremona.errors import (
    DimensionMismatch,
    GroupClosureCapExceeded,
    MovesCanonicalClass,
    NotClosedUnderAction,
    NotIsometry,
    UnsupportedRank,
)
from cremona.picard import validate_action

import oracles


def swap_matrix(lattice: BlowupLattice, i: int, j: int) -> tuple:
    n = lattice.rank
    perm = list(range(n))
    perm[i], perm[j] = perm[j], perm[i]
    return tuple(
        tuple(1 if col == perm[row] else 0 for col in range(n)) for row in range(n)
    )


class TestDivisorClass:
    def test_arithmetic(self):
        d = DivisorClass.of(1, -2, 0)
        e = DivisorClass.of(0, 1, 1)
        assert (d + e).coeffs == (1, -1, 1)
        assert (d - e).coeffs == (1, -3, -1)
        assert (-d).coeffs == (-1, 2, 0)
        assert (3 * e).coeffs == (0, 3, 3)

    def test_mismatched_lengths_rejected(self):
        with pytest.raises(ValueError):
            DivisorClass.of(1, 0) + DivisorClass.of(1, 0, 0)


class TestBlowupLattice:
    def test_basic_classes(self):
        lat = BlowupLattice(3)
        assert lat.rank == 4
        assert lat.degree == 6
        assert lat.canonical_class.coeffs == (-3, 1, 1, 1)
        assert lat.line_class().coeffs == (1, 0, 0, 0)
        assert lat.exceptional_class(2).coeffs == (0, 0, 1, 0)

    def test_rank_limits(self):
        BlowupLattice(13)
        with pytest.raises(UnsupportedRank):
            BlowupLattice(14)
        with pytest.raises(UnsupportedRank):
            BlowupLattice(-1)

    def test_exceptional_index_range(self):
        lat = BlowupLattice(2)
        with pytest.raises(DimensionMismatch):
            lat.exceptional_class(0)
        with pytest.raises(DimensionMismatch):
            lat.exceptional_class(3)


class TestIntersection:
    def test_diagonal_form(self):
        lat = BlowupLattice(2)
        l = lat.line_class()
        e1, e2 = lat.exceptional_class(1), lat.exceptional_class(2)
        assert intersect(lat, l, l) == 1
        assert intersect(lat, e1, e1) == -1
        assert intersect(lat, l, e1) == 0
        assert intersect(lat, e1, e2) == 0

    def test_canonical_square(self):
        for r in range(0, 9):
            lat = BlowupLattice(r)
            k = lat.canonical_class
            assert intersect(lat, k, k) == 9 - r == lat.degree

    def test_dimension_guard(self):
        with pytest.raises(DimensionMismatch):
            intersect(BlowupLattice(2), DivisorClass.of(1, 0), DivisorClass.of(1, 0, 0))


class TestAdjunctionGenus:
    @pytest.mark.parametrize(
        "coeffs, genus",
        [
            ((1, 0, 0), 0),        # a line
            ((2, 0, 0), 0),        # a conic
            ((3, 0, 0), 1),        # a plane cubic
            ((4, 0, 0), 3),        # a plane quartic
            ((0, 1, 0), 0),        # an exceptional curve
            ((3, -1, -1), 1),      # -K itself
        ],
    )
    def test_plane_curves(self, coeffs, genus):
        lat = BlowupLattice(len(coeffs) - 1)
        assert adjunction_genus(lat, DivisorClass(coeffs)) == genus

    def test_anticanonical_genus_is_one_for_all_r(self):
        for r in range(0, 9):
            lat = BlowupLattice(r)
            assert adjunction_genus(lat, -lat.canonical_class) == 1

    def test_matches_independent_oracle(self):
        lat = BlowupLattice(3)
        for coeffs in itertools.product(range(-2, 3), repeat=4):
            d = DivisorClass(coeffs)
            assert adjunction_genus(lat, d) == oracles.genus_oracle(coeffs)


class TestMinusOneClasses:
    FROZEN_COUNTS = {1: 1, 2: 3, 3: 6, 4: 10, 5: 16, 6: 27}

    def test_counts(self):
        for r, count in self.FROZEN_COUNTS.items():
            assert len(enumerate_minus_one_classes(BlowupLattice(r))) == count

    def test_exact_sets_match_oracle_up_to_r4(self):
        for r in range(1, 5):
            got = {d.coeffs for d in enumerate_minus_one_classes(BlowupLattice(r))}
            assert got == set(oracles.minus_one_vectors_oracle(r))

    def test_numerical_conditions_hold(self):
        lat = BlowupLattice(6)
        k = lat.canonical_class
        for d in enumerate_minus_one_classes(lat):
            assert intersect(lat, d, d) == -1
            assert intersect(lat, d, k) == -1

    def test_output_is_sorted_and_duplicate_free(self):
        classes = enumerate_minus_one_classes(BlowupLattice(5))
        assert list(classes) == sorted(set(classes))

    def test_rank_window(self):
        with pytest.raises(UnsupportedRank):
            enumerate_minus_one_classes(BlowupLattice(0))
        with pytest.raises(UnsupportedRank):
            enumerate_minus_one_classes(BlowupLattice(9))


class TestValidateAction:
    def test_identity_passes(self):
        lat = BlowupLattice(2)
        validate_action(lat, la.identity(3))

    def test_shape_guard(self):
        with pytest.raises(DimensionMismatch):
            validate_action(BlowupLattice(2), la.identity(2))

    def test_non_isometry_rejected(self):
        # swapping L with E_1 flips the sign of the form
        with pytest.raises(NotIsometry):
            validate_action(BlowupLattice(1), ((0, 1), (1, 0)))

    def test_moving_k_rejected(self):
        with pytest.raises(MovesCanonicalClass):
            validate_action(BlowupLattice(1), ((1, 0), (0, -1)))


class TestReflections:
    def test_root_swapping_two_exceptional_classes(self):
        lat = BlowupLattice(2)
        root = lat.exceptional_class(1) - lat.exceptional_class(2)
        assert reflection_matrix(lat, root) == swap_matrix(lat, 1, 2)

    def test_quadratic_root(self):
        lat = BlowupLattice(3)
        l = lat.line_class()
        es = [lat.exceptional_class(i) for i in (1, 2, 3)]
        m = reflection_matrix(lat, l - es[0] - es[1] - es[2])
        image_of_line = DivisorClass(la.mat_vec(m, l.coeffs))
        assert image_of_line == 2 * l - es[0] - es[1] - es[2]

    def test_reflections_are_involutions(self):
        lat = BlowupLattice(4)
        l = lat.line_class()
        es = [lat.exceptional_class(i) for i in range(1, 5)]
        roots = [es[0] - es[1], es[2] - es[3], l - es[0] - es[1] - es[2]]
        for root in roots:
            m = reflection_matrix(lat, root)
            assert la.mat_mul(m, m) == la.identity(lat.rank)

    def test_wrong_square_rejected(self):
        lat = BlowupLattice(2)
        with pytest.raises(NotIsometry):
            reflection_matrix(lat, lat.exceptional_class(1))

    def test_root_meeting_k_rejected(self):
        lat = BlowupLattice(2)
        root = lat.exceptional_class(1) + lat.exceptional_class(2)  # square -2, K. root != 0
        with pytest.raises(MovesCanonicalClass):
            reflection_matrix(lat, root)


class TestLatticeAction:
    def test_trivial_group(self):
        action = LatticeAction.trivial(BlowupLattice(2))
        assert action.order() == 1

    def test_involution_group(self):
        lat = BlowupLattice(2)
        action = LatticeAction(lat, (swap_matrix(lat, 1, 2),))
        assert action.order() == 2
        assert la.identity(3) in action.elements

    def test_coxeter_order(self):
        assert cubic_coxeter_action().order() == 12

    def test_closure_cap(self):
        with pytest.raises(GroupClosureCapExceeded):
            LatticeAction(BlowupLattice(6), (cubic_coxeter_matrix(),), closure_cap=3).order()


class TestInvariantSublattice:
    def test_trivial_action_fixes_everything(self):
        lat = BlowupLattice(3)
        rank, basis = invariant_sublattice(LatticeAction.trivial(lat))
        assert rank == lat.rank == len(basis)

    def test_swap_invariants(self):
        lat = BlowupLattice(2)
        action = LatticeAction(lat, (swap_matrix(lat, 1, 2),))
        rank, basis = invariant_sublattice(action)
        assert rank == 2
        expected = ((1, 0, 0), (0, 1, 1))  # L and E_1 + E_2
        assert la.spans_equal(tuple(d.coeffs for d in basis), expected)

    def test_coxeter_invariant_is_the_canonical_line(self):
        action = cubic_coxeter_action()
        rank, basis = invariant_sublattice(action)
        assert rank == 1
        k = action.lattice.canonical_class
        assert basis[0] in (k, -k)


class TestOrbits:
    def test_orbit_partition(self):
        lat = BlowupLattice(2)
        action = LatticeAction(lat, (swap_matrix(lat, 1, 2),))
        classes = enumerate_minus_one_classes(lat)
        parts = orbits(action, classes)
        as_sets = {frozenset(d.coeffs for d in orbit) for orbit in parts}
        assert as_sets == {
            frozenset({(0, 1, 0), (0, 0, 1)}),
            frozenset({(1, -1, -1)}),
        }

    def test_escaping_the_pool_is_an_error(self):
        lat = BlowupLattice(2)
        action = LatticeAction(lat, (swap_matrix(lat, 1, 2),))
        with pytest.raises(NotClosedUnderAction):
            orbits(action, [lat.exceptional_class(1)])


class TestPairMinimality:
    def test_trivial_group_is_never_minimal(self):
        lat = BlowupLattice(3)
        minimal, witness = is_pair_minimal(lat, LatticeAction.trivial(lat))
        assert not minimal
        assert len(witness) == 1
        assert witness[0] in enumerate_minus_one_classes(lat)

    def test_single_quadratic_involution_is_not_minimal(self):
        lat = BlowupLattice(3)
        l = lat.line_class()
        es = [lat.exceptional_class(i) for i in (1, 2, 3)]
        action = LatticeAction(lat, (reflection_matrix(lat, l - es[0] - es[1] - es[2]),))
        minimal, witness = is_pair_minimal(lat, action)
        assert not minimal
        assert len(witness) == 2
        assert intersect(lat, witness[0], witness[1]) == 0

    def test_coxeter_cyclic_group_is_minimal(self):
        action = cubic_coxeter_action()
        minimal, witness = is_pair_minimal(action.lattice, action)
        assert minimal and witness is None


class TestFiberedMarking:
    def test_standard_marking(self):
        marking = FiberedMarking.standard(3)
        assert marking.k == 3
        assert marking.lattice.r == 4
        assert marking.base_points == (P1Point(0, 1), P1Point(1, 1), P1Point(2, 1))

    def test_distinguished_classes(self):
        marking = FiberedMarking.standard(2)
        lat = marking.lattice
        f = marking.fiber_class
        assert f.coeffs == (1, -1, 0, 0)
        assert intersect(lat, f, f) == 0
        assert intersect(lat, marking.section_class, f) == 1
        assert intersect(lat, f, lat.canonical_class) == -2
        assert marking.fiber_component(2).coeffs == (0, 0, 0, 1)

    def test_index_lookup(self):
        marking = FiberedMarking.standard(2)
        assert marking.fiber_index_of(P1Point(1, 1)) == 2
        with pytest.raises(ValueError):
            marking.fiber_index_of(P1Point(5, 1))

    def test_component_range(self):
        marking = FiberedMarking.standard(2)
        with pytest.raises(DimensionMismatch):
            marking.fiber_component(3)

    def test_constructor_guards(self):
        with pytest.raises(ValueError):
            FiberedMarking(BlowupLattice(3), (P1Point(0, 1), P1Point(0, 1)))
        with pytest.raises(DimensionMismatch):
            FiberedMarking(BlowupLattice(3), (P1Point(0, 1),))


class TestMoriFibration:
    def test_del_pezzo_point_case(self):
        action = cubic_coxeter_action()
        verdict = verify_mori_fibration(action.lattice, action)
        assert verdict.is_mori()
        assert verdict.kind == "del_pezzo_point"
        assert verdict.invariant_rank == 1

    def test_conic_bundle_case(self):
        from cremona import jonquieres_involution_matrix

        marking = FiberedMarking.standard(4)
        gen = jonquieres_involution_matrix(marking).generator
        action = LatticeAction(marking.lattice, (gen,))
        verdict = verify_mori_fibration(marking.lattice, action, marking)
        assert verdict.kind == "conic_bundle_over_p1"
        assert verdict.invariant_rank == 2

    def test_rank_two_without_marking(self):
        marking = FiberedMarking.standard(4)
        from cremona import jonquieres_involution_matrix

        gen = jonquieres_involution_matrix(marking).generator
        action = LatticeAction(marking.lattice, (gen,))
        verdict = verify_mori_fibration(marking.lattice, action)
        assert verdict.kind == "not_mori"
        assert "no fibered marking" in verdict.reason

    def test_rank_two_wrong_lattice(self):
        # swapping E_0 with the unique fiber component fixes L and E_0 + E_1,
        # which is not Z K + Z f
        marking = FiberedMarking(BlowupLattice(2), (P1Point(0, 1),))
        lat = marking.lattice
        action = LatticeAction(lat, (swap_matrix(lat, 1, 2),))
        verdict = verify_mori_fibration(lat, action, marking)
        assert verdict.kind == "not_mori"
        assert "not Z K + Z f" in verdict.reason

    def test_rank_too_large(self):
        lat = BlowupLattice(2)
        verdict = verify_mori_fibration(lat, LatticeAction.trivial(lat))
        assert verdict.kind == "not_mori"
        assert "neither 1 nor 2" in verdict.reason
