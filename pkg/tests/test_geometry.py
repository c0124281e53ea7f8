from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cremona import (
    Conic,
    Line,
    Mobius,
    P1Point,
    P2Point,
    are_collinear,
    intersect_line_conic,
    is_general_position,
    line_through,
    lines_meet,
    mobius_from_triples,
    project_from,
)
from cremona.errors import (
    DegenerateConfiguration,
    DegenerateTriple,
    DuplicatePoint,
    LineInConic,
    NonRationalIntersection,
    SamePoint,
    TooManyPoints,
)

PARABOLA = Conic(1, 0, 0, 0, 0, -1)  # x^2 = y z


def p1s():
    return st.tuples(
        st.integers(min_value=-9, max_value=9),
        st.integers(min_value=-9, max_value=9),
    ).filter(lambda ab: ab != (0, 0)).map(lambda ab: P1Point(*ab))


def mobius_maps():
    return st.tuples(
        st.integers(min_value=-5, max_value=5),
        st.integers(min_value=-5, max_value=5),
        st.integers(min_value=-5, max_value=5),
        st.integers(min_value=-5, max_value=5),
    ).filter(lambda m: m[0] * m[3] - m[1] * m[2] != 0).map(
        lambda m: Mobius.from_coeffs(*m)
    )


class TestP1Point:
    def test_reduction_and_sign(self):
        assert P1Point(2, 4) == P1Point(1, 2)
        assert P1Point(-3, -6) == P1Point(1, 2)
        assert P1Point(3, -6) == P1Point(-1, 2)
        assert P1Point(3, -6).a == 1

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            P1Point(0, 0)

    def test_values_and_infinity(self):
        assert P1Point.from_value(Fraction(3, 4)) == P1Point(3, 4)
        assert P1Point.infinity().value() is None
        assert P1Point(7, 2).value() == Fraction(7, 2)

    def test_infinity_sorts_last(self):
        pts = [P1Point.infinity(), P1Point(5, 1), P1Point(-2, 1), P1Point(1, 2)]
        assert sorted(pts) == [P1Point(-2, 1), P1Point(1, 2), P1Point(5, 1), P1Point.infinity()]


class TestP2Point:
    def test_reduction(self):
        assert P2Point(2, 4, 6) == P2Point(1, 2, 3)
        assert P2Point(0, 0, -5) == P2Point(0, 0, -1) or P2Point(0, 0, -5).coords()[2] in (1, -1)

    def test_from_affine(self):
        assert P2Point.from_affine(Fraction(1, 2), Fraction(2, 3)) == P2Point(3, 4, 6)


class TestLines:
    def test_line_through_and_membership(self):
        p, q = P2Point(1, 0, 1), P2Point(0, 1, 1)
        ln = line_through(p, q)
        assert ln.contains(p) and ln.contains(q)
        assert ln == Line(1, 1, -1)

    def test_line_through_same_point(self):
        with pytest.raises(SamePoint):
            line_through(P2Point(1, 2, 3), P2Point(2, 4, 6))

    def test_lines_meet(self):
        assert lines_meet(Line(1, 0, 0), Line(0, 1, 0)) == P2Point(0, 0, 1)
        with pytest.raises(DegenerateConfiguration):
            lines_meet(Line(1, 1, 0), Line(2, 2, 0))

    def test_collinearity(self):
        assert are_collinear(P2Point(0, 0, 1), P2Point(1, 1, 1), P2Point(2, 2, 1))
        assert not are_collinear(P2Point(0, 0, 1), P2Point(1, 0, 1), P2Point(0, 1, 1))


class TestGeneralPosition:
    def test_five_good_points(self):
        pts = [P2Point(1, 0, 0), P2Point(0, 1, 0), P2Point(0, 0, 1),
               P2Point(1, 1, 1), P2Point(1, 2, 3)]
        assert is_general_position(pts)

    def test_collinear_triple_fails(self):
        pts = [P2Point(0, 0, 1), P2Point(1, 0, 1), P2Point(2, 0, 1), P2Point(0, 1, 0)]
        assert not is_general_position(pts)

    def test_six_points_on_a_conic_fail(self):
        # (t : t^2 : 1) lies on the parabola, plus its point at infinity
        pts = [P2Point(t, t * t, 1) for t in range(5)] + [P2Point(0, 1, 0)]
        assert all(PARABOLA.contains(p) for p in pts)
        assert not is_general_position(pts)

    def test_eight_points_on_a_nodal_cubic_fail(self):
        # (t^2 - 1 : t^3 - t : 1) sweeps y^2 z = x^3 + x^2 z, nodal at (0:0:1)
        node = P2Point(0, 0, 1)
        pts = [node] + [
            P2Point(t * t - 1, t**3 - t, 1) for t in (2, 3, 4, 5, 6, 7, 8)
        ]
        assert len(set(pts)) == 8
        assert not is_general_position(pts)

    def test_limits_and_duplicates(self):
        with pytest.raises(TooManyPoints):
            is_general_position([P2Point(i, 1, 1) for i in range(9)])
        with pytest.raises(DuplicatePoint):
            is_general_position([P2Point(1, 0, 0), P2Point(2, 0, 0)])


class TestConic:
    def test_evaluate_and_contains(self):
        assert PARABOLA.contains(P2Point(2, 4, 1))
        assert not PARABOLA.contains(P2Point(1, 1, 2))

    def test_smoothness(self):
        assert PARABOLA.is_smooth()
        assert not Conic(0, 0, 0, 1, 0, 0).is_smooth()  # xy = 0, two lines

    def test_coefficient_reduction(self):
        assert Conic(2, 0, 0, 0, 0, -2) == PARABOLA


class TestMobius:
    def test_singular_rejected(self):
        with pytest.raises(ValueError):
            Mobius(((1, 2), (2, 4)))
        with pytest.raises(ValueError):
            Mobius(((1, 2, 3), (4, 5, 6)))

    @given(mobius_maps(), p1s())
    def test_inverse_round_trip(self, m, p):
        assert m.inverse().apply(m.apply(p)) == p

    @given(mobius_maps(), mobius_maps(), p1s())
    def test_composition_is_a_homomorphism(self, m1, m2, p):
        assert (m1 @ m2).apply(p) == m1.apply(m2.apply(p))

    def test_from_triples(self):
        src = (P1Point(0, 1), P1Point(1, 1), P1Point.infinity())
        dst = (P1Point(1, 1), P1Point(2, 1), P1Point(3, 1))
        m = mobius_from_triples(src, dst)
        assert [m.apply(p) for p in src] == list(dst)

    def test_from_triples_rejects_repeats(self):
        with pytest.raises(DegenerateTriple):
            mobius_from_triples(
                (P1Point(0, 1), P1Point(0, 1), P1Point(1, 0)),
                (P1Point(0, 1), P1Point(1, 1), P1Point(1, 0)),
            )

    @given(p1s(), p1s(), p1s())
    def test_triple_transitivity(self, p, q, r):
        if len({p, q, r}) != 3:
            return
        std = (P1Point(0, 1), P1Point(1, 1), P1Point.infinity())
        m = mobius_from_triples(std, (p, q, r))
        assert (m.apply(std[0]), m.apply(std[1]), m.apply(std[2])) == (p, q, r)


class TestProjection:
    def test_standard_center(self):
        assert project_from(P2Point(0, 0, 1), P2Point(3, 6, 11)) == P1Point(1, 2)

    def test_center_itself_rejected(self):
        with pytest.raises(SamePoint):
            project_from(P2Point(1, 2, 3), P2Point(1, 2, 3))

    def test_lines_through_center_collapse(self):
        center = P2Point(1, 1, 1)
        a, b = P2Point(3, 1, 2), P2Point(5, 1, 3)  # both on a line through center
        assert are_collinear(center, a, b)
        assert project_from(center, a) == project_from(center, b)


class TestLineConicIntersection:
    def test_chord(self):
        chord = line_through(P2Point(0, 0, 1), P2Point(1, 1, 1))
        pts = intersect_line_conic(chord, PARABOLA)
        assert pts == (P2Point(0, 0, 1), P2Point(1, 1, 1))

    def test_tangent_single_point(self):
        # gradient of x^2 - yz at (1:1:1) is (2, -1, -1)
        tangent = Line(2, -1, -1)
        assert intersect_line_conic(tangent, PARABOLA) == (P2Point(1, 1, 1),)

    def test_irrational_pair(self):
        with pytest.raises(NonRationalIntersection):
            intersect_line_conic(Line(0, -5, 1), PARABOLA)  # x^2 = 5 y^2

    def test_line_inside_conic(self):
        with pytest.raises(LineInConic):
            intersect_line_conic(Line(1, 0, 0), Conic(0, 0, 0, 1, 0, 0))

    @given(st.integers(min_value=-6, max_value=6), st.integers(min_value=-6, max_value=6))
    def test_secants_through_two_parabola_points(self, s, t):
        if s == t:
            return
        a, b = P2Point(s, s * s, 1), P2Point(t, t * t, 1)
        pts = intersect_line_conic(line_through(a, b), PARABOLA)
        assert set(pts) == {a, b}
