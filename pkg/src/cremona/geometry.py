"""Exact projective geometry over Q with integer homogeneous coordinates.

Points of P^1 and P^2, lines, conics and Moebius transformations are all
stored as reduced integer tuples: coordinates are divided by their gcd
and the first nonzero entry is made positive, so equal geometric objects
compare equal as Python values and hash consistently.  Unreduced and
negated input is accepted everywhere and normalized on construction.

Conventions used throughout the package:

* a point of P^1 written ``(a : b)`` is the parameter value ``a/b`` on the
  affine chart, with ``(1 : 0)`` the point at infinity;
* conics are symmetric integer forms with coefficients ordered
  ``(xx, yy, zz, xy, xz, yz)``;
* ``project_from`` uses the pencil chart dropping the highest nonzero
  coordinate of the center, which sends the center ``(0 : 0 : 1)`` to the
  familiar ``(x : y : z) -> (x : y)``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    DegenerateConfiguration,
    DegenerateTriple,
    DuplicatePoint,
    LineInConic,
    NonRationalIntersection,
    SamePoint,
    TooManyPoints,
)
from .intlinalg import Mat, det, freeze


def _reduced(coords: tuple[int, ...], what: str) -> tuple[int, ...]:
    if all(c == 0 for c in coords):
        raise ValueError(f"all coordinates of a {what} are zero")
    g = math.gcd(*coords)
    coords = tuple(c // g for c in coords)
    first = next(c for c in coords if c != 0)
    if first < 0:
        coords = tuple(-c for c in coords)
    return coords


@dataclass(frozen=True, order=False)
class P1Point:
    """A rational point ``(a : b)`` of the projective line."""

    a: int
    b: int

    def __post_init__(self) -> None:
        a, b = _reduced((int(self.a), int(self.b)), "P1 point")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @classmethod
    def from_value(cls, value: int | Fraction) -> "P1Point":
        f = Fraction(value)
        return cls(f.numerator, f.denominator)

    @classmethod
    def infinity(cls) -> "P1Point":
        return cls(1, 0)

    def is_infinity(self) -> bool:
        return self.b == 0

    def value(self) -> Fraction | None:
        """The affine value ``a/b``, or None for the point at infinity."""
        return None if self.b == 0 else Fraction(self.a, self.b)

    def sort_key(self) -> tuple:
        # Finite points in increasing value, then infinity last.
        return (1,) if self.b == 0 else (0, Fraction(self.a, self.b))

    def __lt__(self, other: "P1Point") -> bool:
        return self.sort_key() < other.sort_key()

    def __repr__(self) -> str:
        return f"({self.a}:{self.b})"


@dataclass(frozen=True, order=False)
class P2Point:
    """A rational point ``(a : b : c)`` of the projective plane."""

    a: int
    b: int
    c: int

    def __post_init__(self) -> None:
        a, b, c = _reduced((int(self.a), int(self.b), int(self.c)), "P2 point")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)

    @classmethod
    def from_affine(cls, x: int | Fraction, y: int | Fraction) -> "P2Point":
        fx, fy = Fraction(x), Fraction(y)
        d = math.lcm(fx.denominator, fy.denominator)
        return cls(fx.numerator * (d // fx.denominator), fy.numerator * (d // fy.denominator), d)

    def coords(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)

    def sort_key(self) -> tuple[int, int, int]:
        return self.coords()

    def __lt__(self, other: "P2Point") -> bool:
        return self.coords() < other.coords()

    def __repr__(self) -> str:
        return f"({self.a}:{self.b}:{self.c})"


@dataclass(frozen=True)
class Line:
    """The line ``u x + v y + w z = 0``, coefficients reduced like a point."""

    u: int
    v: int
    w: int

    def __post_init__(self) -> None:
        u, v, w = _reduced((int(self.u), int(self.v), int(self.w)), "line")
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "v", v)
        object.__setattr__(self, "w", w)

    def coeffs(self) -> tuple[int, int, int]:
        return (self.u, self.v, self.w)

    def evaluate(self, p: P2Point) -> int:
        return self.u * p.a + self.v * p.b + self.w * p.c

    def contains(self, p: P2Point) -> bool:
        return self.evaluate(p) == 0

    def __repr__(self) -> str:
        return f"Line({self.u},{self.v},{self.w})"


def line_through(p: P2Point, q: P2Point) -> Line:
    """The unique line through two distinct points (cross product)."""
    if p == q:
        raise SamePoint(f"no unique line through {p} twice")
    u = p.b * q.c - p.c * q.b
    v = p.c * q.a - p.a * q.c
    w = p.a * q.b - p.b * q.a
    return Line(u, v, w)


def lines_meet(l1: Line, l2: Line) -> P2Point:
    """The intersection point of two distinct lines."""
    if l1 == l2:
        raise DegenerateConfiguration("two equal lines meet in a line, not a point")
    a = l1.v * l2.w - l1.w * l2.v
    b = l1.w * l2.u - l1.u * l2.w
    c = l1.u * l2.v - l1.v * l2.u
    return P2Point(a, b, c)


def are_collinear(p: P2Point, q: P2Point, r: P2Point) -> bool:
    return det(freeze([p.coords(), q.coords(), r.coords()])) == 0


# conics ---------------------------------------------------------------------

#: exponent triples for the ten cubic monomials, fixed once for all
#: vanishing/singularity matrices built below
_CUBIC_EXPONENTS: tuple[tuple[int, int, int], ...] = (
    (3, 0, 0), (0, 3, 0), (0, 0, 3),
    (2, 1, 0), (2, 0, 1), (1, 2, 0),
    (0, 2, 1), (1, 0, 2), (0, 1, 2),
    (1, 1, 1),
)


@dataclass(frozen=True)
class Conic:
    """A plane conic with integer coefficients ``(xx, yy, zz, xy, xz, yz)``."""

    xx: int
    yy: int
    zz: int
    xy: int
    xz: int
    yz: int

    def __post_init__(self) -> None:
        reduced = _reduced(
            (int(self.xx), int(self.yy), int(self.zz),
             int(self.xy), int(self.xz), int(self.yz)),
            "conic",
        )
        for name, val in zip(("xx", "yy", "zz", "xy", "xz", "yz"), reduced):
            object.__setattr__(self, name, val)

    def coeffs(self) -> tuple[int, int, int, int, int, int]:
        return (self.xx, self.yy, self.zz, self.xy, self.xz, self.yz)

    def evaluate_raw(self, x: int, y: int, z: int) -> int:
        return (self.xx * x * x + self.yy * y * y + self.zz * z * z
                + self.xy * x * y + self.xz * x * z + self.yz * y * z)

    def evaluate(self, p: P2Point) -> int:
        return self.evaluate_raw(p.a, p.b, p.c)

    def contains(self, p: P2Point) -> bool:
        return self.evaluate(p) == 0

    def is_smooth(self) -> bool:
        """Smooth iff the (doubled) symmetric matrix has nonzero determinant."""
        m = freeze([
            [2 * self.xx, self.xy, self.xz],
            [self.xy, 2 * self.yy, self.yz],
            [self.xz, self.yz, 2 * self.zz],
        ])
        return det(m) != 0


def _conic_row(x: int, y: int, z: int) -> tuple[int, ...]:
    return (x * x, y * y, z * z, x * y, x * z, y * z)


def _cubic_row(x: int, y: int, z: int) -> tuple[int, ...]:
    return tuple(x**i * y**j * z**k for i, j, k in _CUBIC_EXPONENTS)


def _cubic_gradient_rows(x: int, y: int, z: int) -> list[tuple[int, ...]]:
    def partial(axis: int) -> tuple[int, ...]:
        out = []
        for exps in _CUBIC_EXPONENTS:
            e = exps[axis]
            if e == 0:
                out.append(0)
                continue
            shifted = list(exps)
            shifted[axis] -= 1
            i, j, k = shifted
            out.append(e * x**i * y**j * z**k)
        return tuple(out)

    return [partial(0), partial(1), partial(2)]


def is_general_position(points: list[P2Point] | tuple[P2Point, ...]) -> bool:
    """Whether up to 8 plane points are in general position.

    General position means: no three collinear, no six on a conic, and no
    eight on a cubic that is singular at one of them.  Each condition is a
    rank check on an exact integer matrix of monomial values, so there is
    no tolerance anywhere.
    """
    pts = list(points)
    if len(pts) > 8:
        raise TooManyPoints(f"general position is only defined here for <= 8 points, got {len(pts)}")
    if len(set(pts)) != len(pts):
        raise DuplicatePoint("repeated point in general-position test")
    for p, q, r in itertools.combinations(pts, 3):
        if are_collinear(p, q, r):
            return False
    if len(pts) >= 6:
        for sub in itertools.combinations(pts, 6):
            m = freeze([_conic_row(*p.coords()) for p in sub])
            if det(m) == 0:
                return False
    if len(pts) == 8:
        # A cubic through all eight, singular at the chosen one, is a
        # nonzero kernel vector of the 10 x 10 system below.
        for singular_at in pts:
            # 7 vanishing rows + 3 gradient rows; vanishing at the singular
            # point itself follows from the gradient by Euler's relation.
            rows = [_cubic_row(*p.coords()) for p in pts if p != singular_at]
            rows.extend(_cubic_gradient_rows(*singular_at.coords()))
            if det(freeze(rows)) == 0:
                return False
    return True


# Moebius transformations ------------------------------------------------------

@dataclass(frozen=True)
class Mobius:
    """An element of PGL(2, Q) as a reduced integer 2 x 2 matrix.

    Acts on column coordinates: ``(a : b) -> (m00 a + m01 b : m10 a + m11 b)``,
    i.e. on affine values as ``t -> (m00 t + m01) / (m10 t + m11)``.
    """

    matrix: Mat

    def __post_init__(self) -> None:
        rows = freeze(self.matrix)
        if len(rows) != 2 or any(len(r) != 2 for r in rows):
            raise ValueError("a Moebius map needs a 2 x 2 matrix")
        flat = _reduced(rows[0] + rows[1], "Moebius map")
        m = ((flat[0], flat[1]), (flat[2], flat[3]))
        if m[0][0] * m[1][1] - m[0][1] * m[1][0] == 0:
            raise ValueError("singular matrix does not define a Moebius map")
        object.__setattr__(self, "matrix", m)

    @classmethod
    def identity(cls) -> "Mobius":
        return cls(((1, 0), (0, 1)))

    @classmethod
    def from_coeffs(cls, a: int, b: int, c: int, d: int) -> "Mobius":
        """The map ``t -> (a t + b) / (c t + d)``."""
        return cls(((a, b), (c, d)))

    def is_identity(self) -> bool:
        return self.matrix == ((1, 0), (0, 1))

    def apply(self, p: P1Point) -> P1Point:
        (m00, m01), (m10, m11) = self.matrix
        return P1Point(m00 * p.a + m01 * p.b, m10 * p.a + m11 * p.b)

    def compose(self, other: "Mobius") -> "Mobius":
        """The map ``self after other``."""
        (a, b), (c, d) = self.matrix
        (e, f), (g, h) = other.matrix
        return Mobius(((a * e + b * g, a * f + b * h),
                       (c * e + d * g, c * f + d * h)))

    def __matmul__(self, other: "Mobius") -> "Mobius":
        return self.compose(other)

    def inverse(self) -> "Mobius":
        (a, b), (c, d) = self.matrix
        return Mobius(((d, -b), (-c, a)))

    def sort_key(self) -> tuple[int, ...]:
        return self.matrix[0] + self.matrix[1]

    def __repr__(self) -> str:
        (a, b), (c, d) = self.matrix
        return f"Mobius[{a},{b};{c},{d}]"


def _det2(p: P1Point, q: P1Point) -> int:
    return p.a * q.b - p.b * q.a


def _basis_to_triple(triple: tuple[P1Point, P1Point, P1Point]) -> Mat:
    """A matrix sending (0 : 1), (1 : 1), (1 : 0) to the given triple."""
    p1, p2, p3 = triple
    lam = _det2(p2, p1)
    mu = _det2(p3, p2)
    # columns: lam * p3 and mu * p1
    return ((lam * p3.a, mu * p1.a), (lam * p3.b, mu * p1.b))


def mobius_from_triples(
    src: tuple[P1Point, P1Point, P1Point],
    dst: tuple[P1Point, P1Point, P1Point],
) -> Mobius:
    """The unique Moebius map sending the first ordered triple to the second."""
    for name, triple in (("source", src), ("destination", dst)):
        if len(set(triple)) != 3:
            raise DegenerateTriple(f"{name} triple {triple} has a repeated point")
    bs = _basis_to_triple(src)
    bd = _basis_to_triple(dst)
    (a, b), (c, d) = bs
    adj = ((d, -b), (-c, a))
    m = Mobius((
        (bd[0][0] * adj[0][0] + bd[0][1] * adj[1][0],
         bd[0][0] * adj[0][1] + bd[0][1] * adj[1][1]),
        (bd[1][0] * adj[0][0] + bd[1][1] * adj[1][0],
         bd[1][0] * adj[0][1] + bd[1][1] * adj[1][1]),
    ))
    assert all(m.apply(s) == t for s, t in zip(src, dst))
    return m


def project_from(q: P2Point, p: P2Point) -> P1Point:
    """The image of ``p`` in the pencil of lines through the center ``q``.

    The chart drops the highest nonzero coordinate of ``q``; concretely,
    with ``i`` that index and ``j1 < j2`` the two others, ``p`` maps to
    ``(q_i p_j1 - q_j1 p_i : q_i p_j2 - q_j2 p_i)``.  For the standard
    center ``(0 : 0 : 1)`` this is ``(x : y : z) -> (x : y)``.
    """
    if p == q:
        raise SamePoint("cannot project the center from itself")
    qc, pc = q.coords(), p.coords()
    i = max(k for k in range(3) if qc[k] != 0)
    j1, j2 = (k for k in range(3) if k != i)
    return P1Point(qc[i] * pc[j1] - qc[j1] * pc[i], qc[i] * pc[j2] - qc[j2] * pc[i])


def intersect_line_conic(line: Line, conic: Conic) -> tuple[P2Point, ...]:
    """The rational intersection points, tangency giving a single point.

    The line is parametrized exactly and the restricted quadratic solved
    over Z; an irrational pair of solutions raises NonRationalIntersection
    and a line contained in the conic raises LineInConic.
    """
    lc = line.coeffs()
    i = max(k for k in range(3) if lc[k] != 0)
    j1, j2 = (k for k in range(3) if k != i)

    def spanning(j: int) -> tuple[int, int, int]:
        v = [0, 0, 0]
        v[j] = lc[i]
        v[i] = -lc[j]
        return tuple(v)

    v1, v2 = spanning(j1), spanning(j2)
    a = conic.evaluate_raw(*v1)
    c = conic.evaluate_raw(*v2)
    both = tuple(x + y for x, y in zip(v1, v2))
    b = conic.evaluate_raw(*both) - a - c

    if a == 0 and b == 0 and c == 0:
        raise LineInConic(f"{line} is a component of the conic")

    roots: list[tuple[int, int]]
    if a == 0 and b == 0:
        roots = [(1, 0)]
    elif a == 0:
        roots = [(1, 0), (-c, b)]
    else:
        disc = b * b - 4 * a * c
        if disc < 0:
            raise NonRationalIntersection(f"{line} misses the conic over Q")
        s = math.isqrt(disc)
        if s * s != disc:
            raise NonRationalIntersection(
                f"{line} meets the conic at conjugate irrational points")
        if disc == 0:
            roots = [(-b, 2 * a)]
        else:
            roots = [(-b + s, 2 * a), (-b - s, 2 * a)]

    points = {
        P2Point(*(s * x + t * y for x, y in zip(v1, v2)))
        for s, t in roots
    }
    return tuple(sorted(points, key=P2Point.sort_key))
