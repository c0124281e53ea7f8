"""Exception taxonomy shared by every module of the package.

Each failure mode gets its own class so callers can match precisely
instead of parsing messages.  Constructors are the plain Exception
ones; messages carry the offending data when that helps debugging.
"""


class CremonaError(Exception):
    """Base class for all errors raised by this package."""


# exact projective geometry ------------------------------------------------

class TooManyPoints(CremonaError):
    """More points than a predicate supports (general position caps at 8)."""


class DuplicatePoint(CremonaError):
    """A point list that must consist of distinct points repeats one."""


class SamePoint(CremonaError):
    """Two arguments that must be distinct points coincide."""


class DegenerateTriple(CremonaError):
    """A triple meant to pin down a Moebius map contains a repeat."""


class NonRationalIntersection(CremonaError):
    """An intersection exists over an extension field but not over Q."""


class LineInConic(CremonaError):
    """The line is a component of the conic, so the intersection is not finite."""


# Picard lattices -----------------------------------------------------------

class DimensionMismatch(CremonaError):
    """A divisor vector has the wrong length for the lattice."""


class NonIntegralGenus(CremonaError):
    """Adjunction gives a half-integer, i.e. the class is not honest."""


class UnsupportedRank(CremonaError):
    """The requested computation is only available for a bounded rank."""


class NotIsometry(CremonaError):
    """A proposed action matrix does not preserve the intersection form."""


class MovesCanonicalClass(CremonaError):
    """A proposed action matrix does not fix the canonical class."""


class GroupClosureCapExceeded(CremonaError):
    """Closing the generator set under products passed the element cap."""


class NotClosedUnderAction(CremonaError):
    """An orbit computation escaped the supplied set of classes."""


# square classes and ramification data --------------------------------------

class OddCardinality(CremonaError):
    """A point set that must have even size has odd size."""


class CoverageViolation(CremonaError):
    """Some point of the union is covered once or three times, not 0 or 2."""


class TooSmall(CremonaError):
    """A branch set has fewer than two points."""


class TooFewPoints(CremonaError):
    """A canonical form or stabilizer needs at least three support points."""


# bundle constructions -------------------------------------------------------

class OddDelta(CremonaError):
    """An exceptional-bundle branch set has odd cardinality."""


class TooFew(CremonaError):
    """An exceptional-bundle branch set has fewer than two points."""


class DegenerateConfiguration(CremonaError):
    """Input curves violate the transversality the construction needs."""


class QOnConfiguration(CremonaError):
    """The projection center sits on one of the configuration curves."""


class AlignmentViolation(CremonaError):
    """Two blown-up points project to the same fiber, or to the reference fiber."""


# classifier -----------------------------------------------------------------

class InvalidDescriptor(CremonaError):
    """A surface descriptor is malformed or uses an unknown label."""


class NotApplicable(CremonaError):
    """The requested invariant is undefined for this verdict."""


class NotAMoriFibration(CremonaError):
    """Link feasibility is only defined on maximal (group, fibration) pairs."""
