"""Exception hierarchy.

Every domain failure raised by the library derives from :class:`MeasureError`
(itself a :class:`ValueError`), so callers can catch one type at the boundary.
"""


class MeasureError(ValueError):
    """Base class for all domain errors."""


# scalars
class IndeterminateSum(MeasureError):
    pass


# spaces and metrics
class DuplicateLabel(MeasureError):
    pass


class EmptySpace(MeasureError):
    pass


class MismatchedSpaces(MeasureError):
    pass


class UnknownPoint(MeasureError):
    pass


class NotAMap(MeasureError):
    pass


class IncompleteMetric(MeasureError):
    pass


class SymmetryViolation(MeasureError):
    pass


class TriangleViolation(MeasureError):
    pass


class DiameterExceedsOne(MeasureError):
    pass


class NonPositiveDistance(MeasureError):
    pass


# measures
class NotNormalized(MeasureError):
    pass


class NoAtoms(MeasureError):
    pass


class WeightAboveZero(MeasureError):
    pass


class NonFiniteTranslate(MeasureError):
    pass


class NonFiniteValue(MeasureError):
    pass


class EmptyProbeSet(MeasureError):
    pass


class InvalidSection(MeasureError):
    pass


# cone
class NotReachingTop(MeasureError):
    pass


class OutOfRange(MeasureError):
    pass


# monads
class KindMismatch(MeasureError):
    pass


class NotStrictlyIncreasing(MeasureError):
    pass


# convexity
class DimensionMismatch(MeasureError):
    pass


# input handling
class ParseError(MeasureError):
    pass


class SchemaError(MeasureError):
    def __init__(self, message, path="$"):
        super().__init__(f"{path}: {message}")
        self.path = path
