"""Exception hierarchy.

Every domain failure raised by the library derives from :class:`RankMetricError`
so the CLI can map them to exit status 1 in one place.
"""


class RankMetricError(Exception):
    pass


# gf
class NotPrime(RankMetricError, ValueError):
    pass


class InvalidModulus(RankMetricError, ValueError):
    pass


class ReducibleModulus(InvalidModulus):
    pass


class UnsupportedSize(RankMetricError, ValueError):
    pass


class SpecMismatch(RankMetricError, TypeError):
    pass


class DivisionByZero(RankMetricError, ZeroDivisionError):
    pass


# matfq
class ShapeMismatch(RankMetricError, ValueError):
    pass


class OutOfRange(RankMetricError, IndexError):
    pass


class DependentBasis(RankMetricError, ValueError):
    pass


# ferrers / echelon
class BadIndex(RankMetricError, IndexError):
    pass


class PinnedMismatch(RankMetricError, ValueError):
    pass


class IncompleteFill(RankMetricError, ValueError):
    pass


class ExtraCell(RankMetricError, ValueError):
    pass


# codes / fdcodes
class TooFewCodewords(RankMetricError, ValueError):
    pass


class BadParams(RankMetricError, ValueError):
    pass


class DependentPoints(RankMetricError, ValueError):
    pass


class SupportViolation(RankMetricError, ValueError):
    def __init__(self, cell, message=None):
        self.cell = cell
        super().__init__(message or f"nonzero entry outside the diagram at cell {cell}")


class ConsistencyViolation(RankMetricError, AssertionError):
    pass


class PrematureCall(RankMetricError, ValueError):
    pass


# search
class TooLarge(RankMetricError, ValueError):
    pass


# io
class FormatError(RankMetricError, ValueError):
    pass
