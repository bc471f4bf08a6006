"""Exception types raised across the package.

Every error derives from :class:`KneadingError`, itself a ``ValueError``, so
callers that only care about bad input can catch ``ValueError``.
"""


class KneadingError(ValueError):
    pass


class ZeroDenominator(KneadingError, ZeroDivisionError):
    pass


class NegativeRadicand(KneadingError):
    pass


class SingularMatrix(KneadingError):
    pass


class ProjectivePole(KneadingError):
    pass


class NoRootInInterval(KneadingError):
    pass


class RationalRoot(KneadingError):
    pass


class OutOfDomain(KneadingError):
    pass


class InvalidDigit(KneadingError):
    pass


class StepBudgetExceeded(KneadingError):
    pass


class NoValidRoot(KneadingError):
    pass


class RationalFixedPoint(KneadingError):
    pass


class NotQuadratic(KneadingError):
    pass


class ParseError(KneadingError):
    def __init__(self, message, column=None):
        self.column = column
        if column is not None:
            message = f"{message} (column {column})"
        super().__init__(message)


class PartitionError(KneadingError):
    """Base for validation failures of a finite partition.

    ``index`` names the offending position in Q (or in the sign list), when
    there is one.
    """

    def __init__(self, message, index=None):
        self.index = index
        super().__init__(message)


class NotSorted(PartitionError):
    pass


class BadEndpoints(PartitionError):
    pass


class TooFewPoints(PartitionError):
    pass


class LengthMismatch(PartitionError):
    pass


class BadSign(PartitionError):
    pass


class NotUnimodular(PartitionError):
    def __init__(self, message, index, determinant):
        self.determinant = determinant
        super().__init__(message, index)
