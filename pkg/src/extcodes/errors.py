"""Exception hierarchy shared by every module."""


class CodingError(Exception):
    """Base class for all library errors."""


class BudgetExceeded(CodingError):
    pass


class NonPrimitivePoly(CodingError):
    pass


class DivisionByZero(CodingError, ZeroDivisionError):
    pass


class NotASubfield(CodingError):
    pass


class ZeroElement(CodingError):
    pass


class NotCoprime(CodingError):
    pass


class EmptyLength(CodingError):
    pass


class ZeroCode(CodingError):
    pass


class InconsistentInput(CodingError):
    pass


class MomentPreconditionViolated(CodingError):
    pass


class LengthMismatch(CodingError):
    pass


class PreconditionViolated(CodingError):
    pass


class MinDistanceOne(CodingError):
    pass


class NotADivisor(CodingError):
    pass


class FieldMismatch(CodingError):
    pass


class RangeError(CodingError):
    pass


class FieldTooSmall(CodingError):
    pass


class ZeroScale(CodingError):
    pass


class NotCharTwo(CodingError):
    pass


class DivisibilityViolated(CodingError):
    pass


class ReduciblePolynomial(CodingError):
    pass


class BadCharacteristic(CodingError):
    pass


class MissingAnchorPoints(CodingError):
    pass


class ReducibleBeta(CodingError):
    pass


class NotAdditiveSubgroup(CodingError):
    pass


class SpecViolated(CodingError):
    pass


class NonIntegralCount(CodingError):
    pass
