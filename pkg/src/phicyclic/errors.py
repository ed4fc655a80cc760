"""Exception types raised across the package."""


class PhiCyclicError(ValueError):
    pass


class NotPrime(PhiCyclicError):
    pass


class NotMonic(PhiCyclicError):
    pass


class Reducible(PhiCyclicError):
    pass


class NotIrreducible(PhiCyclicError):
    pass


class FieldMismatch(PhiCyclicError):
    pass


class DivisionByZero(PhiCyclicError, ZeroDivisionError):
    pass


class LeadingCoefficientNotUnit(PhiCyclicError):
    pass


class BothZero(PhiCyclicError):
    pass


class ZeroPolynomial(PhiCyclicError):
    pass


class TooLarge(PhiCyclicError):
    pass


class InvalidArgument(PhiCyclicError):
    pass


class DimensionMismatch(PhiCyclicError):
    pass


class ZeroConstantTerm(PhiCyclicError):
    pass


class NotDivisor(PhiCyclicError):
    pass


class NotSeparable(PhiCyclicError):
    pass


class TrivialCode(PhiCyclicError):
    pass


class InternalMismatch(AssertionError):
    """Two constructions that must agree did not. Indicates a bug."""


class NotInvertibleModQ(PhiCyclicError):
    pass


class Undecidable(PhiCyclicError):
    pass


class VerificationFailed(PhiCyclicError):
    def __init__(self, clause, message):
        super().__init__(f"clause ({clause}): {message}")
        self.clause = clause


class InvalidParams(PhiCyclicError):
    def __init__(self, violations):
        super().__init__("; ".join(violations))
        self.violations = list(violations)


class Infeasible(PhiCyclicError):
    pass


class MaxRetriesExceeded(PhiCyclicError):
    pass


class BadShape(PhiCyclicError):
    pass


class ParseError(PhiCyclicError):
    pass
