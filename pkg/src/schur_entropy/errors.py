"""Exception hierarchy shared by all modules."""


class SchurEntropyError(Exception):
    """Base class for library errors."""


class InvalidInput(SchurEntropyError, ValueError):
    """Malformed or out-of-domain input (bad prime, bad matrix text, ...)."""


class InvalidDimension(InvalidInput):
    pass


class PrecisionExhausted(SchurEntropyError, ArithmeticError):
    """Cancellation consumed every known p-adic digit."""

    def __init__(self, message: str, suggested_precision: int | None = None):
        super().__init__(message)
        self.suggested_precision = suggested_precision


class PadicDivisionByZero(SchurEntropyError, ZeroDivisionError):
    pass


class PreconditionError(SchurEntropyError):
    """An operation precondition on a well-formed input does not hold."""


class SingularMatrix(PreconditionError):
    pass


class NotAnEndomorphism(PreconditionError):
    pass


class InvalidEndo(PreconditionError):
    pass


class NotASublattice(PreconditionError):
    pass


class RingMismatch(PreconditionError):
    pass


class RootFindingFailure(SchurEntropyError, ArithmeticError):
    pass
