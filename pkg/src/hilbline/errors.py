"""Exception hierarchy shared by all modules."""


class HilbError(Exception):
    """Base class for every error raised by hilbline."""


class RingMismatchError(HilbError, TypeError):
    """Operands live in different rings."""


class PolySyntaxError(HilbError, ValueError):
    def __init__(self, message, pos):
        super().__init__(f"{message} at position {pos}")
        self.pos = pos


class UnknownVariableError(HilbError, ValueError):
    pass


class MissingImageError(HilbError, KeyError):
    pass


class BudgetExceeded(HilbError, RuntimeError):
    """A reduction/step budget ran out before the computation finished."""


class UnsupportedRingError(HilbError, ValueError):
    """The operation needs a finite(-dimensional) ring and did not get one."""


class PreconditionError(HilbError, ValueError):
    pass


class NotSymmetricError(PreconditionError):
    pass


class NotLocalError(PreconditionError):
    """Tuple entries with nonzero residue: not a local homomorphism."""


class VerificationError(HilbError, AssertionError):
    """An internally produced certificate failed its own re-check."""
