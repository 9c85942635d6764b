"""Exception and warning types shared across the package."""


class RegsumError(Exception):
    """Base class for all package errors."""


class DomainError(RegsumError, ValueError):
    """Argument outside the mathematical domain of an operation."""


class PoleError(DomainError):
    """Evaluation requested exactly at a pole (e.g. zeta at s = 1)."""


class CapacityError(RegsumError, ValueError):
    """Index or size beyond a deliberate cost guard."""


class ArityError(RegsumError, ValueError):
    """Too few samples/arguments for the requested operation order."""


class ConvergenceError(RegsumError, RuntimeError):
    """A summation or extrapolation failed to converge within its budget."""


class CapabilityError(RegsumError, ValueError):
    """Requested combination is outside the implemented closed forms."""


class RedirectError(RegsumError, ValueError):
    """The requested route cannot evaluate this input; another operation can.

    Carries the name of the operation that handles the case (e.g. the
    integer branch for a parity-singular exponent).
    """

    def __init__(self, message: str, branch: str):
        super().__init__(message)
        self.branch = branch


class UnknownIdentityError(RegsumError, KeyError):
    """Identity name not present in the registry."""


class PrecisionLossWarning(UserWarning):
    """Evaluation close to a prefactor singularity; digits are lost."""
