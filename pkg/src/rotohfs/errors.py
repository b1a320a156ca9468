"""Exception types raised across the package.

Everything derived from :class:`InputValidationError` signals bad input and
maps to CLI exit code 2; anything else is a runtime failure (exit code 1).
"""


class InputValidationError(ValueError):
    """Base class for rejected inputs."""


class IncompatibleUnits(InputValidationError):
    pass


class NonPositiveInput(InputValidationError):
    pass


class SupercriticalCharge(InputValidationError):
    """Raised when (alpha Z)^2 >= kappa^2, i.e. no bound Dirac solution."""


class InvalidSpin(InputValidationError):
    pass


class InvalidState(InputValidationError):
    pass


class ZeroDenominator(InputValidationError):
    pass


class UnphysicalLifetime(InputValidationError):
    pass


class NegativeEnergy(InputValidationError):
    pass


class ZeroVelocity(InputValidationError):
    pass


class ZeroAdiabaticity(InputValidationError):
    pass


class ParseError(InputValidationError):
    def __init__(self, message, line=None, field=None):
        self.line = line
        self.field = field
        where = []
        if line is not None:
            where.append(f"line {line}")
        if field is not None:
            where.append(f"field {field!r}")
        if where:
            message = f"{message} ({', '.join(where)})"
        super().__init__(message)


class ValidationError(InputValidationError):
    def __init__(self, message, invariant=None):
        self.invariant = invariant
        if invariant is not None:
            message = f"{message} [invariant: {invariant}]"
        super().__init__(message)


class UnknownLevel(InputValidationError, KeyError):
    def __str__(self):
        return ValueError.__str__(self)
