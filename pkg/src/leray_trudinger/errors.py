"""Exception hierarchy shared by all modules."""


class LTError(Exception):
    """Base class for errors raised by this package."""


class DomainError(LTError, ValueError):
    """An argument lies outside the domain of a function."""


class ConfigurationError(LTError, ValueError):
    """Invalid parameters for a family, optimizer or scenario."""


class NormalizationError(LTError, ArithmeticError):
    """A profile cannot be rescaled to unit Hardy difference."""


class IntegrandError(LTError, ArithmeticError):
    """An integrand returned a non-finite sample."""

    def __init__(self, message: str, t: float | None = None):
        super().__init__(message)
        self.t = t
