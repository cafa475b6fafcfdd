"""Exception hierarchy.

Validation failures (exit code 1) subclass ``ValueError``; numerical failures
(exit code 2) subclass ``RuntimeError``; output failures raise ``OutputError``
and failed verification checks raise ``ChecksFailedError`` (both exit code 2).
"""


class YamaconeError(Exception):
    """Base class for all library errors."""


class DomainError(YamaconeError, ValueError):
    """An argument lies outside the domain of the operation."""


class DegenerateRootError(DomainError):
    """The indicial equation has a (numerically) double root."""


class ConfigError(YamaconeError, ValueError):
    """A scenario or settings file could not be parsed or validated."""

    def __init__(self, message: str, *, line: int | None = None, field: str | None = None):
        self.line = line
        self.field = field
        prefix = ""
        if line is not None:
            prefix = f"line {line}: "
        elif field is not None:
            prefix = f"{field}: "
        super().__init__(prefix + message)


class NumericalError(YamaconeError, RuntimeError):
    """A numerical procedure failed."""


class SingularDenominatorError(NumericalError):
    """A series recursion hit a vanishing denominator."""


class StepSizeUnderflowError(NumericalError):
    """The adaptive step size fell below the admissible floor."""


class MaxStepsExceededError(NumericalError):
    """The integrator exhausted its step budget."""


class InsufficientSamplesError(NumericalError):
    """Too few samples to fit an exponent."""


class OutputError(YamaconeError, OSError):
    """An output file could not be written."""


class ChecksFailedError(YamaconeError):
    """One or more verification checks failed."""


VALIDATION_ERRORS: tuple[type[Exception], ...] = (DomainError, ConfigError)
INTERNAL_ERRORS: tuple[type[Exception], ...] = (NumericalError, OutputError, ChecksFailedError)
