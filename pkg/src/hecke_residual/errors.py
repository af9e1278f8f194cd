"""Exception hierarchy shared by the library and the command line."""


class HeckeResidualError(Exception):
    """Base class for every error raised on purpose by this package."""

    exit_code = 1


class ConfigurationError(HeckeResidualError):
    """Unsupported root system type, rank or datum."""


class DomainError(HeckeResidualError):
    """An argument lies outside the domain of an operation."""


class NotResidualError(DomainError):
    """A family was specialised at a parameter where it stops being residual."""

    def __init__(self, message, hyperplanes=()):
        super().__init__(message)
        self.hyperplanes = tuple(hyperplanes)


class InvalidJumpsError(DomainError):
    """A jump list does not come from any weighted diagram."""


class UnsupportedError(HeckeResidualError):
    """The request is well formed but outside what is implemented."""


class InvariantViolation(HeckeResidualError):
    """An internal consistency check failed."""

    exit_code = 3
