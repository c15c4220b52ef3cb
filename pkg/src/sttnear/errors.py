"""Exception hierarchy shared by every module in the package."""


class SttError(Exception):
    """Base class for all errors raised by :mod:`sttnear`."""


class DomainError(SttError, ValueError):
    """An argument lies outside the domain of the operation (bad index, n < 2, ...)."""


class UnsupportedStructureError(DomainError):
    """The matrix has a structure the theory does not cover (sigma == 0)."""


class NotDefiniteError(DomainError):
    """Raised where a definite matrix is required; carries the offending eigenvalue."""

    def __init__(self, message, eigenvalue):
        super().__init__(message)
        self.eigenvalue = eigenvalue


class ResourceError(SttError, RuntimeError):
    """A dense realization would exceed the configured size cap."""
