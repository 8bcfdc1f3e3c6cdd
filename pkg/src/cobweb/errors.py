"""Exception hierarchy shared by every cobweb module."""


class CobwebError(Exception):
    """Base class for all errors raised by this package."""


class SpecParseError(CobwebError, ValueError):
    """A sequence spec string is malformed."""

    def __init__(self, message, token=None):
        super().__init__(message)
        self.token = token


class DomainError(CobwebError, ValueError):
    """Input is well formed but violates a mathematical precondition."""


class RangeError(CobwebError, IndexError):
    """An index or vertex lies outside the object it addresses."""


class ResourceError(CobwebError, RuntimeError):
    """A computation would exceed its configured size cap."""

    def __init__(self, message, cap=None, required=None):
        super().__init__(message)
        self.cap = cap
        self.required = required


class InconsistencyError(CobwebError, AssertionError):
    """Two routes that must agree produced different values."""
