"""Exception types shared across the package."""


class DrdError(Exception):
    """Base class for all errors raised by this package."""


class InvalidSpecError(DrdError, ValueError):
    """A family spec has an unknown kind or out-of-range parameters."""


class InvalidArgumentsError(DrdError, ValueError):
    """Arguments violate an operation's precondition (size mismatch, bad index, ...)."""


class GraphParseError(DrdError, ValueError):
    """Malformed graph text. Carries the offending line or byte position."""

    def __init__(self, message: str, *, line: int | None = None, byte: int | None = None):
        where = ""
        if line is not None:
            where = f" (line {line})"
        elif byte is not None:
            where = f" (byte {byte})"
        super().__init__(message + where)
        self.line = line
        self.byte = byte


class ResourceLimitError(DrdError):
    """The instance exceeds a stated size cap for the requested operation."""


class ExcludedCaseError(DrdError):
    """The parameters fall in a case the formula explicitly excludes."""


class WrongFormulaError(DrdError):
    """The inputs belong to a different formula of the catalog."""
