"""Exception types shared by every module."""


class AdmPermError(Exception):
    """Base class for library errors."""


class ConfigurationError(AdmPermError, ValueError):
    """Bad input: unsupported family, non-dominant coweight, wrong dimension..."""


class GuardExceeded(AdmPermError, RuntimeError):
    """A size guard (group order, interval length, point budget) was hit."""


class ConsistencyError(AdmPermError, AssertionError):
    """An internal invariant failed; indicates a defect, not bad input."""
