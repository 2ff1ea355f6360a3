"""Exception types shared across the package."""


class MvdError(Exception):
    """Base class for all package errors."""


class FormatError(MvdError):
    """Malformed table file or structured document."""


class TableError(MvdError):
    """Invalid table construction or operation argument."""


class TreeError(MvdError):
    """Invalid decision tree construction or use."""


class MeasureError(MvdError):
    """Invalid complexity measure or missing attribute weight."""


class UnboundedMeasureError(MeasureError):
    """A bounded measure is required; weighted-max is only partially bounded."""


class CoverError(MvdError):
    """A word set does not satisfy the cover requirements."""


class ResourceLimitError(MvdError):
    """A configured size or search cap was exceeded."""

    def __init__(self, message: str, limit_name: str = "", limit_value: int = 0):
        super().__init__(message)
        self.limit_name = limit_name
        self.limit_value = limit_value
