class ToolkitError(ValueError):
    """Base class for every error raised by the toolkit."""


class ValidationFailed(ToolkitError):
    """A value violates an invariant checked at construction time."""


class DimensionMismatch(ToolkitError):
    pass


class NotHermitian(ValidationFailed):
    pass


class NotUnitary(ValidationFailed):
    pass
