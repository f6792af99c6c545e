from matcore.exceptions import DimensionMismatch, ToolkitError, ValidationFailed


class IncompleteMeasurement(ValidationFailed):
    pass


class UnsupportedDimension(DimensionMismatch):
    """The request needs a two-dimensional A subsystem."""


class InconsistentDecompositions(ToolkitError):
    pass


class NotApplicable(ToolkitError):
    """The construction's precondition does not hold (e.g. no weak-locality basis)."""
