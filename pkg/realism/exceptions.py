from matcore.exceptions import ToolkitError, ValidationFailed


class MaximallyMixedError(ToolkitError):
    """
    The state is maximally mixed: no observable pair separates QM from an HVM.

    This is a verdict rather than a failure; ``deltas`` holds p_i - 1/n.
    """

    def __init__(self, deltas):
        self.deltas = deltas
        super().__init__(f"State is maximally mixed (max |p_i - 1/n| = {max(abs(d) for d in deltas):.3g})")


class NonOrthogonalState(ValidationFailed):
    pass


class NotTwoValued(ValidationFailed):
    pass
