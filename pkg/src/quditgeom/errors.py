"""Exception types shared across the package."""


class DimensionError(ValueError):
    """Raised when a Hilbert-space dimension or spin value is unusable."""


class PositivityError(ValueError):
    """Raised when a vector or matrix fails a positivity constraint.

    Attributes
    ----------
    component : int or None
        1-based index of the offending component, when known.
    value : float or None
        The offending value.
    """

    def __init__(self, message, component=None, value=None):
        super().__init__(message)
        self.component = component
        self.value = value
