"""Shared exception types."""


class NumericalError(RuntimeError):
    """A computation could not reach its accuracy contract."""

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual
