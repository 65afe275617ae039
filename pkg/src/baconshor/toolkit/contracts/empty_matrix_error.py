""" Empty Matrix Error Definition """

from .toolkit_error import ToolkitError


class EmptyMatrixError(ToolkitError):
    """Raised when a matrix has no nonzero entries."""
