""" Negative Count Error Definition """

from .toolkit_error import ToolkitError


class NegativeCountError(ToolkitError):
    """Raised when derived qubit counts are inconsistent (internal error)."""
