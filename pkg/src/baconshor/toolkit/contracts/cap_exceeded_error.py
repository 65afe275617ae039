""" Cap Exceeded Error Definition """

from .toolkit_error import ToolkitError


class CapExceededError(ToolkitError):
    """Raised when an enumeration would exceed its configured cap."""
