""" Property Violation Error Definition """

from .toolkit_error import ToolkitError


class PropertyViolationError(ToolkitError):
    """Raised when a checked identity or bound fails."""
