""" Missing Layout Error Definition """

from .toolkit_error import ToolkitError


class MissingLayoutError(ToolkitError):
    """Raised when a geometric query is made on a code without a layout."""
