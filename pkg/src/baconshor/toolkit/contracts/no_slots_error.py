""" No Slots Error Definition """

from .toolkit_error import ToolkitError


class NoSlotsError(ToolkitError):
    """Raised when a layout has no free (cell, layer) slot left."""
