""" Sampling Failed Error Definition """

from .toolkit_error import ToolkitError


class SamplingFailedError(ToolkitError):
    """Raised when rejection sampling hits its retry cap."""
