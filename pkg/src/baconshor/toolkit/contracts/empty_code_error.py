""" Empty Code Error Definition """

from .toolkit_error import ToolkitError


class EmptyCodeError(ToolkitError):
    """Raised when a code has no nonzero codewords to minimize over."""
