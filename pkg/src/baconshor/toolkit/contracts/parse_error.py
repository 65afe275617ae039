""" Parse Error Definition """

from .toolkit_error import ToolkitError


class ParseError(ToolkitError):
    """Raised on malformed matrix, Pauli or code file input."""
