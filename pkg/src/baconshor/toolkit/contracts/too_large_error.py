""" Too Large Error Definition """

from .toolkit_error import ToolkitError


class TooLargeError(ToolkitError):
    """TooLargeError"""
