""" Out Of Range Error Definition """

from .toolkit_error import ToolkitError


class OutOfRangeError(ToolkitError):
    """OutOfRangeError"""
