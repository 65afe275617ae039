""" Index Out Of Range Error Definition """

from .toolkit_error import ToolkitError


class IndexOutOfRangeError(ToolkitError):
    """IndexOutOfRangeError"""
