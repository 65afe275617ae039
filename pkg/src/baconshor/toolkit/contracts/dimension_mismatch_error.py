""" Dimension Mismatch Error Definition """

from .toolkit_error import ToolkitError


class DimensionMismatchError(ToolkitError):
    """DimensionMismatchError"""
