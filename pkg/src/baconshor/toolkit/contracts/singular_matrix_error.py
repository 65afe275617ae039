""" Singular Matrix Error Definition """

from .toolkit_error import ToolkitError


class SingularMatrixError(ToolkitError):
    """SingularMatrixError"""
