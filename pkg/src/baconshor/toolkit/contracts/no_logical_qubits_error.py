""" No Logical Qubits Error Definition """

from .toolkit_error import ToolkitError


class NoLogicalQubitsError(ToolkitError):
    """Raised when an operation needs k >= 1 but the code encodes nothing."""
