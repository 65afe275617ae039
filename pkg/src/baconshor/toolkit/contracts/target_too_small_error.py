""" Target Too Small Error Definition """

from .toolkit_error import ToolkitError


class TargetTooSmallError(ToolkitError):
    """Raised when padding targets fewer qubits than the code already has."""
