""" GBS Code Definition """

from .base_model import BaseModel
from .bit_matrix import BitMatrix
from .subsystem_code import SubsystemCode


class GBSCode(BaseModel):
    """
    GBS Code
    A generalized Bacon-Shor code built from a binary matrix: one qubit per nonzero
    entry, indexed row-major, layer 0.

    Attributes
    ----------
    matrix: BitMatrix
        The defining matrix A.
    code: SubsystemCode
        The derived code, carrying the cell layout.
    """

    matrix: BitMatrix
    code: SubsystemCode

    def qubit_at(self, row: int, col: int) -> int:
        """Qubit index of an occupied cell."""

        return self.code.layout.occupant((row, col, 0))
