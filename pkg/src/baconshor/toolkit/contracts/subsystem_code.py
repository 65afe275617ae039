""" Subsystem Code Definition """

from typing import Optional

from .base_model import BaseModel
from .group_basis import GroupBasis
from .layout import Layout
from .pauli_op import PauliOp


class SubsystemCode(BaseModel):
    """
    Subsystem Code
    A gauge group together with everything derived from it.

    Attributes
    ----------
    n: int
        Qubit count.
    generators: tuple[PauliOp, ...]
        The gauge generators as supplied (kept for locality and export).
    gauge: GroupBasis
        G in canonical form.
    stabilizer: GroupBasis
        S = G ∩ C(G).
    k: int
        Logical qubits.
    g: int
        Gauge qubits.
    layout: Optional[Layout]
        Optional qubit placement.
    """

    n: int
    generators: tuple[PauliOp, ...]
    gauge: GroupBasis
    stabilizer: GroupBasis
    k: int
    g: int
    layout: Optional[Layout] = None

    @property
    def dim_s(self) -> int:
        return self.stabilizer.dim
