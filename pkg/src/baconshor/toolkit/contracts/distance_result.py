""" Distance Result Definition """

from typing import Literal, Optional

from .base_model import BaseModel
from .pauli_op import PauliOp


class DistanceResult(BaseModel):
    """
    Distance Result

    Attributes
    ----------
    mode: Literal["full", "bounded"]
        Which oracle produced the result.
    value: Optional[int]
        The distance, when established.
    certified_lower_bound: int
        No dressed logical operator has weight <= this.
    witness: Optional[PauliOp]
        A dressed logical operator of weight `value`.
    enumerated: int
        Number of candidates the oracle examined.
    """

    mode: Literal["full", "bounded"]
    value: Optional[int] = None
    certified_lower_bound: int = 0
    witness: Optional[PauliOp] = None
    enumerated: int = 0
