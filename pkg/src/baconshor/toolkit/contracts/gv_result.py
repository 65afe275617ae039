""" GV Result Definition """

from typing import Optional

from .base_model import BaseModel
from .bit_matrix import BitMatrix


class GVResult(BaseModel):
    """
    GV Result

    Attributes
    ----------
    found: bool
        Whether a matrix met the target.
    matrix: Optional[BitMatrix]
        The first successful matrix by trial index.
    trials_used: int
        Trials up to and including the success (the whole budget otherwise).
    d_row: Optional[int]
        Row distance of the returned matrix.
    d_col: Optional[int]
        Column distance of the returned matrix.
    target: int
        ceil(beta * m).
    seed: int
        The query seed.
    rng_algorithm: str
        Identifier of the bit generator.
    """

    found: bool
    matrix: Optional[BitMatrix] = None
    trials_used: int
    d_row: Optional[int] = None
    d_col: Optional[int] = None
    target: int
    seed: int
    rng_algorithm: str
