""" Theoretical Params Definition """

from typing import Optional

from .base_model import BaseModel


class TheoreticalParams(BaseModel):
    """
    Theoretical Params
    [n, k, d] of a generalized Bacon-Shor code read off its matrix.

    Attributes
    ----------
    n: int
        |A|.
    k: int
        rank(A).
    d_row: Optional[int]
        Minimum distance of the row space (absent when k = 0).
    d_col: Optional[int]
        Minimum distance of the column space (absent when k = 0).
    d: Optional[int]
        min(d_row, d_col).
    """

    n: int
    k: int
    d_row: Optional[int] = None
    d_col: Optional[int] = None
    d: Optional[int] = None
