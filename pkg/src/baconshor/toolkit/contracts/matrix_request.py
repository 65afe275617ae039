""" Matrix Request Definition """

from typing import Literal, Optional

from pydantic import BaseModel


class MatrixRequest(BaseModel):
    """
    Matrix Request
    HTTP body carrying a binary matrix and analysis options.

    Attributes
    ----------
    matrix: list[list[int]]
        Rows of 0/1 entries.
    oracle: Literal["none", "full", "bounded"]
        Which distance oracle to run (analyze only).
    w_max: Optional[int]
        Weight limit for the bounded oracle.
    cap: Optional[int]
        Enumeration cap override.
    """

    matrix: list[list[int]]
    oracle: Literal["none", "full", "bounded"] = "none"
    w_max: Optional[int] = None
    cap: Optional[int] = None
