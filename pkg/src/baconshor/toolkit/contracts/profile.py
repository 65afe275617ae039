""" Profile Definition """

from .base_model import BaseModel
from .bit_matrix import BitMatrix


class Profile(BaseModel):
    """
    Profile
    Column-pattern multiplicities of the row and column generating matrices of a
    rank-k binary matrix.

    Patterns x in {0,1}^k are packed integers (bit a is coordinate a).

    Attributes
    ----------
    k: int
        rank(A).
    r: dict[int, int]
        r_x: columns of the row generating matrix equal to x.
    c: dict[int, int]
        c_x: columns of the column generating matrix equal to x.
    M: BitMatrix
        Invertible k x k change of basis between the two pattern labelings.
    row_indices: tuple[int, ...]
        The k independent rows chosen greedily.
    col_indices: tuple[int, ...]
        The k independent columns chosen greedily.
    """

    k: int
    r: dict[int, int]
    c: dict[int, int]
    M: BitMatrix
    row_indices: tuple[int, ...]
    col_indices: tuple[int, ...]
