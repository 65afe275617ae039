""" Bound Report Definition """

from .base_model import BaseModel


class BoundReport(BaseModel):
    """
    Bound Report
    The three parameter inequalities evaluated in exact integer arithmetic.

    Attributes
    ----------
    n, k, d_row, d_col, d: int
        Code parameters.
    square_passes: bool
        d^2 <= d_row * d_col <= n.
    square_slack: int
        n - d_row * d_col.
    refined_passes: bool
        2 * d_row * d_col * (2^k - 1) <= n * 2^k.
    refined_slack: int
        n * 2^k - 2 * d_row * d_col * (2^k - 1).
    product_passes: bool
        k * d <= n.
    product_slack: int
        n - k * d.
    """

    n: int
    k: int
    d_row: int
    d_col: int
    d: int
    square_passes: bool
    square_slack: int
    refined_passes: bool
    refined_slack: int
    product_passes: bool
    product_slack: int

    @property
    def passes(self) -> bool:
        return self.square_passes and self.refined_passes and self.product_passes
