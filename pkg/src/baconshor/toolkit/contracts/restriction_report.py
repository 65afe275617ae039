""" Restriction Report Definition """

from typing import Optional

from .base_model import BaseModel


class RestrictionReport(BaseModel):
    """
    Restriction Report
    Outcome of restricting a local code's gauge group to a region.

    Attributes
    ----------
    region_size: int
        |M|.
    boundary_size: int
        |∂M| for the interaction range used.
    interaction_range: int
        The range r.
    d: int
        Distance of the full code.
    k_restricted: int
        Logical qubits of the code with gauge group G_M.
    d_restricted: Optional[int]
        Its distance, when k_restricted >= 1 and the oracle was feasible.
    conclusive: bool
        False when the inner oracle exceeded the cap.
    holds: bool
        k_restricted = 0 or d_restricted >= d - |∂M| (True when inconclusive).
    """

    region_size: int
    boundary_size: int
    interaction_range: int
    d: int
    k_restricted: int
    d_restricted: Optional[int] = None
    conclusive: bool = True
    holds: bool = True
