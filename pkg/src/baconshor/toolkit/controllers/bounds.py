""" Bounds Controller Definition """

import logging
from typing import Optional

from ..contracts.bit_matrix import BitMatrix
from ..contracts.bound_report import BoundReport
from ..contracts.profile import Profile
from ..contracts.report import Report
from ..services.bounds import check_bounds, profile, verify_feasibility
from .abstract_controller import AbstractController


class BoundsController(AbstractController):
    """
    Bounds Controller
    Evaluates the parameter bounds and the profile constraints of a matrix.

    Methods
    -------
    execute(self, matrix: BitMatrix, cap: Optional[int] = None) -> Report
        Executes the command.
    """

    def execute(self, matrix: BitMatrix, cap: Optional[int] = None) -> Report:
        """
        Checks the three inequalities and the feasibility of the matrix profile.

        Parameters
        ----------
        matrix: BitMatrix
            The matrix A.
        cap: Optional[int]
            Enumeration cap override.

        Returns
        -------
        report: Report
            passed is False when any bound or profile constraint fails.
        """

        bounds: BoundReport = check_bounds(matrix, cap=self.cap(cap))
        matrix_profile: Profile = profile(matrix)
        feasible: bool = verify_feasibility(matrix_profile, bounds.n, bounds.d_row, bounds.d_col)
        logging.debug("bounds: passes=%s feasible=%s", bounds.passes, feasible)
        return Report(
            command="bounds",
            arguments={"cap": self.cap(cap)},
            results={
                "bounds": {**bounds.dict(), "passes": bounds.passes},
                "profile": {
                    "k": matrix_profile.k,
                    "r": matrix_profile.r,
                    "c": matrix_profile.c,
                    "M": matrix_profile.M.to_strings(),
                    "row_indices": list(matrix_profile.row_indices),
                    "col_indices": list(matrix_profile.col_indices),
                },
                "feasible": feasible,
            },
            passed=bounds.passes and feasible,
            summary=f"[{bounds.n}, {bounds.k}, {bounds.d}] passes={bounds.passes} feasible={feasible}",
        )
