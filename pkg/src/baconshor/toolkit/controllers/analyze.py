""" Analyze Controller Definition """

import logging
import time
from typing import Literal, Optional

from ..contracts.bit_matrix import BitMatrix
from ..contracts.distance_result import DistanceResult
from ..contracts.gbs_code import GBSCode
from ..contracts.property_violation_error import PropertyViolationError
from ..contracts.report import Report
from ..contracts.theoretical_params import TheoreticalParams
from ..services.bounds import evaluate_bounds
from ..services.gbs import build, theoretical_params
from ..services.subsystem import distance_bounded, distance_full
from .abstract_controller import AbstractController


def distance_summary(result: DistanceResult) -> dict:
    return {
        "mode": result.mode,
        "value": result.value,
        "certified_lower_bound": result.certified_lower_bound,
        "witness": None if result.witness is None else str(result.witness),
        "enumerated": result.enumerated,
    }


class AnalyzeController(AbstractController):
    """
    Analyze Controller
    Compares the parameters read off a matrix with the ones measured on its code.

    Methods
    -------
    execute(self, matrix: BitMatrix, oracle: str, w_max: Optional[int], cap: Optional[int]) -> Report
        Executes the command.
    """

    def execute(
        self,
        matrix: BitMatrix,
        oracle: Literal["none", "full", "bounded"] = "none",
        w_max: Optional[int] = None,
        cap: Optional[int] = None,
    ) -> Report:
        """
        Analyzes the generalized Bacon-Shor code of a matrix.

        Parameters
        ----------
        matrix: BitMatrix
            The matrix A.
        oracle: Literal["none", "full", "bounded"]
            Distance oracle to run on the derived code.
        w_max: Optional[int]
            Weight limit of the bounded oracle (defaults to the predicted distance).
        cap: Optional[int]
            Enumeration cap override.

        Returns
        -------
        report: Report
            Theoretical parameters, derived counts, oracle result and bound report.

        Raises
        ------
        PropertyViolationError
            When the oracle or the derived counts disagree with the theory.
        """

        limit: int = self.cap(cap)
        timings: dict[str, float] = {}
        start: float = time.perf_counter()
        params: TheoreticalParams = theoretical_params(matrix, cap=limit)
        gbs: GBSCode = build(matrix)
        timings["theory"] = time.perf_counter() - start

        results: dict = {
            "theoretical": params.dict(),
            "derived": {"n": gbs.code.n, "dim_s": gbs.code.dim_s, "k": gbs.code.k, "g": gbs.code.g},
            "bounds": evaluate_bounds(params.n, params.k, params.d_row, params.d_col).dict(),
        }
        if gbs.code.k != params.k or gbs.code.n != params.n:
            raise PropertyViolationError(f"derived [n={gbs.code.n}, k={gbs.code.k}] disagrees with {params}")

        if oracle != "none":
            start = time.perf_counter()
            if oracle == "full":
                result: DistanceResult = distance_full(gbs.code, cap=limit)
            else:
                result = distance_bounded(gbs.code, params.d if w_max is None else w_max)
            timings["oracle"] = time.perf_counter() - start
            results["oracle"] = distance_summary(result)
            if result.value is not None and result.value != params.d:
                raise PropertyViolationError(f"oracle distance {result.value} != predicted {params.d}")
            if result.value is None and result.certified_lower_bound >= params.d:
                raise PropertyViolationError(f"no logical operator up to weight {result.certified_lower_bound}")

        logging.debug("analyze: [[%s, %s, %s]] oracle=%s", params.n, params.k, params.d, oracle)
        return Report(
            command="analyze",
            arguments={"oracle": oracle, "w_max": w_max, "cap": limit},
            results=results,
            timings=timings,
            summary=f"[{params.n}, {params.k}, {params.d}]",
        )
