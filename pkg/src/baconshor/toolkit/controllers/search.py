""" Search Controller Definition """

import logging
import time
from typing import Optional

from ..contracts.bit_matrix import BitMatrix
from ..contracts.gv_query import GVQuery
from ..contracts.gv_result import GVResult
from ..contracts.gv_survey import GVSurvey
from ..contracts.report import Report
from ..services.search import gv_search, gv_survey
from .abstract_controller import AbstractController


class SearchController(AbstractController):
    """
    Search Controller
    Random fixed-rank search for matrices with large row and column distance.

    Methods
    -------
    execute(self, query: GVQuery, survey: bool, threads: Optional[int], cap: Optional[int]) -> tuple[Report, ...]
        Executes the command.
    """

    def execute(
        self, query: GVQuery, survey: bool = False, threads: Optional[int] = None, cap: Optional[int] = None
    ) -> tuple[Report, Optional[BitMatrix]]:
        """
        Runs the search, or the survey of the whole budget.

        Parameters
        ----------
        query: GVQuery
            Search parameters, seed included.
        survey: bool
            Run every trial and report the success rate instead.
        threads: Optional[int]
            Worker threads (settings by default).
        cap: Optional[int]
            Enumeration cap override.

        Returns
        -------
        report, matrix: tuple[Report, Optional[BitMatrix]]
            The report and the first successful matrix, if any.
        """

        workers: int = self.settings.threads if threads is None else threads
        arguments: dict = {**query.dict(), "survey": survey, "cap": self.cap(cap)}
        start: float = time.perf_counter()
        if survey:
            outcome: GVSurvey = gv_survey(query, threads=workers, cap=self.cap(cap))
            logging.debug("search: survey %s/%s successes", outcome.successes, outcome.trials)
            return (
                Report(
                    command="search",
                    arguments=arguments,
                    results=outcome.dict(),
                    timings={"search": time.perf_counter() - start},
                    summary=f"success rate {outcome.rate:.4f}",
                ),
                None,
            )
        result: GVResult = gv_search(query, threads=workers, cap=self.cap(cap))
        logging.debug("search: found=%s after %s trials", result.found, result.trials_used)
        results: dict = result.dict(exclude={"matrix"})
        results["matrix"] = None if result.matrix is None else result.matrix.to_strings()
        return (
            Report(
                command="search",
                arguments=arguments,
                results=results,
                timings={"search": time.perf_counter() - start},
                summary=f"found={result.found} trials_used={result.trials_used}",
            ),
            result.matrix,
        )
