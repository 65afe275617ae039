""" Localize Controller Definition """

import logging
import time

from ..contracts.bit_matrix import BitMatrix
from ..contracts.local_code import LocalCode
from ..contracts.report import Report
from ..services.gbs import build
from ..services.gf2core import rank
from ..services.localize import check_locality, localize, pad_to
from .abstract_controller import AbstractController


class LocalizeController(AbstractController):
    """
    Localize Controller
    Turns the code of a matrix into a nearest-neighbour code on its grid.

    Methods
    -------
    execute(self, matrix: BitMatrix, pad: bool = False) -> tuple[Report, LocalCode]
        Executes the command.
    """

    def execute(self, matrix: BitMatrix, pad: bool = False) -> tuple[Report, LocalCode]:
        """
        Localizes, and optionally pads to two qubits per cell.

        Parameters
        ----------
        matrix: BitMatrix
            The matrix A.
        pad: bool
            Pad to 2 * rows * cols qubits.

        Returns
        -------
        report, local: tuple[Report, LocalCode]
            The report and the resulting code.
        """

        start: float = time.perf_counter()
        local: LocalCode = localize(build(matrix))
        localized_n: int = local.code.n
        if pad:
            local = pad_to(local, 2 * matrix.n_rows * matrix.n_cols)
        expected_k: int = rank(matrix)
        local_ok: bool = check_locality(local)
        results: dict = {
            "n_original": matrix.weight,
            "row_ancillas": local.row_ancillas,
            "column_ancillas": local.column_ancillas,
            "n_localized": localized_n,
            "n": local.code.n,
            "padded": local.padded,
            "k": local.code.k,
            "rank": expected_k,
            "check_locality": local_ok,
        }
        passed: bool = local_ok and local.code.k == expected_k
        logging.debug(
            "localize: n=%s (ancillas %s), k=%s, local=%s",
            local.code.n,
            localized_n - matrix.weight,
            local.code.k,
            local_ok,
        )
        return (
            Report(
                command="localize",
                arguments={"pad": pad},
                results=results,
                timings={"localize": time.perf_counter() - start},
                passed=passed,
                summary=f"n={local.code.n} k={local.code.k} local={local_ok}",
            ),
            local,
        )
