""" Hadamard Controller Definition """

import logging

from ..contracts.bit_matrix import BitMatrix
from ..contracts.report import Report
from ..services.bounds import hadamard_matrix
from .abstract_controller import AbstractController


class HadamardController(AbstractController):
    """
    Hadamard Controller
    Builds the simplex-code matrix that meets the refined bound with equality.

    Methods
    -------
    execute(self, k: int) -> tuple[Report, BitMatrix]
        Executes the command.
    """

    def execute(self, k: int) -> tuple[Report, BitMatrix]:
        matrix: BitMatrix = hadamard_matrix(k)
        logging.debug("hadamard: k=%s size=%s n=%s", k, matrix.n_rows, matrix.weight)
        return (
            Report(
                command="hadamard",
                arguments={"k": k},
                results={"size": matrix.n_rows, "n": matrix.weight, "rows": matrix.to_strings()},
                summary=f"{matrix.n_rows}x{matrix.n_cols}, n={matrix.weight}",
            ),
            matrix,
        )
