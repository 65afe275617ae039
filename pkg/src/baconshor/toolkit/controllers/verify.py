""" Verify Controller Definition """

import logging
import time
from itertools import product
from typing import Callable, Iterator, Literal, Optional

import numpy as np

from ..contracts.bit_matrix import BitMatrix
from ..contracts.region import Region
from ..contracts.report import Report
from ..contracts.subsystem_code import SubsystemCode
from ..services.bounds import evaluate_bounds
from ..services.gbs import build, theoretical_params
from ..services.localize import extend_with_ancilla
from ..services.regions import cleaning_check, random_local_code, restriction_check
from ..services.subsystem import derive, distance_full, random_gauge_group
from .abstract_controller import AbstractController

Scope = Literal["parameters", "cleaning", "ancilla", "restriction"]
MAX_RECORDED_FAILURES: int = 10


def parameter_shapes(size: int) -> list[tuple[int, int]]:
    """Every shape r x c with r, c <= size, then 1 x (size + 1) and 2 x (size + 1)."""

    shapes: list[tuple[int, int]] = [(rows, cols) for rows in range(1, size + 1) for cols in range(1, size + 1)]
    return shapes + [(1, size + 1), (2, size + 1)]


def nonzero_matrices(rows: int, cols: int) -> Iterator[BitMatrix]:
    """All nonzero rows x cols matrices, entries read row-major from the bits of a counter."""

    mask: int = (1 << cols) - 1
    for value in range(1, 1 << (rows * cols)):
        yield BitMatrix.construct(
            n_rows=rows, n_cols=cols, data=tuple((value >> (row * cols)) & mask for row in range(rows))
        )


def random_region(n: int, rng: np.random.Generator) -> Region:
    return Region(n=n, members=frozenset(qubit for qubit in range(n) if rng.random() < 0.5))


class VerifyController(AbstractController):
    """
    Verify Controller
    Runs the property sweeps: predicted against measured parameters, the cleaning
    identity, ancilla invariance and the restriction check.

    Methods
    -------
    execute(self, scope: Scope, size: int, trials: int, max_qubits: int, seed: int, code) -> Report
        Executes the command.
    """

    def execute(
        self,
        scope: Scope,
        size: int = 3,
        trials: int = 100,
        max_qubits: int = 6,
        seed: int = 0,
        code: Optional[SubsystemCode] = None,
    ) -> Report:
        """
        Runs one property sweep.

        Parameters
        ----------
        scope: Scope
            Which sweep.
        size: int
            Largest matrix side for the exhaustive parameter sweep.
        trials: int
            Random instances for the randomized sweeps.
        max_qubits: int
            Largest random code.
        seed: int
            Seed of the randomized sweeps.
        code: Optional[SubsystemCode]
            For the cleaning sweep: check every subset of this code instead.

        Returns
        -------
        report: Report
            Instance and failure counts; passed iff there were no failures.
        """

        rng: np.random.Generator = np.random.default_rng(seed)
        sweeps: dict[str, Callable[[], Iterator[Optional[str]]]] = {
            "parameters": lambda: self._parameters(size),
            "cleaning": lambda: self._cleaning(trials, max_qubits, rng, code),
            "ancilla": lambda: self._ancilla(trials, max_qubits, rng),
            "restriction": lambda: self._restriction(trials, rng),
        }
        start: float = time.perf_counter()
        checked: int = 0
        failures: list[str] = []
        for failure in sweeps[scope]():
            checked += 1
            if failure is not None:
                failures.append(failure)
        logging.debug("verify %s: %s instances, %s failures", scope, checked, len(failures))
        return Report(
            command="verify",
            arguments={"scope": scope, "size": size, "trials": trials, "max_qubits": max_qubits, "seed": seed},
            results={"instances": checked, "failures": len(failures), "examples": failures[:MAX_RECORDED_FAILURES]},
            timings={scope: time.perf_counter() - start},
            passed=not failures,
            summary=f"{scope}: {checked} instances, {len(failures)} failures",
        )

    def _parameters(self, size: int) -> Iterator[Optional[str]]:
        for rows, cols in parameter_shapes(size):
            for matrix in nonzero_matrices(rows, cols):
                params = theoretical_params(matrix, cap=self.cap())
                code: SubsystemCode = build(matrix).code
                if code.k != params.k:
                    yield f"{matrix.to_strings()}: k={code.k}, rank={params.k}"
                    continue
                if not evaluate_bounds(params.n, params.k, params.d_row, params.d_col).passes:
                    yield f"{matrix.to_strings()}: bounds violated"
                    continue
                measured: int = distance_full(code, cap=self.cap()).value
                yield None if measured == params.d else f"{matrix.to_strings()}: d={measured}, predicted {params.d}"

    def _cleaning(
        self, trials: int, max_qubits: int, rng: np.random.Generator, code: Optional[SubsystemCode]
    ) -> Iterator[Optional[str]]:
        if code is not None:
            for value in range(1 << code.n):
                region: Region = Region(n=code.n, members=frozenset(q for q in range(code.n) if (value >> q) & 1))
                yield None if cleaning_check(code, region) else f"subset {region.ordered()}"
            return
        for _ in range(trials):
            n: int = int(rng.integers(1, max_qubits + 1))
            random_code: SubsystemCode = derive(n, random_gauge_group(n, rng))
            region = random_region(n, rng)
            if not cleaning_check(random_code, region):
                yield f"{[str(g) for g in random_code.generators]} M={region.ordered()}"
            else:
                yield None

    def _ancilla(self, trials: int, max_qubits: int, rng: np.random.Generator) -> Iterator[Optional[str]]:
        for _ in range(trials):
            n: int = int(rng.integers(1, max_qubits + 1))
            code: SubsystemCode = derive(n, random_gauge_group(n, rng))
            distance: Optional[int] = distance_full(code, cap=self.cap()).value if code.k else None
            for qubit, kind in product(range(n), ("x", "z")):
                extended: SubsystemCode = extend_with_ancilla(code, qubit, kind=kind)
                label: str = f"{[str(g) for g in code.generators]} q={qubit} kind={kind}"
                if extended.k != code.k:
                    yield f"{label}: k {code.k} -> {extended.k}"
                elif distance is not None and distance_full(extended, cap=self.cap()).value != distance:
                    yield f"{label}: distance changed"
                else:
                    yield None

    def _restriction(self, trials: int, rng: np.random.Generator) -> Iterator[Optional[str]]:
        done: int = 0
        while done < trials:
            code: SubsystemCode = random_local_code(int(rng.integers(1, 4)), int(rng.integers(2, 4)), rng)
            if code.k == 0:
                continue
            done += 1
            region: Region = random_region(code.n, rng)
            report = restriction_check(code, region, cap=self.cap())
            yield None if report.holds else f"{[str(g) for g in code.generators]} M={region.ordered()}: {report}"
