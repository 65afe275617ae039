""" Gilbert-Varshamov Search Services """

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from typing import Iterator, Optional

import numpy as np

from ..contracts.bit_matrix import BitMatrix
from ..contracts.gv_query import GVQuery
from ..contracts.gv_result import GVResult
from ..contracts.gv_survey import GVSurvey
from ..contracts.out_of_range_error import OutOfRangeError
from ..contracts.sampling_failed_error import SamplingFailedError
from .gf2core import DEFAULT_CAP, column_basis, from_array, min_weight_nonzero, rank, row_basis

RNG_ALGORITHM: str = "numpy.PCG64(SeedSequence([seed, trial]))"
MAX_SAMPLING_ATTEMPTS: int = 1000

Trial = Optional[tuple[BitMatrix, int, int]]


def binary_entropy(probability: float) -> float:
    """
    H2(p) = -p log2 p - (1 - p) log2 (1 - p), with H2(0) = H2(1) = 0.

    Raises
    ------
    OutOfRangeError
        When p lies outside [0, 1].
    """

    if not 0.0 <= probability <= 1.0:
        raise OutOfRangeError(f"probability {probability} outside [0, 1]")
    if probability in (0.0, 1.0):
        return 0.0
    return -probability * math.log2(probability) - (1.0 - probability) * math.log2(1.0 - probability)


def gv_feasible(alpha: float, beta: float) -> bool:
    """
    True iff alpha + H2(beta) < 1, the regime in which fixed-rank matrices with
    row and column distance beta m exist for all large m.
    """

    if alpha <= 0.0:
        raise OutOfRangeError(f"alpha {alpha} must be positive")
    if not 0.0 < beta < 0.5:
        raise OutOfRangeError(f"beta {beta} outside (0, 1/2)")
    return alpha < 1.0 - binary_entropy(beta)


def trial_rng(seed: int, trial: int) -> np.random.Generator:
    """Independent, reproducible generator for one trial."""

    return np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, trial])))


def _full_rank(rows: int, cols: int, rng: np.random.Generator) -> np.ndarray:
    target: int = min(rows, cols)
    for _ in range(MAX_SAMPLING_ATTEMPTS):
        candidate: np.ndarray = rng.integers(0, 2, size=(rows, cols), dtype=np.uint8)
        if rank(from_array(candidate)) == target:
            return candidate
    raise SamplingFailedError(f"no full-rank {rows}x{cols} sample in {MAX_SAMPLING_ATTEMPTS} attempts")


def sample_fixed_rank(m: int, k: int, rng: np.random.Generator) -> BitMatrix:
    """
    A uniformly random m x m matrix of rank k.

    Draws B (m x k) and C (k x m) uniformly among full-rank matrices and returns
    B C over GF(2); every rank-k matrix has the same number of such factorizations.

    Raises
    ------
    OutOfRangeError
        Unless 1 <= k <= m.
    SamplingFailedError
        When rejection sampling exhausts its attempts.
    """

    if not 1 <= k <= m:
        raise OutOfRangeError(f"rank {k} outside 1..{m}")
    left: np.ndarray = _full_rank(m, k, rng)
    right: np.ndarray = _full_rank(k, m, rng)
    return from_array((left.astype(np.int64) @ right.astype(np.int64)) % 2)


def target_distance(query: GVQuery) -> int:
    """Smallest row and column distance a sample must reach: ceil(beta * m)."""

    return math.ceil(query.beta * query.m)


def _run_trial(query: GVQuery, trial: int, cap: int) -> Trial:
    """Samples one matrix; returns it with its distances if both reach the target."""

    target: int = target_distance(query)
    matrix: BitMatrix = sample_fixed_rank(query.m, query.k, trial_rng(query.seed, trial))
    d_row, _ = min_weight_nonzero(row_basis(matrix), cap=cap, stop_below=target)
    if d_row < target:
        return None
    d_col, _ = min_weight_nonzero(column_basis(matrix), cap=cap, stop_below=target)
    if d_col < target:
        return None
    return matrix, d_row, d_col


def _batches(total: int, size: int) -> Iterator[range]:
    for start in range(0, total, size):
        yield range(start, min(start + size, total))


def gv_search(query: GVQuery, threads: int = 1, cap: int = DEFAULT_CAP) -> GVResult:
    """
    Samples fixed-rank matrices until one has d_row, d_col >= ceil(beta m).

    Trials run in batches; within a batch results are merged in trial order, so the
    reported success is the one with the smallest trial index whatever the thread
    count.

    Parameters
    ----------
    query: GVQuery
        The search parameters.
    threads: int
        Worker threads.
    cap: int
        Enumeration cap for the distance computations.

    Returns
    -------
    result: GVResult
        The first success, or found=False after the whole budget.
    """

    target: int = target_distance(query)
    logging.debug("[search] m={%s} k={%s} target={%s} budget={%s}", query.m, query.k, target, query.max_trials)
    with ThreadPoolExecutor(max_workers=max(1, threads)) as executor:
        for batch in _batches(query.max_trials, max(1, threads) * 4):
            outcomes: list[Trial] = list(executor.map(lambda trial: _run_trial(query, trial, cap), batch))
            for trial, outcome in zip(batch, outcomes):
                if outcome is not None:
                    matrix, d_row, d_col = outcome
                    return GVResult(
                        found=True,
                        matrix=matrix,
                        trials_used=trial + 1,
                        d_row=d_row,
                        d_col=d_col,
                        target=target,
                        seed=query.seed,
                        rng_algorithm=RNG_ALGORITHM,
                    )
    return GVResult(
        found=False, trials_used=query.max_trials, target=target, seed=query.seed, rng_algorithm=RNG_ALGORITHM
    )


def gv_survey(query: GVQuery, threads: int = 1, cap: int = DEFAULT_CAP) -> GVSurvey:
    """Runs every trial of the budget and reports the empirical success rate."""

    target: int = target_distance(query)
    with ThreadPoolExecutor(max_workers=max(1, threads)) as executor:
        outcomes: list[Trial] = list(executor.map(lambda trial: _run_trial(query, trial, cap), range(query.max_trials)))
    successes: list[int] = [trial for trial, outcome in enumerate(outcomes) if outcome is not None]
    return GVSurvey(
        trials=query.max_trials,
        successes=len(successes),
        rate=len(successes) / query.max_trials,
        first_success=successes[0] if successes else -1,
        target=target,
        seed=query.seed,
        rng_algorithm=RNG_ALGORITHM,
    )
