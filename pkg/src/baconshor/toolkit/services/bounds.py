""" Parameter Bound Services """

import logging
from typing import Mapping

from ..contracts.bit_matrix import BitMatrix
from ..contracts.bound_report import BoundReport
from ..contracts.no_logical_qubits_error import NoLogicalQubitsError
from ..contracts.out_of_range_error import OutOfRangeError
from ..contracts.profile import Profile
from ..contracts.theoretical_params import TheoreticalParams
from ..contracts.too_large_error import TooLargeError
from .gbs import theoretical_params
from .gf2core import DEFAULT_CAP, independent_rows, inverse, popcount, transpose

HADAMARD_MAX_K: int = 12


def hadamard_matrix(k: int) -> BitMatrix:
    """
    The (2^k - 1) x (2^k - 1) matrix A[x, y] = x . y over the nonzero x, y in
    {0,1}^k (row and column x - 1 hold pattern x). Rank k, all row and column
    weights 2^(k-1), and it meets the refined bound with equality.

    Raises
    ------
    OutOfRangeError
        When k < 1.
    TooLargeError
        When k > 12.
    """

    if k < 1:
        raise OutOfRangeError(f"k={k} must be at least 1")
    if k > HADAMARD_MAX_K:
        raise TooLargeError(f"k={k} exceeds {HADAMARD_MAX_K}")
    size: int = (1 << k) - 1
    data: list[int] = []
    for x in range(1, size + 1):
        packed: int = 0
        for y in range(1, size + 1):
            if popcount(x & y) & 1:
                packed |= 1 << (y - 1)
        data.append(packed)
    return BitMatrix(n_rows=size, n_cols=size, data=tuple(data))


def evaluate_bounds(n: int, k: int, d_row: int, d_col: int) -> BoundReport:
    """Evaluates the three inequalities in integer arithmetic."""

    d: int = min(d_row, d_col)
    product: int = d_row * d_col
    refined_left: int = 2 * product * ((1 << k) - 1)
    refined_right: int = n * (1 << k)
    return BoundReport(
        n=n,
        k=k,
        d_row=d_row,
        d_col=d_col,
        d=d,
        square_passes=d * d <= product <= n,
        square_slack=n - product,
        refined_passes=refined_left <= refined_right,
        refined_slack=refined_right - refined_left,
        product_passes=k * d <= n,
        product_slack=n - k * d,
    )


def check_bounds(matrix: BitMatrix, cap: int = DEFAULT_CAP) -> BoundReport:
    """
    Checks d^2 <= d_row d_col <= n, 2 d_row d_col (1 - 2^-k) <= n and k d <= n for
    the code of a matrix.

    Raises
    ------
    EmptyMatrixError
        When |A| = 0.
    NoLogicalQubitsError
        When rank(A) = 0.
    """

    params: TheoreticalParams = theoretical_params(matrix, cap=cap)
    if params.k == 0:
        raise NoLogicalQubitsError("matrix has rank 0")
    report: BoundReport = evaluate_bounds(params.n, params.k, params.d_row, params.d_col)
    logging.debug("[bounds] n={%s} k={%s} d={%s} passes={%s}", report.n, report.k, report.d, report.passes)
    return report


def profile(matrix: BitMatrix) -> Profile:
    """
    Column-pattern profile of a matrix.

    The first k independent rows R form the row generating matrix and the first k
    independent columns C the column generating matrix. r_x counts columns j of A
    whose pattern (A[R_a, j])_a equals x; c_x counts rows i whose pattern
    (A[i, C_b])_b equals x. Row i of A is z G_row with z = y M, where y is the row's
    column pattern and M is the inverse of the submatrix A[R, C].

    Raises
    ------
    NoLogicalQubitsError
        When rank(A) = 0.
    """

    rows: list[int] = independent_rows(matrix)
    cols: list[int] = independent_rows(transpose(matrix))
    k: int = len(rows)
    if k == 0:
        raise NoLogicalQubitsError("matrix has rank 0")
    r: dict[int, int] = {pattern: 0 for pattern in range(1 << k)}
    c: dict[int, int] = {pattern: 0 for pattern in range(1 << k)}
    for col in range(matrix.n_cols):
        r[sum(matrix.entry(row, col) << index for index, row in enumerate(rows))] += 1
    for row in range(matrix.n_rows):
        c[sum(matrix.entry(row, col) << index for index, col in enumerate(cols))] += 1
    pivot: BitMatrix = BitMatrix(
        n_rows=k,
        n_cols=k,
        data=tuple(sum(matrix.entry(row, col) << index for index, col in enumerate(cols)) for row in rows),
    )
    return Profile(k=k, r=r, c=c, M=inverse(pivot), row_indices=tuple(rows), col_indices=tuple(cols))


def profile_weight(counts: Mapping[int, int], y: int) -> int:
    """Sum of counts[x] over the patterns x with x . y = 1."""

    return sum(count for pattern, count in counts.items() if popcount(pattern & y) & 1)


def _times(pattern: int, matrix: BitMatrix) -> int:
    """Row vector times matrix: XOR of the rows selected by the pattern."""

    result: int = 0
    for index in range(matrix.n_rows):
        if (pattern >> index) & 1:
            result ^= matrix.data[index]
    return result


def verify_feasibility(candidate: Profile, n: int, d_row: int, d_col: int) -> bool:
    """
    Checks a profile against the integer constraints every genuine matrix obeys.

    - all counts are nonnegative;
    - for every y != 0, the r-weight and c-weight of y reach d_row and d_col;
    - the sum of c_x r_y over the pairs with (x M) . y = 1 is exactly n.
    """

    if any(count < 0 for count in candidate.r.values()) or any(count < 0 for count in candidate.c.values()):
        return False
    for y in range(1, 1 << candidate.k):
        if profile_weight(candidate.r, y) < d_row or profile_weight(candidate.c, y) < d_col:
            return False
    total: int = 0
    for x, c_count in candidate.c.items():
        if c_count == 0:
            continue
        coefficients: int = _times(x, candidate.M)
        total += c_count * profile_weight(candidate.r, coefficients)
    return total == n
