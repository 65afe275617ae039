""" Generalized Bacon-Shor Services """

import logging

from ..contracts.bit_matrix import BitMatrix
from ..contracts.empty_matrix_error import EmptyMatrixError
from ..contracts.gbs_code import GBSCode
from ..contracts.index_out_of_range_error import IndexOutOfRangeError
from ..contracts.layout import Layout
from ..contracts.no_logical_qubits_error import NoLogicalQubitsError
from ..contracts.pauli_op import PauliOp
from ..contracts.theoretical_params import TheoreticalParams
from .gf2core import DEFAULT_CAP, column_basis, min_weight_nonzero, popcount, rank, row_basis
from .subsystem import derive


def cell_index(matrix: BitMatrix) -> dict[tuple[int, int], int]:
    """Occupied cell -> qubit index, row-major."""

    return {cell: qubit for qubit, cell in enumerate(matrix.occupied())}


def build(matrix: BitMatrix) -> GBSCode:
    """
    Builds the generalized Bacon-Shor code of a binary matrix.

    One qubit sits on every nonzero entry. Consecutive occupied cells of a row are
    joined by an XX generator, consecutive occupied cells of a column by a ZZ
    generator; rows are emitted before columns.

    Parameters
    ----------
    matrix: BitMatrix
        The matrix A, square or rectangular.

    Returns
    -------
    gbs: GBSCode
        The code on |A| qubits with its row-major layout.

    Raises
    ------
    EmptyMatrixError
        When A has no nonzero entry.
    """

    if matrix.weight == 0:
        raise EmptyMatrixError("matrix has no nonzero entries")
    cells: dict[tuple[int, int], int] = cell_index(matrix)
    n: int = len(cells)
    generators: list[PauliOp] = []
    for row in range(matrix.n_rows):
        occupied: list[int] = [cells[(row, col)] for col in range(matrix.n_cols) if (row, col) in cells]
        for left, right in zip(occupied, occupied[1:]):
            generators.append(PauliOp.from_bits(n=n, x=(1 << left) | (1 << right), z=0))
    for col in range(matrix.n_cols):
        occupied = [cells[(row, col)] for row in range(matrix.n_rows) if (row, col) in cells]
        for top, bottom in zip(occupied, occupied[1:]):
            generators.append(PauliOp.from_bits(n=n, x=0, z=(1 << top) | (1 << bottom)))
    layout: Layout = Layout(
        n_rows=matrix.n_rows,
        n_cols=matrix.n_cols,
        positions={qubit: (row, col, 0) for (row, col), qubit in cells.items()},
    )
    logging.debug("[gbs] built {%s} qubits, {%s} generators", n, len(generators))
    return GBSCode(matrix=matrix, code=derive(n, generators, layout))


def theoretical_params(matrix: BitMatrix, cap: int = DEFAULT_CAP) -> TheoreticalParams:
    """
    Parameters predicted from the matrix alone: n = |A|, k = rank(A),
    d = min(d_row, d_col).

    Raises
    ------
    EmptyMatrixError
        When |A| = 0.
    CapExceededError
        When 2**k exceeds the enumeration cap.
    """

    n: int = matrix.weight
    if n == 0:
        raise EmptyMatrixError("matrix has no nonzero entries")
    k: int = rank(matrix)
    d_row, _ = min_weight_nonzero(row_basis(matrix), cap=cap)
    d_col, _ = min_weight_nonzero(column_basis(matrix), cap=cap)
    return TheoreticalParams(n=n, k=k, d_row=d_row, d_col=d_col, d=min(d_row, d_col))


def row_product(gbs: GBSCode, rows: int) -> PauliOp:
    """Product of the row operators selected by the bits of `rows`."""

    cells: dict[tuple[int, int], int] = cell_index(gbs.matrix)
    z: int = 0
    for (row, _), qubit in cells.items():
        if (rows >> row) & 1:
            z ^= 1 << qubit
    return PauliOp.from_bits(n=gbs.code.n, x=0, z=z)


def column_product(gbs: GBSCode, cols: int) -> PauliOp:
    """Product of the column operators selected by the bits of `cols`."""

    cells: dict[tuple[int, int], int] = cell_index(gbs.matrix)
    x: int = 0
    for (_, col), qubit in cells.items():
        if (cols >> col) & 1:
            x ^= 1 << qubit
    return PauliOp.from_bits(n=gbs.code.n, x=x, z=0)


def row_operator(gbs: GBSCode, row: int) -> PauliOp:
    """R_i: Z on every occupied cell of row i."""

    if not 0 <= row < gbs.matrix.n_rows:
        raise IndexOutOfRangeError(f"row {row} outside 0..{gbs.matrix.n_rows - 1}")
    return row_product(gbs, 1 << row)


def column_operator(gbs: GBSCode, col: int) -> PauliOp:
    """C_j: X on every occupied cell of column j."""

    if not 0 <= col < gbs.matrix.n_cols:
        raise IndexOutOfRangeError(f"column {col} outside 0..{gbs.matrix.n_cols - 1}")
    return column_product(gbs, 1 << col)


def _form(matrix: BitMatrix, rows: int, cols: int) -> int:
    """The bilinear form z^T A x for packed z (over rows) and x (over columns)."""

    total: int = 0
    for row in range(matrix.n_rows):
        if (rows >> row) & 1:
            total ^= popcount(matrix.data[row] & cols) & 1
    return total


def bare_logical_basis(gbs: GBSCode) -> list[tuple[PauliOp, PauliOp]]:
    """
    Canonical pairs of bare logical operators.

    Orthogonalizes the form z^T A x over the unit vectors: take the first column
    vector x with a partner z (z^T A x = 1), pair them, and clear their overlap with
    every remaining candidate. Each x becomes a product of column operators and
    each z a product of row operators, so the pairs anticommute exactly on the
    diagonal.

    Returns
    -------
    pairs: list[tuple[PauliOp, PauliOp]]
        k pairs (P^X_a, P^Z_a).

    Raises
    ------
    NoLogicalQubitsError
        When rank(A) = 0.
    """

    matrix: BitMatrix = gbs.matrix
    if gbs.code.k == 0:
        raise NoLogicalQubitsError("matrix has rank 0")
    xs: list[int] = [1 << col for col in range(matrix.n_cols)]
    zs: list[int] = [1 << row for row in range(matrix.n_rows)]
    pairs: list[tuple[int, int]] = []
    while True:
        match = next(
            ((xi, zi) for xi, x in enumerate(xs) for zi, z in enumerate(zs) if _form(matrix, z, x)),
            None,
        )
        if match is None:
            break
        x: int = xs.pop(match[0])
        z: int = zs.pop(match[1])
        xs = [other ^ x if _form(matrix, z, other) else other for other in xs]
        zs = [other ^ z if _form(matrix, other, x) else other for other in zs]
        pairs.append((x, z))
    return [(column_product(gbs, x), row_product(gbs, z)) for x, z in pairs]
