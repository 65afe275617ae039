""" GF(2) Linear Algebra Core """

import logging
from pathlib import Path
from typing import Iterator, Optional, Sequence, Union

import numpy as np

from ..contracts.bit_matrix import BitMatrix
from ..contracts.bit_vector import BitVector
from ..contracts.cap_exceeded_error import CapExceededError
from ..contracts.empty_code_error import EmptyCodeError
from ..contracts.parse_error import ParseError
from ..contracts.singular_matrix_error import SingularMatrixError

DEFAULT_CAP: int = 2**26
WORD_BITS: int = 64
LOW_BLOCK_BITS: int = 12

_WORD_MASK: int = (1 << WORD_BITS) - 1
_BYTE_WEIGHTS: np.ndarray = np.array([bin(value).count("1") for value in range(256)], dtype=np.uint8)


def popcount(value: int) -> int:
    return bin(value).count("1")


def lowest_bit(value: int) -> int:
    """Index of the lowest set bit (-1 for zero)."""
    return (value & -value).bit_length() - 1


class Echelon:
    """
    Echelon
    Incrementally maintained reduced row echelon form over GF(2).

    Rows are packed integers; the pivot of a row is its lowest set bit, and every
    pivot column is zero in all other rows. Optionally tracks, for each stored row,
    which inserted vectors it is the sum of.

    Attributes
    ----------
    rows: dict[int, int]
        Pivot index -> reduced row.
    history: dict[int, int]
        Pivot index -> combination mask over inserted vectors.
    inserted: int
        Number of vectors offered so far.
    """

    def __init__(self) -> None:
        self.rows: dict[int, int] = {}
        self.history: dict[int, int] = {}
        self.inserted: int = 0

    def reduce(self, value: int, combination: int = 0) -> tuple[int, int]:
        """
        Reduces a vector against the stored rows.

        Returns
        -------
        residual, combination: tuple[int, int]
            The residual (zero iff the vector is in the span) and the combination
            of inserted vectors that was added to reach it.
        """

        for pivot, row in self.rows.items():
            if (value >> pivot) & 1:
                value ^= row
                combination ^= self.history[pivot]
        return value, combination

    def insert(self, value: int) -> Optional[int]:
        """
        Offers a vector to the echelon.

        Returns
        -------
        dependency: Optional[int]
            None when the vector was independent (and is now stored); otherwise the
            combination mask of inserted vectors summing to zero.
        """

        combination: int = 1 << self.inserted
        self.inserted += 1
        value, combination = self.reduce(value, combination)
        if value == 0:
            return combination
        pivot: int = lowest_bit(value)
        for other_pivot, row in self.rows.items():
            if (row >> pivot) & 1:
                self.rows[other_pivot] = row ^ value
                self.history[other_pivot] ^= combination
        self.rows[pivot] = value
        self.history[pivot] = combination
        return None

    @property
    def rank(self) -> int:
        return len(self.rows)

    def basis(self) -> list[int]:
        """The canonical reduced rows ordered by pivot."""
        return [self.rows[pivot] for pivot in sorted(self.rows)]


def reduce_rows(rows: Sequence[int]) -> list[int]:
    """Canonical reduced row echelon form of packed rows (zero rows dropped)."""

    echelon: Echelon = Echelon()
    for row in rows:
        echelon.insert(row)
    return echelon.basis()


def dependencies(vectors: Sequence[int]) -> list[int]:
    """
    Basis of the linear relations among packed vectors.

    Returns
    -------
    relations: list[int]
        Combination masks c (bit i selects vector i) with sum_i c_i v_i = 0; they
        span every such relation.
    """

    echelon: Echelon = Echelon()
    relations: list[int] = []
    for vector in vectors:
        relation: Optional[int] = echelon.insert(vector)
        if relation is not None:
            relations.append(relation)
    return relations


def kernel_bits(rows: Sequence[int], width: int) -> list[int]:
    """Basis of {v : <row, v> = 0 for every row}, packed."""

    reduced: list[int] = reduce_rows(rows)
    pivots: dict[int, int] = {lowest_bit(row): row for row in reduced}
    basis: list[int] = []
    for free in range(width):
        if free in pivots:
            continue
        vector: int = 1 << free
        for pivot, row in pivots.items():
            if (row >> free) & 1:
                vector |= 1 << pivot
        basis.append(vector)
    return basis


def rank(matrix: BitMatrix) -> int:
    """
    Rank of a matrix over GF(2).

    Parameters
    ----------
    matrix: BitMatrix
        The matrix.

    Returns
    -------
    rank: int
        Dimension of the row space.
    """

    return len(reduce_rows(matrix.data))


def kernel(matrix: BitMatrix) -> list[BitVector]:
    """
    Right null space of a matrix.

    Returns
    -------
    basis: list[BitVector]
        cols - rank(A) independent vectors v with A v = 0.
    """

    return [BitVector(length=matrix.n_cols, bits=bits) for bits in kernel_bits(matrix.data, matrix.n_cols)]


def reduce(basis: Sequence[BitVector]) -> list[BitVector]:
    """Canonical reduced echelon basis of the span of the given vectors."""

    if not basis:
        return []
    length: int = basis[0].length
    return [BitVector(length=length, bits=bits) for bits in reduce_rows([vector.bits for vector in basis])]


def membership(basis: Sequence[BitVector], vector: BitVector) -> Optional[tuple[int, ...]]:
    """
    Expresses a vector in terms of a basis.

    Parameters
    ----------
    basis: Sequence[BitVector]
        Independent vectors.
    vector: BitVector
        The target.

    Returns
    -------
    coefficients: Optional[tuple[int, ...]]
        0/1 coefficients c with sum_i c_i basis_i = vector, or None when the vector
        lies outside the span.
    """

    echelon: Echelon = Echelon()
    for element in basis:
        echelon.insert(element.bits)
    residual, combination = echelon.reduce(vector.bits)
    if residual:
        return None
    return tuple((combination >> index) & 1 for index in range(len(basis)))


def transpose(matrix: BitMatrix) -> BitMatrix:
    data: list[int] = []
    for col in range(matrix.n_cols):
        packed: int = 0
        for row in range(matrix.n_rows):
            if (matrix.data[row] >> col) & 1:
                packed |= 1 << row
        data.append(packed)
    return BitMatrix(n_rows=matrix.n_cols, n_cols=matrix.n_rows, data=tuple(data))


def multiply(left: BitMatrix, right: BitMatrix) -> BitMatrix:
    """Matrix product over GF(2)."""

    if left.n_cols != right.n_rows:
        raise ValueError(f"cannot multiply {left.n_rows}x{left.n_cols} by {right.n_rows}x{right.n_cols}")
    data: list[int] = []
    for row in left.data:
        packed: int = 0
        for index in range(left.n_cols):
            if (row >> index) & 1:
                packed ^= right.data[index]
        data.append(packed)
    return BitMatrix(n_rows=left.n_rows, n_cols=right.n_cols, data=tuple(data))


def inverse(matrix: BitMatrix) -> BitMatrix:
    """
    Inverse of a square matrix by Gauss-Jordan elimination.

    Raises
    ------
    SingularMatrixError
        When the matrix is not square or not invertible.
    """

    size: int = matrix.n_rows
    if matrix.n_cols != size:
        raise SingularMatrixError(f"matrix is not square: {matrix.n_rows}x{matrix.n_cols}")
    # augmented rows: [A | I] with the identity stored above bit `size`
    work: list[int] = [row | (1 << (size + index)) for index, row in enumerate(matrix.data)]
    for col in range(size):
        pivot: Optional[int] = next((index for index in range(col, size) if (work[index] >> col) & 1), None)
        if pivot is None:
            raise SingularMatrixError("matrix is singular")
        work[col], work[pivot] = work[pivot], work[col]
        for index in range(size):
            if index != col and (work[index] >> col) & 1:
                work[index] ^= work[col]
    return BitMatrix(n_rows=size, n_cols=size, data=tuple(row >> size for row in work))


def row_basis(matrix: BitMatrix) -> list[BitVector]:
    """Canonical basis of the row space."""

    return [BitVector(length=matrix.n_cols, bits=bits) for bits in reduce_rows(matrix.data)]


def column_basis(matrix: BitMatrix) -> list[BitVector]:
    """Canonical basis of the column space."""

    return row_basis(transpose(matrix))


def independent_rows(matrix: BitMatrix) -> list[int]:
    """Indices of the first linearly independent rows, chosen greedily in index order."""

    echelon: Echelon = Echelon()
    chosen: list[int] = []
    for index, row in enumerate(matrix.data):
        if echelon.insert(row) is None:
            chosen.append(index)
    return chosen


def from_array(array: np.ndarray) -> BitMatrix:
    """Converts a 2D 0/1 numpy array."""

    n_rows, n_cols = array.shape
    if n_rows == 0:
        return BitMatrix.zeros(0, n_cols)
    return BitMatrix.from_rows([[int(entry) & 1 for entry in row] for row in array.tolist()])


def to_array(matrix: BitMatrix) -> np.ndarray:
    return np.array(matrix.to_rows(), dtype=np.uint8).reshape(matrix.n_rows, matrix.n_cols)


# Bit-packed enumeration


def words_for(width: int) -> int:
    return max(1, -(-width // WORD_BITS))


def pack(value: int, words: int) -> np.ndarray:
    """Splits a packed integer into little-endian 64-bit words."""

    return np.array([(value >> (WORD_BITS * index)) & _WORD_MASK for index in range(words)], dtype=np.uint64)


def unpack(row: np.ndarray) -> int:
    value: int = 0
    for index, word in enumerate(row.tolist()):
        value |= int(word) << (WORD_BITS * index)
    return value


def block_weights(block: np.ndarray) -> np.ndarray:
    """Hamming weight of every row of an (N, words) uint64 block."""

    as_bytes: np.ndarray = np.ascontiguousarray(block).view(np.uint8)
    return _BYTE_WEIGHTS[as_bytes].reshape(block.shape[0], -1).sum(axis=1, dtype=np.int64)


def iter_span_blocks(generators: np.ndarray, low_bits: int = LOW_BLOCK_BITS) -> Iterator[np.ndarray]:
    """
    Enumerates the span of packed generators block by block.

    The first `low_bits` generators are expanded into a table of all their
    combinations; the remaining generators are walked in Gray-code order, one
    generator XOR per step, each step yielding `table ^ offset`. The zero vector is
    row 0 of the first block.

    Parameters
    ----------
    generators: np.ndarray
        (count, words) uint64 array.
    low_bits: int
        Number of generators folded into the per-block table.

    Returns
    -------
    blocks: Iterator[np.ndarray]
        2**count rows in total.
    """

    count, words = generators.shape
    low: int = min(count, low_bits)
    table: np.ndarray = np.zeros((1, words), dtype=np.uint64)
    for row in generators[:low]:
        table = np.concatenate([table, table ^ row])
    high: np.ndarray = generators[low:]
    offset: np.ndarray = np.zeros(words, dtype=np.uint64)
    yield table
    for step in range(1, 1 << high.shape[0]):
        offset ^= high[lowest_bit(step)]
        yield table ^ offset


def check_cap(generator_count: int, cap: int) -> None:
    if generator_count >= 63 or (1 << generator_count) > cap:
        raise CapExceededError(f"enumerating 2^{generator_count} elements exceeds cap {cap}")


def min_weight_nonzero(
    basis: Sequence[BitVector], cap: int = DEFAULT_CAP, stop_below: Optional[int] = None
) -> tuple[int, BitVector]:
    """
    Minimum Hamming weight over the nonzero elements of a span.

    Parameters
    ----------
    basis: Sequence[BitVector]
        Independent generators.
    cap: int
        Largest admissible number of enumerated elements.
    stop_below: Optional[int]
        When given, return as soon as an element lighter than this is found.

    Returns
    -------
    weight, witness: tuple[int, BitVector]
        The minimum weight and an element achieving it (the first in enumeration
        order). With `stop_below`, an early return reports the first element found
        below the threshold.

    Raises
    ------
    EmptyCodeError
        When the basis is empty.
    CapExceededError
        When 2**len(basis) exceeds the cap.
    """

    if not basis:
        raise EmptyCodeError("no nonzero codewords")
    check_cap(len(basis), cap)
    width: int = basis[0].length
    words: int = words_for(width)
    generators: np.ndarray = np.stack([pack(vector.bits, words) for vector in basis])
    logging.debug("[gf2core] min weight over 2^{%s} elements of length {%s}", len(basis), width)

    best: int = width + 1
    witness: int = 0
    for index, block in enumerate(iter_span_blocks(generators)):
        weights: np.ndarray = block_weights(block)
        if index == 0:
            weights[0] = width + 1
        position: int = int(np.argmin(weights))
        if weights[position] < best:
            best = int(weights[position])
            witness = unpack(block[position])
            if stop_below is not None and best < stop_below:
                break
    return best, BitVector(length=width, bits=witness)


# Matrix text format


def parse_matrix(text: str) -> BitMatrix:
    """
    Parses the matrix text format.

    '#' lines are comments; every other non-blank line is one row of '0'/'1'
    characters, all of equal length.

    Raises
    ------
    ParseError
        On ragged rows, foreign characters, or no rows at all.
    """

    rows: list[str] = []
    for number, line in enumerate(text.splitlines(), start=1):
        stripped: str = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if set(stripped) - {"0", "1"}:
            raise ParseError(f"line {number}: unexpected characters in {stripped!r}")
        if rows and len(stripped) != len(rows[0]):
            raise ParseError(f"line {number}: expected {len(rows[0])} columns, received {len(stripped)}")
        rows.append(stripped)
    if not rows:
        raise ParseError("no matrix rows found")
    return BitMatrix(
        n_rows=len(rows),
        n_cols=len(rows[0]),
        data=tuple(BitVector.from_string(row).bits for row in rows),
    )


def render_matrix(matrix: BitMatrix, comment: Optional[str] = None) -> str:
    lines: list[str] = [f"# {comment}"] if comment else []
    lines.extend(matrix.row(index).to_string() for index in range(matrix.n_rows))
    return "\n".join(lines) + "\n"


def read_matrix(path: Union[str, Path]) -> BitMatrix:
    return parse_matrix(Path(path).read_text(encoding="utf-8"))
