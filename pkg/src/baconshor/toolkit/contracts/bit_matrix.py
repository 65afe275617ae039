""" Bit Matrix Definition """

from typing import Sequence

from pydantic import root_validator

from .base_model import BaseModel
from .bit_vector import BitVector


class BitMatrix(BaseModel):
    """
    Bit Matrix
    A dense GF(2) matrix stored as packed rows.

    Attributes
    ----------
    n_rows: int
        Number of rows.
    n_cols: int
        Number of columns.
    data: tuple[int, ...]
        One packed integer per row, bit j holding column j.
    """

    n_rows: int
    n_cols: int
    data: tuple[int, ...]

    @root_validator(skip_on_failure=True)
    def _shape_consistent(cls, values: dict) -> dict:  # pylint: disable=no-self-argument
        n_rows, n_cols, data = values["n_rows"], values["n_cols"], values["data"]
        if n_rows < 0 or n_cols < 0:
            raise ValueError("shape must be nonnegative")
        if len(data) != n_rows:
            raise ValueError(f"expected {n_rows} rows, received {len(data)}")
        for row in data:
            if row < 0 or row >> n_cols:
                raise ValueError(f"row {row} does not fit in {n_cols} columns")
        return values

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "BitMatrix":
        """Builds a matrix from nested 0/1 sequences."""

        n_cols: int = len(rows[0]) if rows else 0
        data: list[int] = []
        for row in rows:
            if len(row) != n_cols:
                raise ValueError("ragged rows")
            packed: int = 0
            for col, entry in enumerate(row):
                if entry not in (0, 1):
                    raise ValueError(f"entry {entry!r} is not 0 or 1")
                packed |= int(entry) << col
            data.append(packed)
        return cls(n_rows=len(rows), n_cols=n_cols, data=tuple(data))

    @classmethod
    def from_vectors(cls, vectors: Sequence[BitVector], n_cols: int) -> "BitMatrix":
        return cls(n_rows=len(vectors), n_cols=n_cols, data=tuple(vector.bits for vector in vectors))

    @classmethod
    def zeros(cls, n_rows: int, n_cols: int) -> "BitMatrix":
        return cls(n_rows=n_rows, n_cols=n_cols, data=(0,) * n_rows)

    @classmethod
    def ones(cls, n_rows: int, n_cols: int) -> "BitMatrix":
        return cls(n_rows=n_rows, n_cols=n_cols, data=((1 << n_cols) - 1,) * n_rows)

    @classmethod
    def identity(cls, size: int) -> "BitMatrix":
        return cls(n_rows=size, n_cols=size, data=tuple(1 << index for index in range(size)))

    def entry(self, row: int, col: int) -> int:
        return (self.data[row] >> col) & 1

    def row(self, index: int) -> BitVector:
        return BitVector(length=self.n_cols, bits=self.data[index])

    def rows(self) -> list[BitVector]:
        return [self.row(index) for index in range(self.n_rows)]

    @property
    def weight(self) -> int:
        """Number of nonzero entries, |A|."""
        return sum(bin(row).count("1") for row in self.data)

    def occupied(self) -> list[tuple[int, int]]:
        """Cells (row, col) holding a one, in row-major order."""

        return [(row, col) for row in range(self.n_rows) for col in range(self.n_cols) if (self.data[row] >> col) & 1]

    def to_rows(self) -> list[list[int]]:
        return [[self.entry(row, col) for col in range(self.n_cols)] for row in range(self.n_rows)]

    def to_strings(self) -> list[str]:
        """Rows as '0'/'1' strings, column 0 first."""
        return [self.row(index).to_string() for index in range(self.n_rows)]
