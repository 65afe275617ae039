""" Layout Definition """

from typing import Iterator, Optional

from pydantic import root_validator

from .base_model import BaseModel

Slot = tuple[int, int, int]


class Layout(BaseModel):
    """
    Layout
    Places qubits on the cells of a 2D grid, at most two per cell (layers 0 and 1).

    Attributes
    ----------
    n_rows: int
        Grid height.
    n_cols: int
        Grid width.
    positions: dict[int, tuple[int, int, int]]
        Qubit index -> (row, col, layer).
    """

    n_rows: int
    n_cols: int
    positions: dict[int, tuple[int, int, int]]

    @root_validator(skip_on_failure=True)
    def _slots_unique(cls, values: dict) -> dict:  # pylint: disable=no-self-argument
        seen: set[Slot] = set()
        for qubit, slot in values["positions"].items():
            row, col, layer = slot
            if not (0 <= row < values["n_rows"] and 0 <= col < values["n_cols"]):
                raise ValueError(f"qubit {qubit} placed outside the grid at {slot}")
            if layer not in (0, 1):
                raise ValueError(f"qubit {qubit} has layer {layer}, expected 0 or 1")
            if slot in seen:
                raise ValueError(f"slot {slot} occupied twice")
            seen.add(slot)
        return values

    def cell(self, qubit: int) -> tuple[int, int]:
        row, col, _ = self.positions[qubit]
        return row, col

    def distance(self, first: int, second: int) -> int:
        """Chebyshev distance between the cells of two qubits (layers ignored)."""

        row_a, col_a = self.cell(first)
        row_b, col_b = self.cell(second)
        return max(abs(row_a - row_b), abs(col_a - col_b))

    def occupant(self, slot: Slot) -> Optional[int]:
        for qubit, position in self.positions.items():
            if position == tuple(slot):
                return qubit
        return None

    def free_slots(self) -> Iterator[Slot]:
        """Unoccupied slots, cells row-major and layer 0 before layer 1."""

        taken: set[Slot] = set(self.positions.values())
        for row in range(self.n_rows):
            for col in range(self.n_cols):
                for layer in (0, 1):
                    if (row, col, layer) not in taken:
                        yield row, col, layer

    def extended(self, placements: dict[int, Slot]) -> "Layout":
        positions: dict[int, Slot] = dict(self.positions)
        positions.update(placements)
        return Layout(n_rows=self.n_rows, n_cols=self.n_cols, positions=positions)
