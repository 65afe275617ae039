""" Localization Services """

import logging
from typing import Literal, Optional, Union

from ..contracts.ancilla_chain import AncillaChain
from ..contracts.gbs_code import GBSCode
from ..contracts.index_out_of_range_error import IndexOutOfRangeError
from ..contracts.layout import Layout, Slot
from ..contracts.local_code import LocalCode
from ..contracts.no_slots_error import NoSlotsError
from ..contracts.pauli_op import PauliOp
from ..contracts.subsystem_code import SubsystemCode
from ..contracts.target_too_small_error import TargetTooSmallError
from .pauli import embed
from .subsystem import derive


def extend_with_ancilla(
    code: SubsystemCode, qubit: int, kind: Literal["x", "z"] = "x", position: Optional[Slot] = None
) -> SubsystemCode:
    """
    Adds one ancilla a coupled to `qubit`.

    Kind "x" adds X_q X_a and Z_a; kind "z" adds Z_q Z_a and X_a. Either way the new
    code has the same k and d on n + 1 qubits.

    Parameters
    ----------
    code: SubsystemCode
        The code to extend.
    qubit: int
        The qubit the ancilla couples to.
    kind: Literal["x", "z"]
        Which two-qubit coupling to add.
    position: Optional[Slot]
        Slot of the ancilla; the layout is carried over only when given.

    Raises
    ------
    IndexOutOfRangeError
        When qubit >= n.
    """

    if not 0 <= qubit < code.n:
        raise IndexOutOfRangeError(f"qubit {qubit} outside 0..{code.n - 1}")
    n: int = code.n + 1
    ancilla: int = code.n
    pair: int = (1 << qubit) | (1 << ancilla)
    if kind == "x":
        added: list[PauliOp] = [PauliOp.from_bits(n=n, x=pair, z=0), PauliOp.from_bits(n=n, x=0, z=1 << ancilla)]
    else:
        added = [PauliOp.from_bits(n=n, x=0, z=pair), PauliOp.from_bits(n=n, x=1 << ancilla, z=0)]
    layout: Optional[Layout] = None
    if code.layout is not None and position is not None:
        layout = code.layout.extended({ancilla: tuple(position)})
    return derive(n, [embed(generator, n) for generator in code.generators] + added, layout)


class _ChainBuilder:
    """Accumulates qubits, slots and generators while chains are laid down."""

    def __init__(self, gbs: GBSCode) -> None:
        self.positions: dict[int, Slot] = dict(gbs.code.layout.positions)
        self.links: list[tuple[str, int, int]] = []
        self.singles: list[tuple[str, int]] = []
        self.chains: list[AncillaChain] = []

    def ancilla(self, slot: Slot) -> int:
        qubit: int = len(self.positions)
        self.positions[qubit] = slot
        return qubit

    def chain(self, kind: Literal["row", "column"], start: int, end: int, slots: list[Slot]) -> None:
        link: str = "X" if kind == "row" else "Z"
        single: str = "Z" if kind == "row" else "X"
        ancillas: list[int] = [self.ancilla(slot) for slot in slots]
        path: list[int] = [start, *ancillas, end]
        for left, right in zip(path, path[1:]):
            self.links.append((link, left, right))
        for qubit in ancillas:
            self.singles.append((single, qubit))
        if ancillas:
            self.chains.append(AncillaChain(kind=kind, endpoints=(start, end), ancillas=tuple(ancillas)))

    def generators(self) -> list[PauliOp]:
        n: int = len(self.positions)
        result: list[PauliOp] = []
        for letter, left, right in self.links:
            pair: int = (1 << left) | (1 << right)
            result.append(PauliOp.from_bits(n=n, x=pair if letter == "X" else 0, z=pair if letter == "Z" else 0))
        for letter, qubit in self.singles:
            bit: int = 1 << qubit
            result.append(PauliOp.from_bits(n=n, x=bit if letter == "X" else 0, z=bit if letter == "Z" else 0))
        return result


def localize(gbs: GBSCode) -> LocalCode:
    """
    Replaces every long-range generator by a nearest-neighbour chain.

    Empty cells between consecutive occupied cells of a row receive ancillas on
    layer 0, linked by XX with a one-qubit Z on each ancilla; empty cells between
    consecutive occupied cells of a column receive ancillas on layer 1, linked by ZZ
    with a one-qubit X on each ancilla. Rows are processed left to right before
    columns top to bottom; ancillas are numbered in that order after the original
    qubits.

    Parameters
    ----------
    gbs: GBSCode
        A built generalized Bacon-Shor code.

    Returns
    -------
    local: LocalCode
        The local code; k = rank(A) and the distance is unchanged.
    """

    matrix = gbs.matrix
    builder: _ChainBuilder = _ChainBuilder(gbs)
    for row in range(matrix.n_rows):
        occupied: list[int] = [col for col in range(matrix.n_cols) if matrix.entry(row, col)]
        for left, right in zip(occupied, occupied[1:]):
            builder.chain(
                "row",
                gbs.qubit_at(row, left),
                gbs.qubit_at(row, right),
                [(row, col, 0) for col in range(left + 1, right)],
            )
    for col in range(matrix.n_cols):
        occupied = [row for row in range(matrix.n_rows) if matrix.entry(row, col)]
        for top, bottom in zip(occupied, occupied[1:]):
            builder.chain(
                "column",
                gbs.qubit_at(top, col),
                gbs.qubit_at(bottom, col),
                [(row, col, 1) for row in range(top + 1, bottom)],
            )
    layout: Layout = Layout(n_rows=matrix.n_rows, n_cols=matrix.n_cols, positions=builder.positions)
    code: SubsystemCode = derive(len(builder.positions), builder.generators(), layout)
    logging.debug(
        "[localize] {%s} chains, {%s} ancillas, n={%s}",
        len(builder.chains),
        code.n - gbs.code.n,
        code.n,
    )
    return LocalCode(code=code, matrix=matrix, chains=tuple(builder.chains))


def pad_to(local: LocalCode, target: int) -> LocalCode:
    """
    Fills free slots with pure gauge qubits (generators X_a and Z_a) until the code
    has `target` qubits. Slots are taken row-major, layer 0 before layer 1.

    Raises
    ------
    TargetTooSmallError
        When target < n.
    NoSlotsError
        When the grid has fewer free slots than qubits to add.
    """

    code: SubsystemCode = local.code
    if target < code.n:
        raise TargetTooSmallError(f"cannot pad {code.n} qubits down to {target}")
    if target == code.n:
        return local
    free: list[Slot] = list(code.layout.free_slots())
    missing: int = target - code.n
    if missing > len(free):
        raise NoSlotsError(f"{missing} qubits requested, {len(free)} free slots")
    placements: dict[int, Slot] = {code.n + index: slot for index, slot in enumerate(free[:missing])}
    generators: list[PauliOp] = [embed(generator, target) for generator in code.generators]
    for qubit in placements:
        generators.append(PauliOp.from_bits(n=target, x=1 << qubit, z=0))
        generators.append(PauliOp.from_bits(n=target, x=0, z=1 << qubit))
    padded: SubsystemCode = derive(target, generators, code.layout.extended(placements))
    return local.copy(update={"code": padded, "padded": local.padded + missing})


def _is_local(generator: PauliOp, layout: Layout) -> bool:
    if generator.weight <= 1:
        return True
    if generator.weight != 2:
        return False
    first, second = generator.support()
    (row_a, col_a), (row_b, col_b) = layout.cell(first), layout.cell(second)
    if generator.z.bits == 0:
        return row_a == row_b and abs(col_a - col_b) <= 1
    if generator.x.bits == 0:
        return col_a == col_b and abs(row_a - row_b) <= 1
    return False


def check_locality(code: Union[LocalCode, SubsystemCode]) -> bool:
    """
    True iff every generator is one-qubit, XX on horizontally adjacent cells, or ZZ
    on vertically adjacent cells (either layer). A code without a layout is not
    local.
    """

    subsystem: SubsystemCode = code.code if isinstance(code, LocalCode) else code
    if subsystem.layout is None:
        return False
    return all(_is_local(generator, subsystem.layout) for generator in subsystem.generators)
