""" Subsystem Code Services """

import json
import logging
import re
from itertools import product
from pathlib import Path
from typing import Any, Iterator, Optional, Sequence, Union

import numpy as np

from ..contracts.distance_result import DistanceResult
from ..contracts.dimension_mismatch_error import DimensionMismatchError
from ..contracts.group_basis import GroupBasis
from ..contracts.layout import Layout
from ..contracts.negative_count_error import NegativeCountError
from ..contracts.no_logical_qubits_error import NoLogicalQubitsError
from ..contracts.parse_error import ParseError
from ..contracts.pauli_op import PauliOp
from ..contracts.subsystem_code import SubsystemCode
from .gf2core import DEFAULT_CAP, block_weights, check_cap, iter_span_blocks, lowest_bit, pack, unpack, words_for
from .pauli import centralizer, commutes_bits, contains_bits, group_from, intersect, parse

_HEADER = re.compile(r"^n\s*=\s*(\d+)$")
_GRID = re.compile(r"^grid\s*=\s*(\d+)x(\d+)$")


def derive(n: int, generators: Sequence[PauliOp], layout: Optional[Layout] = None) -> SubsystemCode:
    """
    Derives a subsystem code from its gauge generators.

    Parameters
    ----------
    n: int
        Qubit count.
    generators: Sequence[PauliOp]
        Gauge generators, possibly redundant.
    layout: Optional[Layout]
        Optional placement of the qubits.

    Returns
    -------
    code: SubsystemCode
        G, S = G ∩ C(G), k and g with n = dim S + k + g.
    """

    gauge: GroupBasis = group_from(n, generators)
    stabilizer: GroupBasis = intersect(gauge, centralizer(gauge))
    twice_g: int = gauge.dim - stabilizer.dim
    twice_k: int = 2 * n - gauge.dim - stabilizer.dim
    if twice_g < 0 or twice_k < 0 or twice_g % 2 or twice_k % 2:
        raise NegativeCountError(f"dim G={gauge.dim}, dim S={stabilizer.dim}, n={n}")
    if layout is not None and set(layout.positions) != set(range(n)):
        raise DimensionMismatchError(f"layout places {len(layout.positions)} qubits, code has {n}")
    logging.debug(
        "[subsystem] derived n={%s} dim G={%s} dim S={%s} k={%s} g={%s}",
        n,
        gauge.dim,
        stabilizer.dim,
        twice_k // 2,
        twice_g // 2,
    )
    return SubsystemCode(
        n=n,
        generators=tuple(generators),
        gauge=gauge,
        stabilizer=stabilizer,
        k=twice_k // 2,
        g=twice_g // 2,
        layout=layout,
    )


def is_dressed_logical(code: SubsystemCode, operator: PauliOp) -> bool:
    """True iff the operator lies in C(S) but not in G."""

    if operator.n != code.n:
        raise DimensionMismatchError(f"{code.n} != {operator.n}")
    vector: int = operator.symplectic
    if not all(commutes_bits(code.n, vector, stabilizer) for stabilizer in code.stabilizer.vectors()):
        return False
    return not contains_bits(code.gauge.vectors(), vector)


def _packed(operator: PauliOp, words: int) -> np.ndarray:
    return np.concatenate([pack(operator.x.bits, words), pack(operator.z.bits, words)])


def _pivot_location(pivot: int, n: int, words: int) -> tuple[int, np.uint64]:
    if pivot < n:
        return pivot // 64, np.uint64(pivot % 64)
    return words + (pivot - n) // 64, np.uint64((pivot - n) % 64)


def distance_full(code: SubsystemCode, cap: int = DEFAULT_CAP) -> DistanceResult:
    """
    Exact distance by enumerating every element of C(S).

    Weights are computed for whole blocks; gauge membership is tested only for the
    elements lighter than the incumbent.

    Raises
    ------
    NoLogicalQubitsError
        When k = 0.
    CapExceededError
        When 2**dim C(S) exceeds the cap.
    """

    if code.k == 0:
        raise NoLogicalQubitsError("distance is undefined for a code without logical qubits")
    logical_space: GroupBasis = centralizer(code.stabilizer)
    check_cap(logical_space.dim, cap)
    n: int = code.n
    words: int = words_for(n)
    generators: np.ndarray = np.stack([_packed(operator, words) for operator in logical_space.generators])
    gauge_rows: list[tuple[int, np.uint64, np.ndarray]] = [
        (*_pivot_location(lowest_bit(generator.symplectic), n, words), _packed(generator, words))
        for generator in code.gauge.generators
    ]
    logging.debug("[subsystem] full distance oracle over 2^{%s} elements", logical_space.dim)

    best: int = n + 1
    witness: Optional[PauliOp] = None
    enumerated: int = 0
    for block in iter_span_blocks(generators):
        enumerated += block.shape[0]
        weights: np.ndarray = block_weights(block[:, :words] | block[:, words:])
        lighter: np.ndarray = np.nonzero(weights < best)[0]
        if lighter.size == 0:
            continue
        residual: np.ndarray = block[lighter]
        for word, bit, row in gauge_rows:
            hit: np.ndarray = ((residual[:, word] >> bit) & np.uint64(1)).astype(bool)
            residual[hit] ^= row
        outside: np.ndarray = np.any(residual != 0, axis=1)
        if not outside.any():
            continue
        candidate_weights: np.ndarray = np.where(outside, weights[lighter], n + 1)
        position: int = int(np.argmin(candidate_weights))
        best = int(candidate_weights[position])
        row: np.ndarray = block[lighter[position]]
        witness = PauliOp.from_bits(n=n, x=unpack(row[:words]), z=unpack(row[words:]))
    return DistanceResult(
        mode="full", value=best, certified_lower_bound=best - 1, witness=witness, enumerated=enumerated
    )


def colex_combinations(n: int, size: int) -> Iterator[tuple[int, ...]]:
    """Subsets of range(n) with `size` elements in colexicographic order."""

    if size == 0:
        yield ()
        return
    for last in range(size - 1, n):
        for head in colex_combinations(last, size - 1):
            yield head + (last,)


def _syndrome_table(code: SubsystemCode) -> tuple[list[list[int]], int]:
    """
    Per-qubit, per-letter anticommutation masks.

    Bits below `offset` flag stabilizer generators; the bits above flag generators of
    C(G). An operator is a dressed logical iff its stabilizer bits vanish and its C(G)
    bits do not (G = C(C(G))).
    """

    n: int = code.n
    stabilizers: list[int] = code.stabilizer.vectors()
    bare: list[int] = centralizer(code.gauge).vectors()
    checks: list[int] = stabilizers + bare
    table: list[list[int]] = []
    for qubit in range(n):
        letters: list[int] = []
        for x, z in ((1, 0), (0, 1), (1, 1)):
            vector: int = (x << qubit) | (z << (n + qubit))
            mask: int = 0
            for index, check in enumerate(checks):
                if not commutes_bits(n, vector, check):
                    mask |= 1 << index
            letters.append(mask)
        table.append(letters)
    return table, len(stabilizers)


def distance_bounded(code: SubsystemCode, w_max: int) -> DistanceResult:
    """
    Weight-limited distance search.

    Enumerates every operator of weight 1..w_max (supports in colexicographic order,
    letters X < Z < Y) and stops at the first dressed logical operator.

    Returns
    -------
    result: DistanceResult
        The exact distance with a witness when one is found, otherwise the
        certificate d > w_max.
    """

    if code.k == 0:
        raise NoLogicalQubitsError("distance is undefined for a code without logical qubits")
    table, offset = _syndrome_table(code)
    stabilizer_mask: int = (1 << offset) - 1
    enumerated: int = 0
    for weight in range(1, w_max + 1):
        for support in colex_combinations(code.n, weight):
            rows: list[list[int]] = [table[qubit] for qubit in support]
            for letters in product(range(3), repeat=weight):
                enumerated += 1
                syndrome: int = 0
                for row, letter in zip(rows, letters):
                    syndrome ^= row[letter]
                if syndrome & stabilizer_mask == 0 and syndrome >> offset:
                    factors: list[tuple[str, int]] = [("XZY"[letter], qubit) for qubit, letter in zip(support, letters)]
                    witness: PauliOp = PauliOp.from_bits(
                        n=code.n,
                        x=sum(1 << qubit for letter, qubit in factors if letter in "XY"),
                        z=sum(1 << qubit for letter, qubit in factors if letter in "ZY"),
                    )
                    return DistanceResult(
                        mode="bounded",
                        value=weight,
                        certified_lower_bound=weight - 1,
                        witness=witness,
                        enumerated=enumerated,
                    )
    return DistanceResult(mode="bounded", value=None, certified_lower_bound=max(w_max, 0), enumerated=enumerated)


def random_gauge_group(n: int, rng: np.random.Generator, count: Optional[int] = None) -> list[PauliOp]:
    """Random non-identity gauge generators on n qubits (count defaults to 1..2n)."""

    total: int = int(rng.integers(1, 2 * n + 1)) if count is None else count
    generators: list[PauliOp] = []
    while len(generators) < total:
        letters: np.ndarray = rng.integers(0, 4, size=n)
        x: int = sum(1 << qubit for qubit, letter in enumerate(letters.tolist()) if letter in (1, 3))
        z: int = sum(1 << qubit for qubit, letter in enumerate(letters.tolist()) if letter in (2, 3))
        if x or z:
            generators.append(PauliOp.from_bits(n=n, x=x, z=z))
    return generators


# Code file format


def render_code(code: SubsystemCode) -> str:
    """Renders the code file format: header, optional layout block, gauge block."""

    lines: list[str] = [f"n={code.n}"]
    if code.layout is not None:
        lines.append(f"grid={code.layout.n_rows}x{code.layout.n_cols}")
        lines.append("layout:")
        for qubit in sorted(code.layout.positions):
            row, col, layer = code.layout.positions[qubit]
            lines.append(f"{qubit} {row} {col} {layer}")
    lines.append("gauge:")
    lines.extend(str(generator) for generator in code.generators)
    return "\n".join(lines) + "\n"


def parse_code(text: str) -> SubsystemCode:
    """
    Parses the code file format and derives the code.

    Raises
    ------
    ParseError
        On a missing header, malformed layout lines or Pauli strings.
    """

    lines: list[str] = [line.strip() for line in text.splitlines() if line.strip() and not line.strip().startswith("#")]
    if not lines or _HEADER.match(lines[0]) is None:
        raise ParseError("code file must start with n=<int>")
    n: int = int(_HEADER.match(lines[0]).group(1))
    grid: Optional[tuple[int, int]] = None
    positions: dict[int, tuple[int, int, int]] = {}
    generators: list[PauliOp] = []
    section: Optional[str] = None
    for line in lines[1:]:
        grid_match = _GRID.match(line)
        if grid_match is not None and section is None:
            grid = (int(grid_match.group(1)), int(grid_match.group(2)))
        elif line in ("layout:", "gauge:"):
            section = line[:-1]
        elif section == "layout":
            fields: list[str] = line.split()
            if len(fields) != 4 or not all(field.lstrip("-").isdigit() for field in fields):
                raise ParseError(f"malformed layout line {line!r}")
            qubit, row, col, layer = (int(field) for field in fields)
            positions[qubit] = (row, col, layer)
        elif section == "gauge":
            generators.append(parse(n, line))
        else:
            raise ParseError(f"unexpected line {line!r}")
    layout: Optional[Layout] = None
    if positions:
        if grid is None:
            grid = (
                max(row for row, _, _ in positions.values()) + 1,
                max(col for _, col, _ in positions.values()) + 1,
            )
        try:
            layout = Layout(n_rows=grid[0], n_cols=grid[1], positions=positions)
        except ValueError as error:
            raise ParseError(str(error)) from error
    return derive(n, generators, layout)


def read_code(path: Union[str, Path]) -> SubsystemCode:
    return parse_code(Path(path).read_text(encoding="utf-8"))


def code_to_json(code: SubsystemCode, distance: Optional[int] = None, derived: bool = True) -> dict[str, Any]:
    """JSON mirror of the code file, with the derived parameters after analysis."""

    document: dict[str, Any] = {
        "n": code.n,
        "layout": None,
        "gauge_generators": [str(generator) for generator in code.generators],
    }
    if code.layout is not None:
        document["layout"] = {
            "n_rows": code.layout.n_rows,
            "n_cols": code.layout.n_cols,
            "positions": [[qubit, *code.layout.positions[qubit]] for qubit in sorted(code.layout.positions)],
        }
    if derived:
        document["derived"] = {"dim_s": code.dim_s, "k": code.k, "g": code.g}
        if distance is not None:
            document["derived"]["distance"] = distance
    return document


def code_from_json(document: Union[str, dict[str, Any]]) -> SubsystemCode:
    if isinstance(document, str):
        document = json.loads(document)
    n: int = int(document["n"])
    layout: Optional[Layout] = None
    if document.get("layout"):
        layout = Layout(
            n_rows=document["layout"]["n_rows"],
            n_cols=document["layout"]["n_cols"],
            positions={qubit: (row, col, layer) for qubit, row, col, layer in document["layout"]["positions"]},
        )
    return derive(n, [parse(n, text) for text in document["gauge_generators"]], layout)
