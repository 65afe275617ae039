""" Region Services """

import logging
import math
import re
from typing import Optional

import numpy as np

from ..contracts.cap_exceeded_error import CapExceededError
from ..contracts.group_basis import GroupBasis
from ..contracts.layout import Layout
from ..contracts.missing_layout_error import MissingLayoutError
from ..contracts.parse_error import ParseError
from ..contracts.pauli_op import PauliOp
from ..contracts.region import Region
from ..contracts.restriction_report import RestrictionReport
from ..contracts.subsystem_code import SubsystemCode
from .gf2core import DEFAULT_CAP, dependencies, reduce_rows
from .pauli import group_from
from .subsystem import derive, distance_bounded, distance_full

_RECTANGLE = re.compile(r"^(\d+):(\d+),(\d+):(\d+)$")


def _mask(region: Region) -> int:
    bits: int = 0
    for qubit in region.members:
        bits |= 1 << qubit
    return bits


def _project(vector: int, n: int, mask: int) -> int:
    """Restriction of a symplectic vector to the qubits in `mask`."""

    return vector & (mask | (mask << n))


def restrict_group(group: GroupBasis, region: Region) -> GroupBasis:
    """
    G_M: the generators of G restricted to M.

    Restriction is a coordinate projection of the symplectic vectors, so the
    restricted generators span G_M.
    """

    mask: int = _mask(region)
    projected: list[PauliOp] = [
        PauliOp.from_symplectic(group.n, _project(vector, group.n, mask)) for vector in group.vectors()
    ]
    return group_from(group.n, projected)


def supported_subgroup(group: GroupBasis, region: Region) -> GroupBasis:
    """
    G(M): the elements of G acting trivially outside M.

    Every relation among the generators' restrictions to the complement selects a
    product of generators that vanishes there.
    """

    outside: int = _mask(region.complement())
    vectors: list[int] = group.vectors()
    elements: list[int] = []
    for relation in dependencies([_project(vector, group.n, outside) for vector in vectors]):
        element: int = 0
        for index, vector in enumerate(vectors):
            if (relation >> index) & 1:
                element ^= vector
        elements.append(element)
    return group_from(group.n, [PauliOp.from_symplectic(group.n, element) for element in elements])


def _restricted_rank(group: GroupBasis, region: Region) -> int:
    mask: int = _mask(region)
    return len(reduce_rows([_project(vector, group.n, mask) for vector in group.vectors()]))


def l(code: SubsystemCode, region: Region) -> int:  # pylint: disable=invalid-name
    """
    Independent dressed logical operators supported on M:
    dim(C(S_M) ∩ P(M)) - dim G(M).

    Inside P(M) the symplectic form is nondegenerate, so the centralizer of S_M
    there has dimension 2|M| - dim S_M.
    """

    return 2 * len(region) - _restricted_rank(code.stabilizer, region) - supported_subgroup(code.gauge, region).dim


def l_bare(code: SubsystemCode, region: Region) -> int:
    """Independent bare logical operators supported on M: dim(C(G_M) ∩ P(M)) - dim S(M)."""

    return 2 * len(region) - _restricted_rank(code.gauge, region) - supported_subgroup(code.stabilizer, region).dim


def boundary(layout: Optional[Layout], region: Region, interaction: int) -> Region:
    """
    ∂M: qubits outside M within Chebyshev cell distance `interaction` of some qubit
    of M (layers ignored).

    Raises
    ------
    MissingLayoutError
        When no layout is available.
    """

    if layout is None:
        raise MissingLayoutError("boundary requires a layout")
    members: list[int] = region.ordered()
    near: set[int] = {
        qubit
        for qubit in region.complement().members
        if any(layout.distance(qubit, member) <= interaction for member in members)
    }
    return Region(n=region.n, members=frozenset(near))


def interaction_range(code: SubsystemCode) -> int:
    """Largest Chebyshev cell distance between two qubits of one gauge generator."""

    if code.layout is None:
        raise MissingLayoutError("interaction range requires a layout")
    widest: int = 0
    for generator in code.generators:
        support: list[int] = generator.support()
        for index, first in enumerate(support):
            for second in support[index + 1 :]:
                widest = max(widest, code.layout.distance(first, second))
    return widest


def cleaning_check(code: SubsystemCode, region: Region) -> bool:
    """l_bare(M) + l(complement of M) = 2k."""

    return l_bare(code, region) + l(code, region.complement()) == 2 * code.k


def stabilizer_cleaning_check(code: SubsystemCode, region: Region) -> bool:
    """l(M) + l(complement of M) = 2k; the identity is asserted for stabilizer codes (g = 0)."""

    return l(code, region) + l(code, region.complement()) == 2 * code.k


def compress(code: SubsystemCode, region: Region) -> SubsystemCode:
    """
    The code whose gauge group is G_M, renumbered onto the |M| qubits of M in
    ascending order.
    """

    members: list[int] = region.ordered()
    size: int = len(members)
    generators: list[PauliOp] = []
    for vector in restrict_group(code.gauge, region).vectors():
        x: int = 0
        z: int = 0
        for index, qubit in enumerate(members):
            x |= ((vector >> qubit) & 1) << index
            z |= ((vector >> (code.n + qubit)) & 1) << index
        generators.append(PauliOp.from_bits(n=size, x=x, z=z))
    return derive(size, generators)


def _affordable_weight(n: int, cap: int) -> int:
    """Largest w such that every operator of weight 1..w can be enumerated within `cap`."""

    total: int = 0
    for weight in range(1, n + 1):
        total += math.comb(n, weight) * 3**weight
        if total > cap:
            return weight - 1
    return n


def code_distance(code: SubsystemCode, cap: int = DEFAULT_CAP) -> int:
    """
    Distance of a code: the full oracle, or the bounded oracle when the centralizer
    is too large to enumerate and the weight search fits under the cap.

    Raises
    ------
    CapExceededError
        When neither oracle settles the distance within `cap`.
    """

    try:
        return distance_full(code, cap=cap).value
    except CapExceededError as error:
        w_max: int = _affordable_weight(code.n, cap)
        logging.debug("[regions] full oracle over cap, bounded search to weight {%s}", w_max)
        result = distance_bounded(code, w_max=w_max)
        if result.value is None:
            raise error
        return result.value


def restriction_check(
    code: SubsystemCode,
    region: Region,
    interaction: Optional[int] = None,
    distance: Optional[int] = None,
    cap: int = DEFAULT_CAP,
) -> RestrictionReport:
    """
    Restricts a local code to a region and checks that the restricted code either
    has no logical qubits or distance at least d - |∂M|.

    Parameters
    ----------
    code: SubsystemCode
        A code with a layout and k >= 1.
    region: Region
        M.
    interaction: Optional[int]
        Interaction range r; defaults to `interaction_range(code)`.
    distance: Optional[int]
        Known distance of `code`; computed with `code_distance` when omitted.
    cap: int
        Enumeration cap for both oracles.

    Returns
    -------
    report: RestrictionReport
        Inconclusive (and passing) when the restricted oracle exceeds the cap.

    Raises
    ------
    MissingLayoutError
        When the code has no layout.
    CapExceededError
        When the distance of `code` itself cannot be computed.
    """

    if code.layout is None:
        raise MissingLayoutError("restriction check requires a layout")
    reach: int = interaction_range(code) if interaction is None else interaction
    full_distance: int = code_distance(code, cap=cap) if distance is None else distance
    edge: Region = boundary(code.layout, region, reach)
    restricted: SubsystemCode = compress(code, region)
    report: dict = {
        "region_size": len(region),
        "boundary_size": len(edge),
        "interaction_range": reach,
        "d": full_distance,
        "k_restricted": restricted.k,
    }
    if restricted.k == 0:
        return RestrictionReport(**report)
    try:
        restricted_distance: int = distance_full(restricted, cap=cap).value
    except CapExceededError as error:
        logging.debug("[regions] restriction inconclusive: {%s}", str(error))
        return RestrictionReport(**report, conclusive=False)
    return RestrictionReport(
        **report,
        d_restricted=restricted_distance,
        holds=restricted_distance >= full_distance - len(edge),
    )


def complement_witness(group: GroupBasis, region: Region) -> Optional[PauliOp]:
    """
    A non-identity element of G acting trivially on M.

    One exists whenever 2|M| < dim G; returns None when G has no such element.
    """

    avoiding: GroupBasis = supported_subgroup(group, region.complement())
    return avoiding.generators[0] if avoiding.generators else None


def random_local_code(rows: int, cols: int, rng: np.random.Generator, occupancy: float = 0.75) -> SubsystemCode:
    """
    A random code on a grid: cells are occupied independently (at least one), and
    each generator is a random one- or two-qubit operator on neighbouring cells.
    """

    cells: list[tuple[int, int]] = [
        (row, col) for row in range(rows) for col in range(cols) if rng.random() < occupancy
    ]
    if not cells:
        cells = [(int(rng.integers(rows)), int(rng.integers(cols)))]
    n: int = len(cells)
    layout: Layout = Layout(
        n_rows=rows, n_cols=cols, positions={qubit: (row, col, 0) for qubit, (row, col) in enumerate(cells)}
    )
    neighbours: list[tuple[int, int]] = [
        (first, second)
        for first in range(n)
        for second in range(first + 1, n)
        if layout.distance(first, second) <= 1
    ]
    generators: list[PauliOp] = []
    for _ in range(int(rng.integers(1, 2 * n + 1))):
        if neighbours and rng.random() < 0.7:
            first, second = neighbours[int(rng.integers(len(neighbours)))]
            letters = rng.integers(1, 4, size=2).tolist()
            support: list[tuple[int, int]] = [(first, letters[0]), (second, letters[1])]
        else:
            support = [(int(rng.integers(n)), int(rng.integers(1, 4)))]
        x: int = sum(1 << qubit for qubit, letter in support if letter in (1, 3))
        z: int = sum(1 << qubit for qubit, letter in support if letter in (2, 3))
        generators.append(PauliOp.from_bits(n=n, x=x, z=z))
    return derive(n, generators, layout)


def parse_region(text: str, code: SubsystemCode) -> Region:
    """
    Parses a region: comma-separated qubit indices, or a rectangle "r0:r1,c0:c1"
    (half-open ranges) resolved through the layout. An empty string is the empty
    region.
    """

    stripped: str = text.strip()
    rectangle = _RECTANGLE.match(stripped)
    if rectangle is not None:
        if code.layout is None:
            raise MissingLayoutError("rectangular regions require a layout")
        row_start, row_stop, col_start, col_stop = (int(value) for value in rectangle.groups())
        members: set[int] = {
            qubit
            for qubit, (row, col, _) in code.layout.positions.items()
            if row_start <= row < row_stop and col_start <= col < col_stop
        }
        return Region(n=code.n, members=frozenset(members))
    if not stripped:
        return Region(n=code.n)
    try:
        indices: set[int] = {int(token) for token in stripped.split(",")}
        return Region(n=code.n, members=frozenset(indices))
    except ValueError as error:
        raise ParseError(f"unrecognised region {text!r}") from error
