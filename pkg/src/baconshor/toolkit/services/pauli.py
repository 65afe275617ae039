""" Pauli Group Services """

import re
from typing import Iterable, Sequence

from ..contracts.dimension_mismatch_error import DimensionMismatchError
from ..contracts.group_basis import GroupBasis
from ..contracts.parse_error import ParseError
from ..contracts.pauli_op import PauliOp
from .gf2core import Echelon, dependencies, kernel_bits, popcount, reduce_rows

_FACTOR = re.compile(r"^([XYZ])(\d+)$")
_LETTER_BITS: dict[str, tuple[int, int]] = {"X": (1, 0), "Z": (0, 1), "Y": (1, 1)}


def _same_n(n: int, operators: Iterable[PauliOp]) -> None:
    for operator in operators:
        if operator.n != n:
            raise DimensionMismatchError(f"expected {n} qubits, received {operator.n}")


def single(n: int, qubit: int, letter: str) -> PauliOp:
    """A single-qubit factor X, Y or Z on `qubit`."""

    x, z = _LETTER_BITS[letter]
    return PauliOp.from_bits(n=n, x=x << qubit, z=z << qubit)


def product(n: int, factors: Iterable[tuple[str, int]]) -> PauliOp:
    """Product of single-qubit factors given as (letter, qubit)."""

    x: int = 0
    z: int = 0
    for letter, qubit in factors:
        bit_x, bit_z = _LETTER_BITS[letter]
        x ^= bit_x << qubit
        z ^= bit_z << qubit
    return PauliOp.from_bits(n=n, x=x, z=z)


def symplectic_product(left: PauliOp, right: PauliOp) -> int:
    """
    Commutation bit of two operators.

    Returns
    -------
    bit: int
        0 iff the operators commute: <x, z'> + <z, x'> mod 2.

    Raises
    ------
    DimensionMismatchError
        When the qubit counts differ.
    """

    if left.n != right.n:
        raise DimensionMismatchError(f"{left.n} != {right.n}")
    return popcount((left.x.bits & right.z.bits) ^ (left.z.bits & right.x.bits)) & 1


def commutes_bits(n: int, left: int, right: int) -> bool:
    """Commutation test on packed symplectic vectors."""

    mask: int = (1 << n) - 1
    return popcount((left & (right >> n)) ^ ((left >> n) & right & mask)) & 1 == 0


def _basis(n: int, vectors: Iterable[int]) -> GroupBasis:
    return GroupBasis.construct(
        n=n, generators=tuple(PauliOp.from_symplectic(n, vector) for vector in reduce_rows(list(vectors)))
    )


def group_from(n: int, generators: Sequence[PauliOp]) -> GroupBasis:
    """
    Canonical basis of the subgroup generated by a family of operators.

    Parameters
    ----------
    n: int
        Qubit count (needed for the empty family).
    generators: Sequence[PauliOp]
        Possibly redundant generators.

    Returns
    -------
    group: GroupBasis
        The canonical independent basis.
    """

    _same_n(n, generators)
    return _basis(n, (generator.symplectic for generator in generators))


def centralizer(group: GroupBasis) -> GroupBasis:
    """
    All phaseless operators commuting with every element of the group.

    The commutation condition against a generator (x, z) is the ordinary inner
    product with its swapped form (z, x), so the centralizer is a kernel.
    """

    n: int = group.n
    mask: int = (1 << n) - 1
    swapped: list[int] = [(vector >> n) | ((vector & mask) << n) for vector in group.vectors()]
    return _basis(n, kernel_bits(swapped, 2 * n))


def intersect(left: GroupBasis, right: GroupBasis) -> GroupBasis:
    """
    Intersection of two subgroups.

    Stacks both bases and collects every relation sum c_i g_i + sum e_j h_j = 0;
    the G-halves sum c_i g_i of those relations span the intersection.
    """

    if left.n != right.n:
        raise DimensionMismatchError(f"{left.n} != {right.n}")
    left_vectors: list[int] = left.vectors()
    stacked: list[int] = left_vectors + right.vectors()
    elements: list[int] = []
    for relation in dependencies(stacked):
        element: int = 0
        for index, vector in enumerate(left_vectors):
            if (relation >> index) & 1:
                element ^= vector
        elements.append(element)
    return _basis(left.n, elements)


def contains(group: GroupBasis, operator: PauliOp) -> bool:
    """Membership of a phaseless operator in the subgroup."""

    if group.n != operator.n:
        raise DimensionMismatchError(f"{group.n} != {operator.n}")
    return contains_bits(group.vectors(), operator.symplectic)


def contains_bits(canonical: Sequence[int], vector: int) -> bool:
    """Membership against canonical reduced vectors (each pivot is the row's lowest bit)."""

    for row in canonical:
        pivot: int = (row & -row).bit_length() - 1
        if (vector >> pivot) & 1:
            vector ^= row
    return vector == 0


def is_subgroup(inner: GroupBasis, outer: GroupBasis) -> bool:
    outer_vectors: list[int] = outer.vectors()
    return all(contains_bits(outer_vectors, vector) for vector in inner.vectors())


def echelon_of(group: GroupBasis) -> Echelon:
    echelon: Echelon = Echelon()
    for vector in group.vectors():
        echelon.insert(vector)
    return echelon


def embed(operator: PauliOp, n: int) -> PauliOp:
    """The same operator acting on a larger register (new qubits idle)."""

    if n < operator.n:
        raise DimensionMismatchError(f"cannot embed {operator.n} qubits into {n}")
    return PauliOp.from_bits(n=n, x=operator.x.bits, z=operator.z.bits)


# String form


def render(operator: PauliOp) -> str:
    """Space-separated factors such as "X0 Z3 Y4"; identity renders as "I"."""

    return str(operator)


def parse(n: int, text: str) -> PauliOp:
    """
    Parses the factor grammar produced by `render`.

    Raises
    ------
    ParseError
        On unknown factors, repeated qubits or indices outside the register.
    """

    stripped: str = text.strip()
    if stripped == "I":
        return PauliOp.identity(n)
    factors: list[tuple[str, int]] = []
    seen: set[int] = set()
    for token in stripped.split():
        match = _FACTOR.match(token)
        if match is None:
            raise ParseError(f"unrecognised Pauli factor {token!r}")
        qubit: int = int(match.group(2))
        if qubit >= n:
            raise ParseError(f"qubit {qubit} outside a register of {n}")
        if qubit in seen:
            raise ParseError(f"qubit {qubit} repeated in {text!r}")
        seen.add(qubit)
        factors.append((match.group(1), qubit))
    if not factors:
        raise ParseError("empty Pauli string")
    return product(n, factors)
