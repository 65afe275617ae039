from baconshor.toolkit.contracts.bit_matrix import BitMatrix
from baconshor.toolkit.contracts.pauli_op import PauliOp
from baconshor.toolkit.services.pauli import parse

EXAMPLE: BitMatrix = BitMatrix.from_rows([[1, 1, 0], [0, 1, 1], [1, 0, 1]])
GAPPED_ROW: BitMatrix = BitMatrix.from_rows([[1, 0, 1]])


def all_ones(size: int) -> BitMatrix:
    return BitMatrix.ones(size, size)


def paulis(n: int, *texts: str) -> list[PauliOp]:
    return [parse(n, text) for text in texts]
