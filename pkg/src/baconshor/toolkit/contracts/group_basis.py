""" Group Basis Definition """

from .base_model import BaseModel
from .pauli_op import PauliOp


class GroupBasis(BaseModel):
    """
    Group Basis
    Independent generators of a subgroup of the phaseless Pauli group, held in the
    canonical reduced form (reduced row echelon over the 2n-bit representation,
    X-part columns first). Two bases describe the same subgroup iff they are equal.

    Attributes
    ----------
    n: int
        Qubit count.
    generators: tuple[PauliOp, ...]
        The canonical generators.
    """

    n: int
    generators: tuple[PauliOp, ...] = ()

    @property
    def dim(self) -> int:
        return len(self.generators)

    def vectors(self) -> list[int]:
        """Generators in packed symplectic form."""
        return [generator.symplectic for generator in self.generators]
