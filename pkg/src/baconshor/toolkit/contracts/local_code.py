""" Local Code Definition """

from .ancilla_chain import AncillaChain
from .base_model import BaseModel
from .bit_matrix import BitMatrix
from .subsystem_code import SubsystemCode


class LocalCode(BaseModel):
    """
    Local Code
    A spatially local code together with its provenance.

    Attributes
    ----------
    code: SubsystemCode
        The code, always carrying a layout.
    matrix: BitMatrix
        The matrix the code was localized from.
    chains: tuple[AncillaChain, ...]
        Every chain inserted by localization.
    padded: int
        Number of pure gauge qubits added by padding.
    """

    code: SubsystemCode
    matrix: BitMatrix
    chains: tuple[AncillaChain, ...] = ()
    padded: int = 0

    @property
    def row_ancillas(self) -> int:
        return sum(len(chain.ancillas) for chain in self.chains if chain.kind == "row")

    @property
    def column_ancillas(self) -> int:
        return sum(len(chain.ancillas) for chain in self.chains if chain.kind == "column")
