""" Ancilla Chain Definition """

from typing import Literal

from .base_model import BaseModel


class AncillaChain(BaseModel):
    """
    Ancilla Chain
    Records how one long-range generator was split into nearest-neighbour links.

    Attributes
    ----------
    kind: Literal["row", "column"]
        Row chains carry XX links, column chains ZZ links.
    endpoints: tuple[int, int]
        The two original qubits the removed generator acted on.
    ancillas: tuple[int, ...]
        The inserted qubits, ordered along the chain.
    """

    kind: Literal["row", "column"]
    endpoints: tuple[int, int]
    ancillas: tuple[int, ...]
