""" Region Definition """

from typing import Iterable

from pydantic import root_validator

from .base_model import BaseModel


class Region(BaseModel):
    """
    Region
    A subset M of the qubits of an n-qubit code.

    Attributes
    ----------
    n: int
        Size of the register the region lives in.
    members: frozenset[int]
        The qubits of M.
    """

    n: int
    members: frozenset[int] = frozenset()

    @root_validator(skip_on_failure=True)
    def _members_in_range(cls, values: dict) -> dict:  # pylint: disable=no-self-argument
        outside: list[int] = [qubit for qubit in values["members"] if not 0 <= qubit < values["n"]]
        if outside:
            raise ValueError(f"qubits {sorted(outside)} outside a register of {values['n']}")
        return values

    @classmethod
    def of(cls, n: int, members: Iterable[int]) -> "Region":
        return cls(n=n, members=frozenset(members))

    @classmethod
    def everything(cls, n: int) -> "Region":
        return cls(n=n, members=frozenset(range(n)))

    def complement(self) -> "Region":
        return Region(n=self.n, members=frozenset(range(self.n)) - self.members)

    def ordered(self) -> list[int]:
        return sorted(self.members)

    def __len__(self) -> int:
        return len(self.members)
