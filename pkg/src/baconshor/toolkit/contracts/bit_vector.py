""" Bit Vector Definition """

from typing import Iterable

from pydantic import validator

from .base_model import BaseModel


class BitVector(BaseModel):
    """
    Bit Vector
    A GF(2) vector packed into a python integer (bit i holds entry i).

    Attributes
    ----------
    length: int
        The number of entries.
    bits: int
        The packed entries.
    """

    length: int
    bits: int = 0

    @validator("length")
    def _length_nonnegative(cls, value: int) -> int:  # pylint: disable=no-self-argument
        if value < 0:
            raise ValueError("length must be nonnegative")
        return value

    @validator("bits")
    def _bits_fit(cls, value: int, values: dict) -> int:  # pylint: disable=no-self-argument
        length: int = values.get("length", 0)
        if value < 0 or value >> length:
            raise ValueError(f"bits {value} do not fit in length {length}")
        return value

    @classmethod
    def from_string(cls, text: str) -> "BitVector":
        """Builds a vector from a '0'/'1' string, entry 0 first."""

        bits: int = 0
        for index, char in enumerate(text):
            if char == "1":
                bits |= 1 << index
            elif char != "0":
                raise ValueError(f"Unexpected character {char!r}")
        return cls(length=len(text), bits=bits)

    @classmethod
    def from_indices(cls, length: int, indices: Iterable[int]) -> "BitVector":
        """Builds a vector with ones at the given indices."""

        bits: int = 0
        for index in indices:
            bits |= 1 << index
        return cls(length=length, bits=bits)

    def __getitem__(self, index: int) -> int:
        return (self.bits >> index) & 1

    def __xor__(self, other: "BitVector") -> "BitVector":
        if other.length != self.length:
            raise ValueError("length mismatch")
        return BitVector(length=self.length, bits=self.bits ^ other.bits)

    @property
    def weight(self) -> int:
        """Hamming weight."""
        return bin(self.bits).count("1")

    def support(self) -> list[int]:
        """Indices of the nonzero entries, ascending."""
        return [index for index in range(self.length) if (self.bits >> index) & 1]

    def to_string(self) -> str:
        return "".join("1" if (self.bits >> index) & 1 else "0" for index in range(self.length))
