""" Pauli Operator Definition """

from pydantic import root_validator

from .base_model import BaseModel
from .bit_vector import BitVector


class PauliOp(BaseModel):
    """
    Pauli Operator
    A phaseless n-qubit Pauli operator in symplectic form. Qubit q carries X when
    only x_q is set, Z when only z_q is set, Y when both are set.

    Attributes
    ----------
    n: int
        Qubit count.
    x: BitVector
        X-part.
    z: BitVector
        Z-part.
    """

    n: int
    x: BitVector
    z: BitVector

    @root_validator(skip_on_failure=True)
    def _parts_match(cls, values: dict) -> dict:  # pylint: disable=no-self-argument
        if values["x"].length != values["n"] or values["z"].length != values["n"]:
            raise ValueError("x and z parts must both have length n")
        return values

    @classmethod
    def from_bits(cls, n: int, x: int, z: int) -> "PauliOp":
        """Builds an operator from already packed parts without re-validation."""

        return cls.construct(n=n, x=BitVector.construct(length=n, bits=x), z=BitVector.construct(length=n, bits=z))

    @classmethod
    def from_symplectic(cls, n: int, value: int) -> "PauliOp":
        """Inverse of `symplectic`: bits 0..n-1 are the X-part, bits n..2n-1 the Z-part."""

        mask: int = (1 << n) - 1
        return cls.from_bits(n=n, x=value & mask, z=value >> n)

    @classmethod
    def identity(cls, n: int) -> "PauliOp":
        return cls.from_bits(n=n, x=0, z=0)

    @property
    def symplectic(self) -> int:
        """The 2n-bit packed form, X-part first."""
        return self.x.bits | (self.z.bits << self.n)

    @property
    def support_bits(self) -> int:
        return self.x.bits | self.z.bits

    @property
    def weight(self) -> int:
        """|P| = |Supp(P)|."""
        return bin(self.support_bits).count("1")

    def support(self) -> list[int]:
        bits: int = self.support_bits
        return [qubit for qubit in range(self.n) if (bits >> qubit) & 1]

    def letter(self, qubit: int) -> str:
        return "IXZY"[((self.x.bits >> qubit) & 1) | (((self.z.bits >> qubit) & 1) << 1)]

    def __mul__(self, other: "PauliOp") -> "PauliOp":
        if other.n != self.n:
            raise ValueError("qubit count mismatch")
        return PauliOp.from_bits(n=self.n, x=self.x.bits ^ other.x.bits, z=self.z.bits ^ other.z.bits)

    def __str__(self) -> str:
        factors: list[str] = [f"{self.letter(qubit)}{qubit}" for qubit in self.support()]
        return " ".join(factors) if factors else "I"
