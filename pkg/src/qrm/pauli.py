"""Phase-free Pauli operators in binary symplectic ``(x | z)`` form.

A qubit carries X for ``(1, 0)``, Z for ``(0, 1)`` and Y for ``(1, 1)``.
As a row of a ``2n``-column matrix the x-part occupies the left half.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gf2 import BitVector

LETTERS = "IXZY"
# per-qubit (x, z) bits for the letters X, Z, Y, in enumeration order
XZY = ((1, 0), (0, 1), (1, 1))


@dataclass(frozen=True)
class PauliVector:
    x: BitVector
    z: BitVector

    def __post_init__(self):
        if self.x.length != self.z.length:
            raise ValueError("x and z parts differ in length")

    @property
    def n(self) -> int:
        return self.x.length

    @classmethod
    def identity(cls, n: int) -> PauliVector:
        return cls(BitVector.zeros(n), BitVector.zeros(n))

    @classmethod
    def from_word(cls, word: int, n: int) -> PauliVector:
        """Split a ``2n``-bit row word into its halves."""
        mask = (1 << n) - 1
        return cls(BitVector(n, word >> n), BitVector(n, word & mask))

    @classmethod
    def from_row(cls, row: BitVector) -> PauliVector:
        if row.length % 2:
            raise ValueError("row length must be even")
        return cls(*row.split(row.length // 2))

    @classmethod
    def parse(cls, text: str) -> PauliVector:
        """Parse ``"0011 | 0101"`` (spaces around the bar optional)."""
        left, sep, right = text.partition("|")
        if not sep:
            raise ValueError(f"missing '|' in {text!r}")
        return cls(BitVector.parse(left.strip()), BitVector.parse(right.strip()))

    @classmethod
    def from_letters(cls, letters: str) -> PauliVector:
        """``"IXZY"`` style string to a vector."""
        if set(letters) - set(LETTERS):
            raise ValueError(f"bad Pauli string {letters!r}")
        n = len(letters)
        xs = [i for i, c in enumerate(letters) if c in "XY"]
        zs = [i for i, c in enumerate(letters) if c in "ZY"]
        return cls(BitVector.from_positions(n, xs), BitVector.from_positions(n, zs))

    @classmethod
    def single(cls, n: int, pos: int, letter: str) -> PauliVector:
        return cls.from_letters("".join(letter if i == pos else "I" for i in range(n)))

    @property
    def word(self) -> int:
        return (self.x.word << self.n) | self.z.word

    def as_row(self) -> BitVector:
        return self.x.concat(self.z)

    def letters(self) -> str:
        return "".join(LETTERS[self.x[i] | (self.z[i] << 1)] for i in range(self.n))

    def weight(self) -> int:
        return (self.x | self.z).weight()

    def swapped(self) -> PauliVector:
        return PauliVector(self.z, self.x)

    def __add__(self, other: PauliVector) -> PauliVector:
        return PauliVector(self.x ^ other.x, self.z ^ other.z)

    __xor__ = __add__

    def __str__(self) -> str:
        return f"{self.x} | {self.z}"


def or_weight(p: PauliVector) -> int:
    """Number of qubits acted on: popcount of ``x OR z``."""
    return p.weight()


def symplectic_product(a: PauliVector, b: PauliVector) -> int:
    """``a_x . b_z + a_z . b_x`` mod 2; zero iff the operators commute."""
    if a.n != b.n:
        raise ValueError(f"length mismatch: {a.n} != {b.n}")
    return a.x.dot(b.z) ^ a.z.dot(b.x)


def swap_halves(word: int, n: int) -> int:
    """Exchange the x and z halves of a ``2n``-bit row word."""
    mask = (1 << n) - 1
    return ((word & mask) << n) | (word >> n)


def symplectic_word(a: int, b: int, n: int) -> int:
    """Symplectic product of two ``2n``-bit row words."""
    return (a & swap_halves(b, n)).bit_count() & 1
