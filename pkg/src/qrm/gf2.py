"""Binary linear algebra on packed bit words.

Vectors are stored as Python integers.  Position 0 is the leftmost printed
character, which is the most significant bit of the integer, so
``BitVector.parse("0011").word == 0b0011``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np


@dataclass(frozen=True)
class BitVector:
    """Fixed-length binary word."""

    length: int
    word: int = 0

    def __post_init__(self):
        if self.length < 0:
            raise ValueError("length must be non-negative")
        if self.word < 0 or self.word >> self.length:
            raise ValueError(f"word does not fit in {self.length} bits")

    @classmethod
    def parse(cls, text: str) -> BitVector:
        if text and set(text) - {"0", "1"}:
            raise ValueError(f"not a binary string: {text!r}")
        return cls(len(text), int(text, 2) if text else 0)

    @classmethod
    def from_positions(cls, length: int, positions: Iterable[int]) -> BitVector:
        word = 0
        for p in positions:
            if not 0 <= p < length:
                raise IndexError(p)
            word |= 1 << (length - 1 - p)
        return cls(length, word)

    @classmethod
    def zeros(cls, length: int) -> BitVector:
        return cls(length, 0)

    @classmethod
    def ones(cls, length: int) -> BitVector:
        return cls(length, (1 << length) - 1)

    def __str__(self) -> str:
        return format(self.word, f"0{self.length}b") if self.length else ""

    def __len__(self) -> int:
        return self.length

    def __getitem__(self, pos: int) -> int:
        if not 0 <= pos < self.length:
            raise IndexError(pos)
        return (self.word >> (self.length - 1 - pos)) & 1

    def _check(self, other: BitVector):
        if self.length != other.length:
            raise ValueError(f"length mismatch: {self.length} != {other.length}")

    def __xor__(self, other: BitVector) -> BitVector:
        self._check(other)
        return BitVector(self.length, self.word ^ other.word)

    __add__ = __xor__

    def __and__(self, other: BitVector) -> BitVector:
        self._check(other)
        return BitVector(self.length, self.word & other.word)

    def __or__(self, other: BitVector) -> BitVector:
        self._check(other)
        return BitVector(self.length, self.word | other.word)

    def weight(self) -> int:
        return self.word.bit_count()

    def dot(self, other: BitVector) -> int:
        """Inner product over GF(2)."""
        self._check(other)
        return (self.word & other.word).bit_count() & 1

    def support(self) -> list[int]:
        return [i for i in range(self.length) if self[i]]

    def concat(self, other: BitVector) -> BitVector:
        return BitVector(self.length + other.length, (self.word << other.length) | other.word)

    def split(self, at: int) -> tuple[BitVector, BitVector]:
        right = self.length - at
        return (
            BitVector(at, self.word >> right),
            BitVector(right, self.word & ((1 << right) - 1)),
        )

    def delete(self, pos: int) -> BitVector:
        """Drop the bit at ``pos``, shortening the vector by one."""
        left, right = self.split(pos)
        return left.concat(right.split(1)[1])

    def to_array(self) -> np.ndarray:
        return np.array([self[i] for i in range(self.length)], dtype=np.uint8)


def rotate_left(v: BitVector, t: int) -> BitVector:
    """Cyclic left rotation: bit ``i`` of the result is bit ``(i + t) % n`` of ``v``."""
    if t < 0:
        raise ValueError("rotation must be non-negative")
    n = v.length
    if n == 0:
        return v
    t %= n
    mask = (1 << n) - 1
    return BitVector(n, ((v.word << t) | (v.word >> (n - t))) & mask)


@dataclass(frozen=True)
class Gf2Matrix:
    """Binary matrix held as a tuple of packed row words."""

    n_cols: int
    words: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "words", tuple(self.words))
        for w in self.words:
            if w < 0 or w >> self.n_cols:
                raise ValueError(f"row does not fit in {self.n_cols} columns")

    @classmethod
    def from_rows(cls, rows: Sequence[BitVector], n_cols: int | None = None) -> Gf2Matrix:
        if n_cols is None:
            if not rows:
                raise ValueError("n_cols required for an empty matrix")
            n_cols = rows[0].length
        for r in rows:
            if r.length != n_cols:
                raise ValueError("row length mismatch")
        return cls(n_cols, tuple(r.word for r in rows))

    @classmethod
    def parse(cls, lines: Iterable[str], n_cols: int | None = None) -> Gf2Matrix:
        return cls.from_rows([BitVector.parse(s.strip()) for s in lines], n_cols)

    @classmethod
    def identity(cls, n: int) -> Gf2Matrix:
        return cls(n, tuple(1 << (n - 1 - i) for i in range(n)))

    @classmethod
    def zeros(cls, n_rows: int, n_cols: int) -> Gf2Matrix:
        return cls(n_cols, (0,) * n_rows)

    @classmethod
    def from_array(cls, a) -> Gf2Matrix:
        a = np.asarray(a, dtype=np.uint8) & 1
        n_cols = a.shape[1]
        return cls(n_cols, tuple(int("".join(map(str, row)) or "0", 2) for row in a))

    @property
    def n_rows(self) -> int:
        return len(self.words)

    @property
    def rows(self) -> list[BitVector]:
        return [BitVector(self.n_cols, w) for w in self.words]

    def row(self, i: int) -> BitVector:
        return BitVector(self.n_cols, self.words[i])

    def __iter__(self) -> Iterator[BitVector]:
        return iter(self.rows)

    def __len__(self) -> int:
        return self.n_rows

    def __str__(self) -> str:
        return "\n".join(str(r) for r in self.rows)

    def vstack(self, *others: Gf2Matrix) -> Gf2Matrix:
        words = list(self.words)
        for o in others:
            if o.n_cols != self.n_cols:
                raise ValueError("column count mismatch")
            words.extend(o.words)
        return Gf2Matrix(self.n_cols, tuple(words))

    def hstack(self, other: Gf2Matrix) -> Gf2Matrix:
        if other.n_rows != self.n_rows:
            raise ValueError("row count mismatch")
        return Gf2Matrix(
            self.n_cols + other.n_cols,
            tuple((a << other.n_cols) | b for a, b in zip(self.words, other.words)),
        )

    def is_zero(self) -> bool:
        return not any(self.words)

    def to_array(self) -> np.ndarray:
        out = np.zeros((self.n_rows, self.n_cols), dtype=np.uint8)
        for i, w in enumerate(self.words):
            for j in range(self.n_cols):
                out[i, j] = (w >> (self.n_cols - 1 - j)) & 1
        return out


def _echelon(words: Sequence[int]) -> list[int]:
    """Reduced echelon rows (nonzero only), ordered by leading column."""
    rows = list(words)
    basis: list[int] = []
    for w in rows:
        for b in basis:
            if w & (1 << (b.bit_length() - 1)):
                w ^= b
        if w:
            lead = 1 << (w.bit_length() - 1)
            basis = [b ^ w if b & lead else b for b in basis]
            basis.append(w)
    basis.sort(reverse=True)
    return basis


def rref(m: Gf2Matrix) -> Gf2Matrix:
    """Reduced row echelon form.

    Pivots are chosen leftmost column first; zero rows are kept at the bottom
    so the shape is unchanged.
    """
    basis = _echelon(m.words)
    return Gf2Matrix(m.n_cols, tuple(basis) + (0,) * (m.n_rows - len(basis)))


def rank(m: Gf2Matrix) -> int:
    return len(_echelon(m.words))


def row_basis(m: Gf2Matrix) -> Gf2Matrix:
    """Nonzero rows of the RREF: the canonical basis of the row space."""
    return Gf2Matrix(m.n_cols, tuple(_echelon(m.words)))


def nullspace(m: Gf2Matrix) -> Gf2Matrix:
    """Basis of ``{v : m v^T = 0}``, one vector per free column, left to right."""
    n = m.n_cols
    basis = _echelon(m.words)
    pivot_bits = {b.bit_length() - 1: b for b in basis}
    out = []
    for col in range(n):
        bit = n - 1 - col
        if bit in pivot_bits:
            continue
        v = 1 << bit
        for pbit, row in pivot_bits.items():
            if row >> bit & 1:
                v |= 1 << pbit
        out.append(v)
    return Gf2Matrix(n, tuple(out))


def reduce_vector(basis: Sequence[int], v: int) -> int:
    """Residue of ``v`` after elimination against an echelon basis."""
    for b in basis:
        if v & (1 << (b.bit_length() - 1)):
            v ^= b
    return v


def rowspace_contains(m: Gf2Matrix, v: BitVector) -> bool:
    if v.length != m.n_cols:
        raise ValueError(f"length mismatch: {v.length} != {m.n_cols}")
    return reduce_vector(_echelon(m.words), v.word) == 0


def same_rowspace(a: Gf2Matrix, b: Gf2Matrix) -> bool:
    if a.n_cols != b.n_cols:
        return False
    return _echelon(a.words) == _echelon(b.words)


def mat_mul_transpose(a: Gf2Matrix, b: Gf2Matrix) -> Gf2Matrix:
    """``a @ b.T`` over GF(2)."""
    if a.n_cols != b.n_cols:
        raise ValueError(f"dimension mismatch: {a.n_cols} != {b.n_cols}")
    m = b.n_rows
    words = []
    for x in a.words:
        w = 0
        for j, y in enumerate(b.words):
            if (x & y).bit_count() & 1:
                w |= 1 << (m - 1 - j)
        words.append(w)
    return Gf2Matrix(m, tuple(words))
