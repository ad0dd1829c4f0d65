"""Classical Reed-Muller generator matrices from monomial evaluation vectors.

Coordinate ``j`` of a length ``2**r`` word is the point whose binary
expansion (MSB first) gives ``x_1 ... x_r``; so ``x_1`` reads the most
significant bit of ``j``.  With this convention ``x_1`` for ``r = 3`` is
``00001111`` and ``x_3`` is ``01010101``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb

from .gf2 import BitVector, Gf2Matrix

MAX_R = 20


@dataclass(frozen=True, order=True)
class MonomialIndex:
    """Square-free monomial ``x_{i1} x_{i2} ...`` in ``r`` variables (1-based)."""

    variables: tuple[int, ...]
    r: int

    def __post_init__(self):
        v = tuple(self.variables)
        object.__setattr__(self, "variables", v)
        if not 0 <= self.r <= MAX_R:
            raise ValueError(f"r must be in [0, {MAX_R}]")
        if any(b <= a for a, b in zip(v, v[1:])):
            raise ValueError("variables must be strictly increasing")
        if v and not (1 <= v[0] and v[-1] <= self.r):
            raise ValueError("variable index out of range")

    @property
    def degree(self) -> int:
        return len(self.variables)


def _check_r(r: int):
    if not 0 <= r <= MAX_R:
        raise ValueError(f"r must be in [0, {MAX_R}], got {r}")


def monomial_eval(mono: MonomialIndex) -> BitVector:
    r = mono.r
    n = 1 << r
    word = 0
    for j in range(n):
        if all(j >> (r - i) & 1 for i in mono.variables):
            word |= 1 << (n - 1 - j)
    return BitVector(n, word)


def monomials(degree: int, r: int) -> list[MonomialIndex]:
    """All monomials of exactly ``degree``, lexicographic in their variable lists."""
    return [MonomialIndex(c, r) for c in itertools.combinations(range(1, r + 1), degree)]


def degree_layer(d: int, r: int) -> Gf2Matrix:
    _check_r(r)
    if not 0 <= d <= r:
        raise ValueError(f"degree {d} out of range for r={r}")
    return Gf2Matrix.from_rows([monomial_eval(m) for m in monomials(d, r)], 1 << r)


@dataclass(frozen=True)
class RmCode:
    order: int
    r: int
    generator: Gf2Matrix

    @property
    def n(self) -> int:
        return 1 << self.r

    @property
    def dimension(self) -> int:
        return sum(comb(self.r, i) for i in range(self.order + 1))

    @property
    def min_distance(self) -> int:
        return 1 << (self.r - self.order)


def rm_generator(order: int, r: int) -> RmCode:
    """RM(order, r): monomials of degree <= order, degree ascending then lex."""
    _check_r(r)
    if not 0 <= order <= r:
        raise ValueError(f"order {order} out of range for r={r}")
    g = degree_layer(0, r)
    for d in range(1, order + 1):
        g = g.vstack(degree_layer(d, r))
    return RmCode(order, r, g)


def k_rm(t: int, r: int) -> int:
    """Dimension of the RM code of distance ``2**(t+1)``: ``2**r - sum_{i<=t} C(r, i)``."""
    _check_r(r)
    if not 0 <= t <= r:
        raise ValueError(f"t={t} out of range for r={r}")
    return (1 << r) - sum(comb(r, i) for i in range(t + 1))
