"""Exact minimum distance of additive codes in ``(x | z)`` form.

Two independent engines:

* :func:`distance_rowspace` walks every nonzero combination of generator
  rows in reflected Gray-code order, one row toggle per step.
* :func:`distance_lowweight` walks Pauli vectors of increasing weight and
  keeps those symplectically orthogonal to every check row.

Both can split their search over threads; results (including ``work`` and
the witness) do not depend on the number of workers.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from . import _kernels
from .gf2 import Gf2Matrix
from .pauli import XZY, PauliVector, or_weight, symplectic_product

__all__ = [
    "DistanceResult",
    "distance_rowspace",
    "distance_lowweight",
    "gray_walk",
    "or_weight",
    "symplectic_product",
    "default_workers",
]

ROW_CAP = 28
_MASK64 = (1 << 64) - 1


@dataclass(frozen=True)
class DistanceResult:
    value: int | None
    lower_bound: int
    upper_bound: int | None
    method: str
    work: int
    witness: PauliVector | None = None

    def __post_init__(self):
        if self.upper_bound is not None and self.lower_bound > self.upper_bound:
            raise ValueError("lower_bound exceeds upper_bound")

    def to_dict(self) -> dict:
        return {
            "value": self.value,
            "lower_bound": self.lower_bound,
            "upper_bound": self.upper_bound,
            "method": self.method,
            "work": self.work,
            "witness": None if self.witness is None else str(self.witness),
        }

    def __str__(self) -> str:
        if self.value is not None:
            head = f"distance = {self.value}"
        else:
            head = f"distance >= {self.lower_bound}"
        s = f"{head} [{self.method}, {self.work} candidates]"
        if self.witness is not None:
            s += f"\nwitness: {self.witness}"
        return s


def default_workers() -> int:
    env = os.environ.get("QRM_THREADS")
    if env:
        return max(1, int(env))
    return 1


def _to_words(values, n: int) -> np.ndarray:
    nw = max(1, -(-n // 64))
    out = np.zeros((len(values), nw), dtype=np.uint64)
    for i, v in enumerate(values):
        for j in range(nw):
            out[i, j] = (v >> (64 * j)) & _MASK64
    return out


def _gray(i: int) -> int:
    return i ^ (i >> 1)


def gray_walk(g: Gf2Matrix) -> Iterator[tuple[int, int, int]]:
    """Yield ``(step, toggled_row, combination_word)`` for every nonzero combination.

    Pure-Python reference for the compiled walk; intended for small inputs.
    """
    acc = 0
    for i in range(1, 1 << g.n_rows):
        r = (i & -i).bit_length() - 1
        acc ^= g.words[r]
        yield i, r, acc


def distance_rowspace(g: Gf2Matrix, row_cap: int = ROW_CAP, workers: int | None = None) -> DistanceResult:
    """Minimum OR-weight over the nonzero row space of a ``(x | z)`` matrix."""
    rows = g.n_rows
    if rows > row_cap:
        raise ValueError(f"{rows} rows exceeds row_cap={row_cap}")
    n = g.n_cols // 2
    if rows == 0:
        return DistanceResult(None, 0, None, "rowspace", 0)
    mask = (1 << n) - 1
    X = _to_words([w >> n for w in g.words], n)
    Z = _to_words([w & mask for w in g.words], n)
    total = 1 << rows
    workers = workers or default_workers()
    # split on the top Gray-code bits
    bits = min(rows, max(0, (workers * 4 - 1).bit_length())) if workers > 1 else 0
    step = total >> bits
    bounds = [(max(1, s), s + step) for s in range(0, total, step)]
    if workers > 1 and len(bounds) > 1:
        with ThreadPoolExecutor(workers) as ex:
            parts = list(ex.map(lambda b: _kernels.gray_min_weight(X, Z, b[0], b[1]), bounds))
    else:
        parts = [_kernels.gray_min_weight(X, Z, a, b) for a, b in bounds]
    best, best_i = min((int(w), int(i)) for w, i in parts if w >= 0)
    combo = _gray(best_i)
    word = 0
    for r in range(rows):
        if combo >> r & 1:
            word ^= g.words[r]
    witness = PauliVector.from_word(word, n)
    return DistanceResult(best, best, best, "rowspace", total - 1, witness)


def signatures(checks: Gf2Matrix) -> np.ndarray:
    """Per-qubit, per-letter symplectic products with each check row.

    ``sig[q, a]`` packs, over check rows ``h``, the product of ``h`` with the
    single-qubit letter ``a`` (X, Z, Y) on qubit ``q``.
    """
    n = checks.n_cols // 2
    m = checks.n_rows
    cols = np.zeros((n, 3), dtype=object)
    for q in range(n):
        for a in range(3):
            cols[q, a] = 0
    for i, w in enumerate(checks.words):
        hx, hz = w >> n, w & ((1 << n) - 1)
        for q in range(n):
            b = n - 1 - q
            px, pz = hx >> b & 1, hz >> b & 1
            # X on q pairs with h_z, Z with h_x, Y with both
            for a, (ex, ez) in enumerate(XZY):
                if (px & ez) ^ (pz & ex):
                    cols[q, a] |= 1 << i
    nw = max(1, -(-m // 64))
    out = np.zeros((n, 3, nw), dtype=np.uint64)
    for q in range(n):
        for a in range(3):
            for j in range(nw):
                out[q, a, j] = (cols[q, a] >> (64 * j)) & _MASK64
    return out


def distance_lowweight(
    stab: Gf2Matrix,
    w_max: int,
    *,
    logicals: Gf2Matrix | None = None,
    workers: int | None = None,
) -> DistanceResult:
    """Smallest weight of a vector orthogonal to every row of ``stab``.

    Supports are scanned by increasing weight, colexicographically, with
    letters X, Z, Y per position.  With ``logicals`` given, a vector must
    also anticommute with at least one of those rows, which excludes
    elements of the stabilizer when ``logicals`` spans the code's normalizer.
    """
    n = stab.n_cols // 2
    S = signatures(stab)
    use_l = logicals is not None
    L = signatures(logicals) if use_l else np.zeros((n, 3, 1), dtype=np.uint64)
    workers = workers or default_workers()
    work = 0
    for w in range(1, min(w_max, n) + 1):
        tops = list(range(w - 1, n))
        hit = None
        if workers > 1:
            with ThreadPoolExecutor(workers) as ex:
                for batch_start in range(0, len(tops), workers):
                    batch = tops[batch_start : batch_start + workers]
                    res = list(ex.map(lambda t: _scan(S, L, use_l, w, t), batch))
                    for t, (found, count, sup, let) in zip(batch, res):
                        if found:
                            hit = (count, sup, let)
                            break
                        work += count
                    if hit:
                        break
        else:
            for t in tops:
                found, count, sup, let = _scan(S, L, use_l, w, t)
                if found:
                    hit = (count, sup, let)
                    break
                work += count
        if hit:
            count, sup, let = hit
            work += count
            return DistanceResult(w, w, w, "lowweight", work, _pauli(n, sup, let))
    lb = min(w_max, n) + 1
    return DistanceResult(None, lb, None, "lowweight", work)


def _scan(S, L, use_l, w, top):
    sup = np.zeros(w, dtype=np.int64)
    let = np.zeros(w, dtype=np.int64)
    found, count = _kernels.lowweight_partition(S, L, use_l, w, top, sup, let)
    return bool(found), int(count), sup, let


def _pauli(n: int, support, letters) -> PauliVector:
    s = ["I"] * n
    for q, a in zip(support, letters):
        s[int(q)] = "XZY"[int(a)]
    return PauliVector.from_letters("".join(s))
