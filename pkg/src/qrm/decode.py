"""Syndromes, lookup-table decoding and a seeded Monte Carlo harness.

Random numbers come from numpy's PCG64 generator.  Trial ``i`` of a run
with seed ``s`` draws from ``PCG64(SeedSequence(s, spawn_key=(i,)))``, so a
trial's error depends only on ``(s, i)`` and runs split across threads
reproduce serial runs exactly.
"""

from __future__ import annotations

import itertools
import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .construct import QuantumCode
from .distance import default_workers, distance_lowweight
from .gf2 import BitVector, reduce_vector, row_basis
from .pauli import XZY, PauliVector, swap_halves

MAX_TABLE_BITS = 24


@dataclass(frozen=True)
class Syndrome:
    bits: BitVector

    def __str__(self) -> str:
        return str(self.bits)

    def is_zero(self) -> bool:
        return self.bits.word == 0


def _syndrome_word(stab_words, e_word: int, n: int) -> int:
    m = len(stab_words)
    swapped = swap_halves(e_word, n)
    s = 0
    for i, h in enumerate(stab_words):
        if (h & swapped).bit_count() & 1:
            s |= 1 << (m - 1 - i)
    return s


def syndrome(code: QuantumCode, e: PauliVector) -> Syndrome:
    """Bit ``i`` is the symplectic product of stabilizer row ``i`` with ``e``."""
    if e.n != code.n:
        raise ValueError(f"error acts on {e.n} qubits, code has {code.n}")
    m = code.stabilizer.n_rows
    return Syndrome(BitVector(m, _syndrome_word(code.stabilizer.words, e.word, code.n)))


def errors_of_weight(n: int, w: int):
    """Pauli words of OR-weight ``w``: supports colex, letters X/Z/Y, lowest position fastest."""
    if w == 0:
        yield 0
        return
    for top in range(w - 1, n):
        for rest in _colex(top, w - 1):
            support = rest + (top,)
            for letters in itertools.product(range(3), repeat=w):
                word = 0
                # product() varies the last slot fastest; reverse so support[0] is fastest
                for q, a in zip(support, reversed(letters)):
                    ex, ez = XZY[a]
                    bit = n - 1 - q
                    word |= (ex << (n + bit)) | (ez << bit)
                yield word


def _colex(limit: int, k: int):
    """k-subsets of range(limit) in colexicographic order."""
    if k == 0:
        yield ()
        return
    for top in range(k - 1, limit):
        for rest in _colex(top, k - 1):
            yield rest + (top,)


@dataclass
class DecoderTable:
    code: QuantumCode
    weight_cap: int
    leaders: dict[int, int] = field(default_factory=dict)
    """Syndrome word to coset-leader error word."""

    @property
    def coverage(self) -> int:
        return len(self.leaders)

    def __len__(self) -> int:
        return len(self.leaders)

    def leader(self, s: Syndrome) -> PauliVector | None:
        w = self.leaders.get(s.bits.word)
        return None if w is None else PauliVector.from_word(w, self.code.n)

    def decode(self, e: PauliVector) -> PauliVector | None:
        """Correction for the syndrome of ``e``; ``None`` if the syndrome is unseen."""
        return self.leader(syndrome(self.code, e))


def build_decoder_table(code: QuantumCode, weight_cap: int) -> DecoderTable:
    """Breadth-first by weight; the first error reaching a syndrome becomes its leader."""
    m = code.stabilizer.n_rows
    if m > MAX_TABLE_BITS:
        raise ValueError(f"{m} syndrome bits exceeds the table cap of {MAX_TABLE_BITS}")
    n = code.n
    words = code.stabilizer.words
    leaders: dict[int, int] = {}
    full = 1 << m
    for w in range(weight_cap + 1):
        for e in errors_of_weight(n, w):
            s = _syndrome_word(words, e, n)
            if s not in leaders:
                leaders[s] = e
                if len(leaders) == full:
                    return DecoderTable(code, weight_cap, leaders)
    return DecoderTable(code, weight_cap, leaders)


def correctability_check(code: QuantumCode, e_max: int, workers: int | None = None) -> bool:
    """True iff no error of weight ``1..2*e_max`` is an undetectable logical.

    Such an error has zero syndrome but lies outside the stabilizer group;
    the latter is tested by anticommutation with some generator row.
    """
    if e_max <= 0:
        return True
    res = distance_lowweight(code.stabilizer, 2 * e_max, logicals=code.generator, workers=workers)
    return res.value is None


@dataclass(frozen=True)
class SimulationStats:
    code: str
    n: int
    k: int
    forced_weight: int
    trials: int
    failures: int
    seed: int

    @property
    def failure_rate(self) -> float:
        return self.failures / self.trials if self.trials else 0.0

    def to_dict(self) -> dict:
        return {
            "code": self.code,
            "n": self.n,
            "k": self.k,
            "forced_weight": self.forced_weight,
            "trials": self.trials,
            "failures": self.failures,
            "failure_rate": self.failure_rate,
            "seed": self.seed,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def __str__(self) -> str:
        return (
            f"{self.code} weight={self.forced_weight} trials={self.trials} "
            f"failures={self.failures} rate={self.failure_rate:.6g} seed={self.seed}"
        )


def trial_rng(seed: int, i: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=(i,))))


def random_error(n: int, weight: int, rng: np.random.Generator) -> int:
    support = rng.choice(n, size=weight, replace=False)
    letters = rng.integers(0, 3, size=weight)
    word = 0
    for q, a in zip(support, letters):
        ex, ez = XZY[int(a)]
        bit = n - 1 - int(q)
        word |= (ex << (n + bit)) | (ez << bit)
    return word


def simulate(
    code: QuantumCode,
    forced_weight: int,
    trials: int,
    seed: int,
    table: DecoderTable | None = None,
    workers: int | None = None,
) -> SimulationStats:
    """Decode ``trials`` random errors of exactly ``forced_weight``.

    A trial fails when the residual (error plus correction) is not in the
    stabilizer group; an unseen syndrome counts as a failure.
    """
    n = code.n
    if not 0 <= forced_weight <= n:
        raise ValueError(f"forced_weight {forced_weight} out of range for n={n}")
    if not 0 <= seed < 1 << 64:
        raise ValueError("seed must be a 64-bit unsigned integer")
    if table is None:
        table = build_decoder_table(code, forced_weight)
    elif table.weight_cap < forced_weight:
        raise ValueError("decoder table weight cap below forced weight")
    stab_words = code.stabilizer.words
    basis = row_basis(code.stabilizer).words
    leaders = table.leaders

    def run(lo: int, hi: int) -> int:
        fails = 0
        for i in range(lo, hi):
            e = random_error(n, forced_weight, trial_rng(seed, i))
            lead = leaders.get(_syndrome_word(stab_words, e, n))
            if lead is None or reduce_vector(basis, e ^ lead):
                fails += 1
        return fails

    workers = workers or default_workers()
    if workers > 1 and trials > 1:
        edges = np.linspace(0, trials, workers + 1).astype(int)
        with ThreadPoolExecutor(workers) as ex:
            failures = sum(ex.map(run, edges[:-1], edges[1:]))
    else:
        failures = run(0, trials)
    return SimulationStats(code.label, n, code.k, forced_weight, trials, failures, seed)
