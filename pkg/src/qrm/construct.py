"""Quantum Reed-Muller codes: parameters, generators, stabilizers, checks.

A code is described by its generator ``(G_x | G_z)`` and its stabilizer
``(H_x | H_z)``, each stored as a single ``2n``-column :class:`Gf2Matrix`
whose left half is the x-part.  The builder never refuses a parameter set
that is in range; whether the result is a legitimate code is decided by
:func:`validate`.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from math import comb
from typing import Any

from .gf2 import (
    BitVector,
    Gf2Matrix,
    nullspace,
    rank,
    row_basis,
    rowspace_contains,
    rotate_left,
    same_rowspace,
)
from .pauli import swap_halves
from .reedmuller import degree_layer, k_rm, rm_generator


@dataclass(frozen=True)
class QrmParams:
    r: int
    t: int
    n: int
    k: int
    d: int

    def __str__(self) -> str:
        return f"[[{self.n},{self.k},{self.d}]]"


def qrm_params(r: int, t: int) -> QrmParams:
    _check_rt(r, t)
    n = 1 << r
    k = n - comb(r, t) - 2 * sum(comb(r, i) for i in range(t))
    d = (1 << t) + (1 << (t - 1))
    return QrmParams(r, t, n, k, d)


def _check_rt(r: int, t: int):
    if r < 2 or not 1 <= t <= r - 1:
        raise ValueError(f"need r >= 2 and 1 <= t <= r-1, got r={r}, t={t}")


@dataclass(frozen=True)
class ValidationReport:
    hg_ok: bool
    selfdual_ok: bool
    hxhzT_zero: bool
    witness: tuple[str, int, int, int] | None = None
    """First violation as ``(check, row_i, row_j, value)``."""

    @property
    def ok(self) -> bool:
        return self.hg_ok and self.selfdual_ok

    def to_dict(self) -> dict[str, Any]:
        return {
            "hg_ok": self.hg_ok,
            "selfdual_ok": self.selfdual_ok,
            "hxhzT_zero": self.hxhzT_zero,
            "witness": list(self.witness) if self.witness else None,
        }


@dataclass(frozen=True)
class QuantumCode:
    n: int
    k: int
    generator: Gf2Matrix
    stabilizer: Gf2Matrix
    valid: bool = False
    provenance: dict[str, Any] = field(default_factory=lambda: {"source": "literal"}, compare=False)
    d: int | None = None
    """Designed distance, when the construction states one."""

    def gen_x(self) -> Gf2Matrix:
        return _half(self.generator, self.n, 0)

    def gen_z(self) -> Gf2Matrix:
        return _half(self.generator, self.n, 1)

    def stab_x(self) -> Gf2Matrix:
        return _half(self.stabilizer, self.n, 0)

    def stab_z(self) -> Gf2Matrix:
        return _half(self.stabilizer, self.n, 1)

    @property
    def label(self) -> str:
        d = "?" if self.d is None else self.d
        return f"[[{self.n},{self.k},{d}]]"


def _half(m: Gf2Matrix, n: int, which: int) -> Gf2Matrix:
    mask = (1 << n) - 1
    if which == 0:
        return Gf2Matrix(n, tuple(w >> n for w in m.words))
    return Gf2Matrix(n, tuple(w & mask for w in m.words))


def pair(x: Gf2Matrix, z: Gf2Matrix) -> Gf2Matrix:
    """Join x- and z-part matrices into one ``(x | z)`` matrix."""
    return x.hstack(z)


def swap_xz(m: Gf2Matrix) -> Gf2Matrix:
    n = m.n_cols // 2
    return Gf2Matrix(m.n_cols, tuple(swap_halves(w, n) for w in m.words))


def symplectic_gram(a: Gf2Matrix, b: Gf2Matrix) -> list[list[int]]:
    """Entry ``(i, j)`` is the symplectic product of ``a[i]`` and ``b[j]``."""
    sb = swap_xz(b).words
    return [[(x & y).bit_count() & 1 for y in sb] for x in a.words]


def dz_block(dx: Gf2Matrix, shift: int) -> Gf2Matrix:
    """Each D_z row is the next D_x row; the last is D_x row 1 rotated left by ``shift``."""
    rows = dx.rows
    out = rows[1:] + [rotate_left(rows[0], shift)]
    return Gf2Matrix.from_rows(out, dx.n_cols)


def build_from_blocks(g1: Gf2Matrix, g2: Gf2Matrix, dx: Gf2Matrix, dz: Gf2Matrix) -> Gf2Matrix:
    """Stack ``(G1|0)``, ``(0|G2)``, ``(Dx|Dz)``; an empty D block gives the CSS form."""
    n = g1.n_cols
    zero1 = Gf2Matrix.zeros(g1.n_rows, n)
    zero2 = Gf2Matrix.zeros(g2.n_rows, n)
    return pair(g1, zero1).vstack(pair(zero2, g2), pair(dx, dz))


def build_generator(r: int, t: int, shift: int | None = None) -> QuantumCode:
    """Generator of the ``(r, t)`` quantum Reed-Muller code.

    ``shift`` overrides the rotation applied to the first D_x row to form the
    last D_z row (default ``t``); it exists to compare alternative readings.
    """
    _check_rt(r, t)
    params = qrm_params(r, t)
    n = params.n
    g1 = rm_generator(r - t - 1, r).generator
    dx = degree_layer(r - t, r)
    dz = dz_block(dx, t if shift is None else shift)
    gen = build_from_blocks(g1, g1, dx, dz)
    assert gen.n_rows == k_rm(t, r) + k_rm(t - 1, r) == n + params.k
    prov = {"source": "qrm", "r": r, "t": t}
    if shift is not None:
        prov["shift"] = shift
    return make_code(gen, d=params.d, provenance=prov)


def make_code(generator: Gf2Matrix, *, d: int | None = None, provenance=None) -> QuantumCode:
    """Wrap a generator, attach its stabilizer and validity.

    With ``k = 0`` the generator is itself the candidate stabilizer (a
    legitimate code must then be symplectically self-dual), so it is kept as
    listed; otherwise the stabilizer is the symplectic dual in RREF.
    """
    n = generator.n_cols // 2
    k = generator.n_rows - n
    stab = generator if k == 0 else derive_stabilizer(generator)
    code = QuantumCode(n, k, generator, stab, False, provenance or {"source": "literal"}, d)
    return replace(code, valid=validate(code).ok)


def derive_stabilizer(g: QuantumCode | Gf2Matrix) -> Gf2Matrix:
    """RREF basis of the vectors symplectically orthogonal to every generator row."""
    gen = g.generator if isinstance(g, QuantumCode) else g
    return row_basis(nullspace(swap_xz(gen)))


def code_from_stabilizer(stab: Gf2Matrix, *, d: int | None = None, provenance=None) -> QuantumCode:
    """Code whose generator is the symplectic dual of ``stab``."""
    stab = row_basis(stab)
    n = stab.n_cols // 2
    gen = derive_stabilizer(stab)
    code = QuantumCode(n, gen.n_rows - n, gen, stab, False, provenance or {"source": "literal"}, d)
    return replace(code, valid=validate(code).ok)


def dual_t(r: int, t: int) -> int:
    """``t'`` whose code has ``k' = -k``; ``k(r, t) + k(r, r - t) = 0``."""
    return r - t


def stabilizer_direct(r: int, t: int) -> QuantumCode:
    """The stabilizer of code ``(r, t)`` built directly as the generator of ``(r, r - t)``."""
    p = qrm_params(r, t)
    if p.k <= 0:
        raise ValueError(f"code (r={r}, t={t}) has k={p.k} <= 0")
    return build_generator(r, dual_t(r, t))


def validate(code: QuantumCode) -> ValidationReport:
    """Check generator/stabilizer duality and stabilizer self-orthogonality.

    ``hg_ok``: every stabilizer row is orthogonal to every generator row.
    ``selfdual_ok``: ``H_x H_z^T + H_z H_x^T = 0``.
    ``hxhzT_zero``: the stronger ``H_x H_z^T = 0``.
    """
    n = code.n
    witness = None
    hg = symplectic_gram(code.stabilizer, code.generator)
    hg_ok = True
    for i, row in enumerate(hg):
        if any(row):
            hg_ok = False
            witness = ("hg", i, row.index(1), 1)
            break

    sd = symplectic_gram(code.stabilizer, code.stabilizer)
    selfdual_ok = True
    for i, row in enumerate(sd):
        if any(row):
            selfdual_ok = False
            if witness is None:
                witness = ("selfdual", i, row.index(1), 1)
            break

    hx = [w >> n for w in code.stabilizer.words]
    hz = [w & ((1 << n) - 1) for w in code.stabilizer.words]
    hxhz_zero = True
    for i, a in enumerate(hx):
        j = next((j for j, b in enumerate(hz) if (a & b).bit_count() & 1), None)
        if j is not None:
            hxhz_zero = False
            if witness is None:
                witness = ("hxhzT", i, j, 1)
            break
    return ValidationReport(hg_ok, selfdual_ok, hxhz_zero, witness)


def six04() -> QuantumCode:
    """The literal [[6,0,4]] code from which [[5,1,3]] is obtained by deleting a qubit."""
    gen = parse_matrix(
        """
        001111 | 000000
        110011 | 000000
        000000 | 001111
        000000 | 110011
        111111 | 010101
        010101 | 100101
        """
    )
    return make_code(gen, d=4, provenance={"source": "literal", "name": "six04"})


def puncture(code: QuantumCode, pos: int) -> QuantumCode:
    """Delete qubit ``pos``.

    The new stabilizer is the subgroup of the old one acting trivially on
    ``pos``, with that coordinate removed; the generator is re-derived as
    its symplectic dual.
    """
    n = code.n
    if not 0 <= pos < n:
        raise IndexError(f"position {pos} out of range for n={n}")
    if not code.valid:
        raise ValueError("cannot puncture an invalid code")
    # columns x_pos and z_pos of the stabilizer, as a 2-column matrix
    xbit = n - 1 - pos
    zbit = xbit
    cols = Gf2Matrix(
        2,
        tuple(((w >> (n + xbit) & 1) << 1) | (w >> zbit & 1) for w in code.stabilizer.words),
    )
    # combinations c with c @ cols == 0 -> left nullspace
    m = code.stabilizer.n_rows
    transposed = Gf2Matrix(
        m,
        tuple(
            sum(((cols.words[i] >> (1 - c)) & 1) << (m - 1 - i) for i in range(m))
            for c in range(2)
        ),
    )
    combos = nullspace(transposed)
    sub = []
    for c in combos.words:
        w = 0
        for i in range(m):
            if c >> (m - 1 - i) & 1:
                w ^= code.stabilizer.words[i]
        row = BitVector(2 * n, w)
        x, z = row.split(n)
        sub.append(x.delete(pos).concat(z.delete(pos)))
    stab = Gf2Matrix.from_rows(sub, 2 * (n - 1))
    prov = {"source": "puncture", "parent": code.provenance, "position": pos}
    return code_from_stabilizer(stab, provenance=prov)


def stabilizer_matches_direct(r: int, t: int) -> bool:
    """Row space of the derived stabilizer equals the directly built one."""
    return same_rowspace(derive_stabilizer(build_generator(r, t)), stabilizer_direct(r, t).generator)


def rotation_variants(r: int, t: int, shifts) -> dict[int, dict[str, bool]]:
    """Validate the ``(r, t)`` generator for each choice of last-row rotation.

    For each shift, reports whether the matrix (read as the stabilizer of the
    dual ``(r, r - t)`` code) is self-orthogonal and whether its row space is
    the symplectic dual of the ``(r, r - t)`` generator.
    """
    out = {}
    partner = build_generator(r, dual_t(r, t))
    for s in shifts:
        cand = build_generator(r, t, shift=s).generator
        gram = symplectic_gram(cand, cand)
        cross = symplectic_gram(cand, partner.generator)
        out[s] = {
            "selfdual": not any(any(row) for row in gram),
            "orthogonal_to_partner": not any(any(row) for row in cross),
            "equals_partner_dual": same_rowspace(cand, derive_stabilizer(partner)),
            "rank": rank(cand),
        }
    return out


# text and structured formats


def format_matrix(m: Gf2Matrix) -> str:
    n = m.n_cols // 2
    lines = []
    for w in m.words:
        x, z = BitVector(2 * n, w).split(n)
        lines.append(f"{x} | {z}")
    return "\n".join(lines)


def parse_matrix(text: str) -> Gf2Matrix:
    rows = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        left, sep, right = line.partition("|")
        if not sep:
            raise ValueError(f"missing '|' in {line!r}")
        x, z = BitVector.parse(left.strip()), BitVector.parse(right.strip())
        if x.length != z.length:
            raise ValueError(f"halves differ in length: {line!r}")
        rows.append(x.concat(z))
    if not rows:
        raise ValueError("no rows")
    return Gf2Matrix.from_rows(rows)


def format_code(code: QuantumCode, report: ValidationReport | None = None) -> str:
    """Generator rows, a blank line, stabilizer rows, then ``#`` notes."""
    report = report or validate(code)
    parts = [format_matrix(code.generator), "", format_matrix(code.stabilizer), ""]
    parts.append(f"# code {code.label}")
    parts.append(
        "# validation: "
        + ("passed" if report.ok else "FAILED")
        + f" hg_ok={report.hg_ok} selfdual_ok={report.selfdual_ok} hxhzT_zero={report.hxhzT_zero}"
    )
    if report.witness:
        parts.append("# witness: " + " ".join(map(str, report.witness)))
    return "\n".join(parts) + "\n"


def parse_code(text: str) -> QuantumCode:
    """Inverse of :func:`format_code`; a single block is read as a generator."""
    blocks, cur = [], []
    for line in text.splitlines():
        s = line.strip()
        if s.startswith("#"):
            continue
        if not s:
            if cur:
                blocks.append(cur)
                cur = []
            continue
        cur.append(s)
    if cur:
        blocks.append(cur)
    if not blocks:
        raise ValueError("no matrix found")
    gen = parse_matrix("\n".join(blocks[0]))
    n = gen.n_cols // 2
    if len(blocks) == 1:
        return make_code(gen)
    stab = parse_matrix("\n".join(blocks[1]))
    code = QuantumCode(n, gen.n_rows - n, gen, stab, False, {"source": "file"})
    return replace(code, valid=validate(code).ok)


def code_to_dict(code: QuantumCode, report: ValidationReport | None = None) -> dict[str, Any]:
    report = report or validate(code)
    return {
        "n": code.n,
        "k": code.k,
        "d": code.d,
        "generator_x": [str(r) for r in code.gen_x().rows],
        "generator_z": [str(r) for r in code.gen_z().rows],
        "stabilizer_x": [str(r) for r in code.stab_x().rows],
        "stabilizer_z": [str(r) for r in code.stab_z().rows],
        "validation": report.to_dict(),
        "provenance": code.provenance,
    }


def code_from_dict(doc: dict[str, Any]) -> QuantumCode:
    n = int(doc["n"])
    gen = pair(Gf2Matrix.parse(doc["generator_x"], n), Gf2Matrix.parse(doc["generator_z"], n))
    stab = pair(Gf2Matrix.parse(doc["stabilizer_x"], n), Gf2Matrix.parse(doc["stabilizer_z"], n))
    code = QuantumCode(n, gen.n_rows - n, gen, stab, False, doc.get("provenance") or {"source": "file"}, doc.get("d"))
    return replace(code, valid=validate(code).ok)


def dumps_code(code: QuantumCode) -> str:
    return json.dumps(code_to_dict(code), indent=2) + "\n"


def contains_all(big: Gf2Matrix, small: Gf2Matrix) -> bool:
    """Every row of ``small`` lies in the row space of ``big``."""
    return all(rowspace_contains(big, r) for r in small.rows)
