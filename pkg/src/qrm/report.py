"""Cross-checks between derived stabilizers and directly built ones."""

from __future__ import annotations

from .construct import (
    build_generator,
    code_from_stabilizer,
    derive_stabilizer,
    qrm_params,
    same_rowspace,
    stabilizer_direct,
    symplectic_gram,
    validate,
)
from .gf2 import Gf2Matrix, rank


def _zero(gram) -> bool:
    return not any(map(any, gram))


def duality_report(r: int, t: int, listed: Gf2Matrix | None = None) -> dict:
    """Compare the derived stabilizer of ``(r, t)`` with the ``(r, r - t)`` generator.

    ``listed`` is an optional externally supplied stabilizer to compare too.
    """
    code = build_generator(r, t)
    derived = derive_stabilizer(code)
    direct = stabilizer_direct(r, t).generator
    rep = validate(code)
    out = {
        "code": str(qrm_params(r, t)),
        "derived_rank": rank(derived),
        "generator_orthogonal": rep.hg_ok,
        "self_orthogonal": rep.selfdual_ok,
        "hxhzT_zero": rep.hxhzT_zero,
        "direct_rank": rank(direct),
        "derived_equals_direct": same_rowspace(derived, direct),
        "shared_dimension": rank(derived) + rank(direct) - rank(derived.vstack(direct)),
    }
    if listed is not None:
        out["derived_equals_listed"] = same_rowspace(derived, listed)
        out["listed_selfdual"] = _zero(symplectic_gram(listed, listed))
        out["listed_orthogonal_to_generator"] = _zero(symplectic_gram(listed, code.generator))
    return out


def rotation_report(r: int, t: int, shifts=(3, 4)) -> dict:
    """For each last-row rotation of the ``(r, r - t)`` generator, test it as the stabilizer of ``(r, t)``.

    Checks orthogonality to the ``(r, t)`` generator and self-orthogonality,
    and the ``[[n, k]]`` of the code the candidate would stabilize.
    """
    gen = build_generator(r, t).generator
    tp = r - t
    out = {}
    for s in shifts:
        cand = build_generator(r, tp, shift=s).generator
        selfdual = _zero(symplectic_gram(cand, cand))
        entry = {
            "orthogonal_to_generator": _zero(symplectic_gram(cand, gen)),
            "self_orthogonal": selfdual,
            "rank": rank(cand),
        }
        if selfdual:
            c = code_from_stabilizer(cand)
            entry["stabilizes"] = f"[[{c.n},{c.k}]]"
        out[s] = entry
    return out
