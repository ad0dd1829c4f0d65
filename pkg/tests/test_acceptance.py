"""Exit criteria.  Each test records a PASS/FAIL line shown in the terminal summary."""

import json
import time
from math import comb

import numpy as np

from conftest import CAND_16, GEN_833, SEED_41, SIX04, STAB_833, lines, parse_matrix, record
from qrm.cli import table_text
from qrm.construct import (
    build_generator,
    format_code,
    format_matrix,
    qrm_params,
    same_rowspace,
    six04,
    validate,
)
from qrm.decode import build_decoder_table, correctability_check, simulate, syndrome
from qrm.distance import distance_lowweight, distance_rowspace
from qrm.gf2 import BitVector, Gf2Matrix, nullspace
from qrm.pauli import PauliVector, symplectic_product
from qrm.reedmuller import rm_generator
from qrm.report import duality_report, rotation_report
from test_distance import naive_rowspace
from test_reedmuller import codeword_min_weight, lowweight_min_weight

TABLE_1 = {
    4: [0, None, None, None, None],
    8: [3, -3, None, None, None],
    16: [10, 0, -10, None, None],
    32: [25, 10, -10, -25, None],
    64: [56, 35, 0, -35, -56],
    128: [119, 91, 35, -35, -91],
    256: [246, 210, 126, 0, -126],
    512: [501, 456, 336, 126, -126],
    1024: [1012, 957, 792, 462, 0],
}


def check(number, checks, elapsed=None, limit=None):
    if limit is not None:
        checks[f"runtime {elapsed:.2f}s < {limit}s"] = elapsed < limit
    failed = [k for k, v in checks.items() if not v]
    detail = "all checks passed" if not failed else "failed: " + "; ".join(failed)
    record(number, not failed, detail)
    assert not failed, detail


def test_criterion_1_table():
    t0 = time.perf_counter()
    text = table_text()
    grid = {}
    for line in text.splitlines()[1:]:
        n = int(line[:6])
        cells = [line[6 + 7 * i : 13 + 7 * i].strip() for i in range(5)]
        grid[n] = [int(c) if c else None for c in cells]
    elapsed = time.perf_counter() - t0
    checks = {"45 cells match": grid == TABLE_1}
    checks["n=256,d=48 is -126"] = grid[256][4] == -126
    checks["45 cells"] = sum(len(v) for v in grid.values()) == 45
    for r in range(2, 11):
        for t in range(1, min(r, 6)):
            checks.setdefault("formula agrees", True)
            checks["formula agrees"] &= qrm_params(r, t).k == TABLE_1[1 << r][t - 1]
    check(1, checks, elapsed, 1.0)


def test_criterion_2_fixtures():
    t0 = time.perf_counter()
    seed = format_code(build_generator(2, 1)).splitlines()[:4]
    g833 = format_code(build_generator(3, 1)).splitlines()[:11]
    s604 = format_matrix(six04().generator).splitlines()
    elapsed = time.perf_counter() - t0
    checks = {
        "seed matrix": seed == lines(SEED_41),
        "[[8,3,3]] generator": g833 == lines(GEN_833),
        "[[6,0,4]] generator": s604 == lines(SIX04),
        "[[6,0,4]] satisfies self-orthogonality": validate(six04()).selfdual_ok,
    }
    check(2, checks, elapsed, 1.0)


def test_criterion_3_stabilizer_duality():
    t0 = time.perf_counter()
    listed = parse_matrix(STAB_833)
    r31 = duality_report(3, 1, listed=listed)
    r52 = duality_report(5, 2)
    rot = rotation_report(5, 2, shifts=(3, 4))
    elapsed = time.perf_counter() - t0
    report = {"(3,1)": r31, "(5,2)": r52, "(5,2) last-row rotation": rot}
    print(json.dumps(report, indent=2, default=str))
    checks = {
        "(3,1) derived rank 5": r31["derived_rank"] == 5,
        "(3,1) derived == listed stabilizer": r31["derived_equals_listed"],
        "(3,1) derived == stabilizer_direct": r31["derived_equals_direct"],
        "(5,2) derived rank 22": r52["derived_rank"] == 22,
        "(5,2) derived satisfies generator orthogonality": r52["generator_orthogonal"],
        "(5,2) derived self-orthogonal": r52["self_orthogonal"],
        # resolution recorded in the report: the listing's rotation 4 is self-orthogonal, the recipe's 3 is not
        "rotation 3 vs 4 resolved": rot[4]["self_orthogonal"] and not rot[3]["self_orthogonal"],
    }
    check(3, checks, elapsed, 5.0)


def test_criterion_4_exact_distances(code513):
    g833 = build_generator(3, 1)
    listed = parse_matrix(STAB_833)
    t0 = time.perf_counter()
    d1610 = distance_rowspace(build_generator(4, 1).generator)
    elapsed = time.perf_counter() - t0
    checks = {
        "[[8,3,3]] rowspace = 3": distance_rowspace(g833.generator).value == 3,
        "[[8,3,3]] lowweight = 3": distance_lowweight(g833.stabilizer, 3).value == 3,
        "listed [[8,3,3]] stabilizer min weight = 6": distance_rowspace(listed).value == 6,
        "[[6,0,4]] = 4": distance_rowspace(six04().generator).value == 4,
        "punctured = 3": distance_lowweight(code513.stabilizer, 5).value == 3
        and distance_rowspace(code513.generator).value == 3,
        "[[16,10,3]] rowspace over 2^26 = 3": d1610.value == 3 and d1610.work == (1 << 26) - 1,
    }
    check(4, checks, elapsed, 60.0)


def test_criterion_5_distance_32(code32):
    t0 = time.perf_counter()
    upto5 = distance_lowweight(code32.stabilizer, 5)
    at6 = distance_lowweight(code32.stabilizer, 6)
    elapsed = time.perf_counter() - t0
    w = at6.witness
    checks = {
        "no codeword of weight <= 5": upto5.value is None and upto5.lower_bound == 6,
        "full scan size": upto5.work == sum(comb(32, k) * 3**k for k in range(1, 6)),
        "weight-6 witness": at6.value == 6 and w is not None and w.weight() == 6,
        "witness commutes with stabilizer": w is not None
        and all(symplectic_product(w, PauliVector.from_row(h)) == 0 for h in code32.stabilizer.rows),
    }
    check(5, checks, elapsed, 600.0)


def test_criterion_5_parallel_identical(code32):
    serial = distance_lowweight(code32.stabilizer, 6, workers=1)
    t0 = time.perf_counter()
    parallel = distance_lowweight(code32.stabilizer, 6, workers=4)
    elapsed = time.perf_counter() - t0
    assert parallel == serial
    assert elapsed < 120.0


def test_criterion_6_validation_failures():
    from qrm.cli import main

    cand = validate(build_generator(4, 2))
    seed = validate(build_generator(2, 1))
    listed = parse_matrix(CAND_16)
    checks = {
        "(4,2) is the listed candidate": build_generator(4, 2).generator == listed,
        "(4,2) fails self-orthogonality": not cand.selfdual_ok,
        "(4,2) witness in final D rows": cand.witness is not None and min(cand.witness[1:3]) >= 10,
        "(2,1) fails self-orthogonality": not seed.selfdual_ok,
        "verify (4,2) exits 1": main(["verify", "--r", "4", "--t", "2"]) == 1,
        "verify (2,1) exits 1": main(["verify", "--r", "2", "--t", "1"]) == 1,
    }
    check(6, checks)


def test_criterion_7_correctability(code833, code32, code513):
    t833 = build_decoder_table(code833, 1)
    t32 = build_decoder_table(code32, 2)
    t513 = build_decoder_table(code513, 1)
    sims = {}
    for name, code, w in (("[[8,3,3]]", code833, 1), ("[[32,10,6]]", code32, 2), ("[[5,1,3]]", code513, 1)):
        runs = [simulate(code, w, 10_000, seed=20261016, workers=k) for k in (1, 1, 3)]
        sims[name] = runs
    checks = {
        "[[8,3,3]] e=1 correctable": correctability_check(code833, 1),
        "[[32,10,6]] e=2 correctable": correctability_check(code32, 2),
        "[[8,3,3]] 25 distinct syndromes": t833.coverage == 25,
        "[[32,10,6]] 4561 distinct syndromes": t32.coverage == 4561 == 1 + 96 + 4464,
        "[[5,1,3]] perfect": t513.coverage == 16 == 1 << 4,
        "0 failures in 10^4 trials": all(r.failures == 0 and r.trials == 10_000 for runs in sims.values() for r in runs),
        "reproducible across runs and threads": all(runs[0] == runs[1] == runs[2] for runs in sims.values()),
    }
    check(7, checks)


def test_criterion_8_property_suites():
    rng = np.random.default_rng(8)
    checks = {}
    checks["RM duality r <= 6"] = all(
        same_rowspace(nullspace(rm_generator(m, r).generator), rm_generator(r - m - 1, r).generator)
        for r in range(1, 7)
        for m in range(r)
    )
    ok = True
    for r in range(0, 6):
        for m in range(r + 1):
            g = rm_generator(m, r).generator
            want = 1 << (r - m)
            got = codeword_min_weight(g) if g.n_rows <= 16 else lowweight_min_weight(g, want)
            ok &= got == want
    checks["RM min weight r <= 5"] = ok
    n = 16
    pv = [
        PauliVector(BitVector(n, int(rng.integers(0, 1 << n))), BitVector(n, int(rng.integers(0, 1 << n))))
        for _ in range(10_000)
    ]
    checks["symplectic self-product zero"] = all(symplectic_product(p, p) == 0 for p in pv)
    code = build_generator(5, 2)
    ok = True
    for _ in range(10_000):
        a, b = (
            PauliVector(BitVector(32, int(rng.integers(0, 1 << 32))), BitVector(32, int(rng.integers(0, 1 << 32))))
            for _ in range(2)
        )
        ok &= syndrome(code, a + b).bits == syndrome(code, a).bits ^ syndrome(code, b).bits
    checks["syndrome linearity 10^4 pairs"] = ok
    ok = True
    for rows in range(1, 13):
        words = tuple(int(rng.integers(0, 1 << 12)) for _ in range(rows))
        m = Gf2Matrix(12, words)
        res = distance_rowspace(m)
        ok &= res.value == naive_rowspace(m) and res.work == (1 << rows) - 1
    checks["Gray vs naive, <= 12 rows"] = ok
    check(8, checks)
