"""Command-line entry point.

Exit status: 0 when the checked claim holds, 1 when it is violated,
2 for usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .construct import (
    build_generator,
    code_from_dict,
    code_to_dict,
    derive_stabilizer,
    format_code,
    parse_code,
    puncture,
    qrm_params,
    rotation_variants,
    same_rowspace,
    six04,
    stabilizer_direct,
    validate,
)
from .decode import build_decoder_table, simulate
from .distance import ROW_CAP, distance_lowweight, distance_rowspace

FIXTURES = {"six04": six04}


class UsageError(Exception):
    pass


def _params(r, t):
    try:
        return qrm_params(r, t)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _out(text: str, path: str | None):
    if path:
        Path(path).write_text(text)
    else:
        sys.stdout.write(text)


def table_text(r_max: int = 10, t_max: int = 5) -> str:
    """Grid of k values: rows n = 2**r, columns d; blank where t >= r."""
    cols = [(1 << t) + (1 << (t - 1)) for t in range(1, t_max + 1)]
    lines = ["n \\ d " + "".join(f"{d:>7}" for d in cols)]
    for r in range(2, r_max + 1):
        cells = []
        for t in range(1, t_max + 1):
            cells.append(f"{qrm_params(r, t).k:>7}" if t < r else " " * 7)
        lines.append(f"{1 << r:>6}" + "".join(cells).rstrip())
    return "\n".join(lines) + "\n"


def cmd_params(args) -> int:
    print(_params(args.r, args.t))
    return 0


def cmd_table(args) -> int:
    if args.r_max < 2 or args.t_max < 1:
        raise UsageError("need --r-max >= 2 and --t-max >= 1")
    sys.stdout.write(table_text(args.r_max, args.t_max))
    return 0


def _load_code(args):
    if getattr(args, "code", None):
        return FIXTURES[args.code]()
    if getattr(args, "input", None):
        text = Path(args.input).read_text()
        if text.lstrip().startswith("{"):
            return code_from_dict(json.loads(text))
        return parse_code(text)
    if args.r is None or args.t is None:
        raise UsageError("give --r and --t, --input, or --code")
    _params(args.r, args.t)
    return build_generator(args.r, args.t)


def cmd_build(args) -> int:
    _params(args.r, args.t)
    code = build_generator(args.r, args.t)
    report = validate(code)
    if args.format == "json":
        text = json.dumps(code_to_dict(code, report), indent=2) + "\n"
    else:
        text = format_code(code, report)
    _out(text, args.output)
    if not report.ok:
        print(f"note: {code.label} does not satisfy the stabilizer conditions", file=sys.stderr)
    return 0


def cmd_verify(args) -> int:
    p = _params(args.r, args.t)
    code = build_generator(args.r, args.t)
    report = validate(code)
    print(f"code {p}")
    print(f"generator/stabilizer orthogonality: {'ok' if report.hg_ok else 'FAIL'}")
    print(f"stabilizer self-orthogonality: {'ok' if report.selfdual_ok else 'FAIL'}")
    print(f"H_x H_z^T = 0: {'yes' if report.hxhzT_zero else 'no'}")
    if report.witness:
        print("witness: " + " ".join(map(str, report.witness)))
    ok = report.ok
    if p.k > 0:
        direct = stabilizer_direct(args.r, args.t)
        match = same_rowspace(derive_stabilizer(code), direct.generator)
        print(f"derived stabilizer equals ({args.r},{args.r - args.t}) generator: {'yes' if match else 'no'}")
        if args.strict:
            ok &= match
        if args.rotations:
            tp = args.r - args.t
            for s, res in rotation_variants(args.r, tp, range(args.r + 1)).items():
                print(f"  rotation {s}: " + " ".join(f"{k}={v}" for k, v in res.items()))
    return 0 if ok else 1


def cmd_distance(args) -> int:
    code = _load_code(args)
    results = []
    if args.method in ("rowspace", "both"):
        results.append(distance_rowspace(code.generator, row_cap=args.row_cap, workers=args.workers))
    if args.method in ("lowweight", "both"):
        w_max = args.max_weight if args.max_weight is not None else code.n
        checks = derive_stabilizer(code.generator)
        logicals = code.generator if args.degenerate else None
        results.append(distance_lowweight(checks, w_max, logicals=logicals, workers=args.workers))
    print(f"code {code.label}")
    for res in results:
        print(res)
    if args.json:
        print(json.dumps([r.to_dict() for r in results], sort_keys=True))
    if code.d is None:
        return 0
    for res in results:
        if res.value is not None and res.value != code.d:
            return 1
        if res.lower_bound > code.d:
            return 1
    return 0


def cmd_decode_sim(args) -> int:
    code = _load_code(args)
    table = build_decoder_table(code, args.errors)
    stats = simulate(code, args.errors, args.trials, args.seed, table=table, workers=args.workers)
    print(stats)
    if args.json:
        print(stats.to_json())
    radius = (code.d - 1) // 2 if code.d is not None else None
    if radius is not None and args.errors <= radius and stats.failures:
        return 1
    return 0


def cmd_puncture(args) -> int:
    parent = FIXTURES[args.code]()
    positions = range(parent.n) if args.position is None else [args.position]
    ok = True
    for pos in positions:
        if not 0 <= pos < parent.n:
            raise UsageError(f"position {pos} out of range")
        code = puncture(parent, pos)
        dist = distance_lowweight(code.stabilizer, code.n, logicals=code.generator)
        table = build_decoder_table(code, 1)
        perfect = len(table) == 1 << code.stabilizer.n_rows
        print(
            f"position {pos}: [[{code.n},{code.k},{dist.value}]] "
            f"syndromes={len(table)}/{1 << code.stabilizer.n_rows} perfect={perfect}"
        )
        if args.verbose:
            sys.stdout.write(format_code(code))
        ok &= code.valid and dist.value is not None and perfect
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qrm", description="Quantum Reed-Muller code toolkit")
    sub = p.add_subparsers(dest="command", required=True)

    def rt(sp, required=True):
        sp.add_argument("--r", type=int, required=required)
        sp.add_argument("--t", type=int, required=required)

    sp = sub.add_parser("params", help="print [[n,k,d]]")
    rt(sp)
    sp.set_defaults(func=cmd_params)

    sp = sub.add_parser("table", help="print the parameter table")
    sp.add_argument("--r-max", type=int, default=10)
    sp.add_argument("--t-max", type=int, default=5)
    sp.set_defaults(func=cmd_table)

    sp = sub.add_parser("build", help="write generator and stabilizer")
    rt(sp)
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.add_argument("--output", "-o")
    sp.set_defaults(func=cmd_build)

    sp = sub.add_parser("verify", help="check the stabilizer conditions")
    rt(sp)
    sp.add_argument("--rotations", action="store_true", help="also compare last-row rotations of the dual generator")
    sp.add_argument("--strict", action="store_true", help="also require the directly built stabilizer to match")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("distance", help="exact minimum distance")
    rt(sp, required=False)
    sp.add_argument("--input")
    sp.add_argument("--code", choices=sorted(FIXTURES))
    sp.add_argument("--method", choices=("rowspace", "lowweight", "both"), default="rowspace")
    sp.add_argument("--max-weight", type=int)
    sp.add_argument("--row-cap", type=int, default=ROW_CAP)
    sp.add_argument("--degenerate", action="store_true", help="exclude stabilizer elements (lowweight)")
    sp.add_argument("--workers", type=int)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_distance)

    sp = sub.add_parser("decode-sim", help="seeded table-decoding simulation")
    rt(sp, required=False)
    sp.add_argument("--input")
    sp.add_argument("--code", choices=sorted(FIXTURES))
    sp.add_argument("--errors", type=int, required=True)
    sp.add_argument("--trials", type=int, default=10000)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--workers", type=int)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_decode_sim)

    sp = sub.add_parser("puncture", help="delete one qubit of a fixture code")
    sp.add_argument("--code", choices=sorted(FIXTURES), default="six04")
    sp.add_argument("--position", type=int)
    sp.add_argument("--verbose", "-v", action="store_true")
    sp.set_defaults(func=cmd_puncture)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.error(str(exc))  # exits 2
    except (ValueError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
