"""Command-line front end.

Exit codes: 0 = success / verification PASS, 1 = verification FAIL,
2 = usage or precondition error.  All numeric I/O is decimal; bitstrings
appear only with --show-bits or inside labeled report lines.
"""

import argparse
import sys
from itertools import product

from .bitcore import to_bitstring
from .records import (
    ScanConfig,
    check_bound,
    check_theorem,
    enumerate_record_shapes,
    scan_records,
)
from .seqio import BFile, diff_bfiles, emit_bfile, parse_bfile, REGISTRY
from .transforms import (
    TransformSpec,
    append_transform,
    appended_bit_length,
    check_swap_identity,
    expand_bits,
    prepend_transform,
    prepended_bit_length,
    shrink_runs,
    transform_value,
)


def _positive(text: str) -> int:
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {n}")
    return n


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="runpad",
        description="Run-padding bitstring transforms, record scans, and verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("transform", help="apply the append/prepend transform to n")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--d0", required=True, help="pad for 0-runs ('' allowed)")
    p.add_argument("--d1", required=True, help="pad for 1-runs ('' allowed)")
    p.add_argument("--mode", choices=["append", "prepend"], required=True)
    p.add_argument("--show-bits", action="store_true", help="also print the raw expanded bitstring")

    p = sub.add_parser("inverse", help="run-shrink left inverse; prints EMPTY if all runs vanish")
    p.add_argument("--n", type=_positive, required=True)

    p = sub.add_parser("records", help="brute-force record scan; prints 'index value' lines")
    p.add_argument("--mode", choices=["append", "prepend"], required=True)
    p.add_argument("--d0", required=True)
    p.add_argument("--d1", required=True)
    p.add_argument("--limit", type=_positive, required=True)
    p.add_argument("--chunk", type=_positive, default=4096)
    p.add_argument("--bfile", help="also write record values as a b-file (ordinal index)")

    p = sub.add_parser("enumerate-t", help="structural enumeration of record indices")
    p.add_argument("--count", type=_positive, required=True)

    p = sub.add_parser("verify", help="PASS/FAIL verification reports")
    vsub = p.add_subparsers(dest="check", required=True)

    v = vsub.add_parser("theorem", help="record indices equal the structural enumeration")
    v.add_argument("--mode", choices=["append", "prepend"], required=True)
    v.add_argument("--d0", required=True)
    v.add_argument("--d1", required=True)
    v.add_argument("--max-n", type=_positive, required=True)

    v = vsub.add_parser("bound", help="5*a(n) <= 9n^2+12n with the exact equality set")
    v.add_argument("--max-n", type=_positive, required=True)

    v = vsub.add_parser("identities", help="length formulas and transform identities")
    v.add_argument("--max-n", type=_positive, required=True)

    p = sub.add_parser("emit", help="emit a registered sequence as a b-file")
    p.add_argument("--key", required=True, help=f"one of {sorted(REGISTRY)}")
    p.add_argument("--count", type=_positive, required=True)
    p.add_argument("--out", required=True)

    p = sub.add_parser("diff", help="compare two b-files")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)

    return parser


def _cmd_transform(args) -> int:
    spec = TransformSpec(args.d0, args.d1, args.mode)
    value = transform_value(args.n, spec)
    print(value)
    if args.show_bits:
        print(expand_bits(to_bitstring(args.n), spec))
    return 0


def _cmd_inverse(args) -> int:
    result = shrink_runs(args.n)
    print("EMPTY" if result is None else result)
    return 0


def _cmd_records(args) -> int:
    spec = TransformSpec(args.d0, args.d1, args.mode)
    entries = scan_records(ScanConfig(spec, args.limit, args.chunk))
    for entry in entries:
        print(entry.index, entry.value)
    if args.bfile:
        bf = BFile([(i, e.value) for i, e in enumerate(entries, start=1)], offset=1)
        with open(args.bfile, "w") as fh:
            fh.write(bf.render())
    return 0


def _cmd_enumerate_t(args) -> int:
    for n in enumerate_record_shapes(args.count):
        print(n)
    return 0


def _verify_identities(max_n: int) -> int:
    failures = []
    for n in range(1, max_n + 1):
        a = append_transform(n, "0", "1")
        if prepend_transform(n, "0", "1") != a:
            failures.append(f"prepend(0,1) != append(0,1) at n={n}")
        if prepend_transform(n, "1", "0") != a // 2:
            failures.append(f"prepend(1,0) != append(0,1)//2 at n={n}")
        if shrink_runs(a) != n:
            failures.append(f"shrink round trip failed at n={n}")
    pads = ["".join(p) for k in (1, 2) for p in product("01", repeat=k)]
    pairs = [(d0, d1) for d0 in pads for d1 in pads if len(d0) == len(d1)]
    for d0, d1 in pairs:
        aspec = TransformSpec(d0, d1, "append")
        pspec = TransformSpec(d0, d1, "prepend")
        for n in range(1, max_n + 1):
            if transform_value(n, aspec).bit_length() != appended_bit_length(n, aspec):
                failures.append(f"append length formula failed at n={n} pads {d0}/{d1}")
            gv = transform_value(n, pspec)
            if gv and gv.bit_length() != prepended_bit_length(n, pspec):
                failures.append(f"prepend length formula failed at n={n} pads {d0}/{d1}")
            if not check_swap_identity(n, d0, d1):
                failures.append(f"swap identity failed at n={n} pads {d0}/{d1}")
    for line in failures[:20]:
        print(line)
    print(f"checked n <= {max_n} over {len(pairs)} pad pairs")
    print(f"RESULT: {'FAIL' if failures else 'PASS'}")
    return 1 if failures else 0


def _cmd_verify(args) -> int:
    if args.check == "theorem":
        spec = TransformSpec(args.d0, args.d1, args.mode)
        report = check_theorem(ScanConfig(spec, args.max_n))
        print("\n".join(report.lines()))
        return 0 if report.verdict else 1
    if args.check == "bound":
        report = check_bound(args.max_n)
        print("\n".join(report.lines()))
        return 0 if report.verdict else 1
    return _verify_identities(args.max_n)


def _cmd_emit(args) -> int:
    bf = emit_bfile(args.key, args.count)
    with open(args.out, "w") as fh:
        fh.write(bf.render())
    print(f"wrote {len(bf.entries)} entries to {args.out}")
    return 0


def _cmd_diff(args) -> int:
    with open(args.a) as fh:
        a = parse_bfile(fh.read())
    with open(args.b) as fh:
        b = parse_bfile(fh.read())
    report = diff_bfiles(a, b)
    print("\n".join(report.lines()))
    return 0 if report.match else 1


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    handlers = {
        "transform": _cmd_transform,
        "inverse": _cmd_inverse,
        "records": _cmd_records,
        "enumerate-t": _cmd_enumerate_t,
        "verify": _cmd_verify,
        "emit": _cmd_emit,
        "diff": _cmd_diff,
    }
    try:
        return handlers[args.command](args)
    except (ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
