"""Command line interface: analyze, construct, compare, verify-paper.

Exit codes: 0 success, 1 invalid input or failed check, 2 some verdict
could only be reported as "not verified".
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import io, report, verify
from .action import ValidationError
from .numberfield import DependentUnitsError, NotAModuleError
from .poly import DomainError


def _load_action(path):
    # a bare corpus name (with or without .json) also works
    name = Path(path).stem
    if not Path(path).exists() and io.corpus_path(name).exists():
        path = io.corpus_path(name)
    af = io.load(path)
    return af, af.action()


def cmd_analyze(args) -> int:
    af, a = _load_action(args.file)
    rep = report.analyze(a, box=args.box)
    out = report.render_json(af.name, rep) if args.json else report.render_text(af.name, rep)
    sys.stdout.write(out)
    return report.exit_status(rep)


def cmd_construct(args) -> int:
    src = io.load(args.field)
    if src.field is None:
        raise io.ParseError(f"{args.field} has no field block")
    a = src.field.construct(args.lattice)
    fb = io.FieldBlock(src.field.min_poly, src.field.units, src.field.lattices, args.lattice)
    name = args.name or f"{src.name}_{args.lattice}"
    io.save(io.action_file_from(name, a, field=fb), args.output)
    sys.stdout.write(f"wrote {args.output}: {a.d} generators on T^{a.n}\n")
    return 0


def cmd_compare(args) -> int:
    fa, a = _load_action(args.a)
    fb, b = _load_action(args.b)
    r = report.compare_pair(a, b)
    if args.json:
        sys.stdout.write(json.dumps({"a": fa.name, "b": fb.name, **report.comparison_dict(r)},
                                    indent=1) + "\n")
    else:
        sys.stdout.write(report.render_comparison(fa.name, fb.name, r))
    return 0


def cmd_verify(args) -> int:
    t0 = time.perf_counter()
    failed = total = 0
    for check in verify.run(args.filter):
        total += 1
        failed += not check.passed
        print(check.line(), flush=True)
    print(f"{total - failed}/{total} checks passed in {time.perf_counter() - t0:.1f} s")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="torusact",
                                description="Invariants of Z^d-actions by toral automorphisms.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("analyze", help="report the invariants of one action")
    s.add_argument("file")
    s.add_argument("--box", type=int, default=3, help="search box for witnesses (default 3)")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_analyze)

    s = sub.add_parser("construct", help="build an action from field data")
    s.add_argument("--field", required=True, help="action file with a field block")
    s.add_argument("--lattice", required=True, help="name of a lattice in the field block")
    s.add_argument("-o", "--output", required=True)
    s.add_argument("--name")
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("compare", help="compare two actions")
    s.add_argument("a")
    s.add_argument("b")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_compare)

    s = sub.add_parser("verify-paper", help="check every bundled example")
    s.add_argument("--filter", help="only entries or tags containing this string, e.g. 3b")
    s.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (io.ParseError, ValidationError, NotAModuleError, DependentUnitsError,
            DomainError, KeyError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
