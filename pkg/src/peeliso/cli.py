"""Command-line entry point: ``peeliso {check,map,verify,fuzz,bench,gen}``.

Exit codes: 0 isomorphic (verified mapping printed), 1 not isomorphic,
2 unknown, 3 usage or input error.
"""

from __future__ import annotations

import argparse
import random
import sys
from pathlib import Path

from .bench import bench
from .fixtures import FIXTURES, fixture_text
from .graph import (
    GraphError,
    generate_random_graph,
    parse_mapping,
    permute,
    random_permutation,
    random_regular_graph,
    read_edge_list,
    render_edge_list,
)
from .matcher import Mode, Status, run, verify_mapping
from .oracle import DEFAULT_CAP, OracleCapExceeded, fuzz_agreement, regular_fixture_report

EXIT_ISOMORPHIC = 0
EXIT_NOT_ISOMORPHIC = 1
EXIT_UNKNOWN = 2
EXIT_USAGE = 3

STATUS_CODES = {
    Status.ISOMORPHIC: EXIT_ISOMORPHIC,
    Status.NOT_ISOMORPHIC: EXIT_NOT_ISOMORPHIC,
    Status.UNKNOWN: EXIT_UNKNOWN,
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _read(path: str):
    try:
        return read_edge_list(path)
    except OSError as exc:
        raise UsageError(f"{path}: {exc.strerror or exc}") from None
    except GraphError as exc:
        raise UsageError(f"{path}: {exc}") from None


def cmd_check(args, out) -> int:
    g, h = _read(args.g), _read(args.h)
    verdict = run(g, h, args.mode)
    if not args.mapping_only:
        print(f"# {verdict.status.value}: {verdict.reason}", file=out)
        if args.trace:
            for line in verdict.trace:
                print(f"# {line}", file=out)
    if verdict.status is Status.ISOMORPHIC:
        for v, u in sorted(verdict.pairs):
            print(f"{v} {u}", file=out)
    return STATUS_CODES[verdict.status]


def cmd_verify(args, out) -> int:
    g, h = _read(args.g), _read(args.h)
    try:
        pairs = parse_mapping(Path(args.mapping).read_text(encoding="utf-8"))
    except OSError as exc:
        raise UsageError(f"{args.mapping}: {exc.strerror or exc}") from None
    except GraphError as exc:
        raise UsageError(f"{args.mapping}: {exc}") from None
    ok = verify_mapping(g, h, pairs)
    print("mapping verified" if ok else "mapping rejected", file=out)
    return EXIT_ISOMORPHIC if ok else EXIT_NOT_ISOMORPHIC


def cmd_fuzz(args, out) -> int:
    if args.trials < 0:
        raise UsageError("--trials must be non-negative")
    if not 0.0 <= args.p <= 1.0:
        raise UsageError("--p must lie in [0, 1]")
    try:
        report = fuzz_agreement(args.trials, args.n, args.p, args.seed, cap=args.oracle_cap, dump_dir=args.dump)
    except OracleCapExceeded as exc:
        raise UsageError(str(exc)) from None
    out.write(report.format())
    if args.regular:
        out.write("\n")
        out.write(regular_fixture_report(args.seed, dump_dir=args.dump).format())
    return 0


def cmd_bench(args, out) -> int:
    try:
        result = bench(args.sizes, args.samples, args.seed, p=args.p, mode=args.mode)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    out.write(result.format())
    return 0


def _write(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")


def cmd_gen(args, out) -> int:
    prefix = Path(args.out)
    if args.kind == "fixture":
        if args.name not in FIXTURES:
            raise UsageError(f"unknown fixture {args.name!r}; choose from {', '.join(sorted(FIXTURES))}")
        _write(prefix, fixture_text(args.name))
        print(prefix, file=out)
        return 0
    if args.n is None:
        raise UsageError(f"gen {args.kind} needs -n")
    rng = random.Random(args.seed)
    if args.kind == "random":
        _write(prefix, render_edge_list(generate_random_graph(args.n, args.p, rng.getrandbits(32))))
        print(prefix, file=out)
        return 0
    if args.kind == "iso-pair":
        g = generate_random_graph(args.n, args.p, rng.getrandbits(32))
        pi = random_permutation(g.vertices, rng)
        h = permute(g, pi)
    elif args.kind == "regular-pair":
        if args.degree is None:
            raise UsageError("gen regular-pair needs --degree")
        try:
            g = random_regular_graph(args.n, args.degree, rng.getrandbits(32))
            h = random_regular_graph(args.n, args.degree, rng.getrandbits(32))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        pi = None
    else:
        raise UsageError(f"unsupported kind {args.kind!r}")
    gpath = prefix.with_name(prefix.name + "-g.el")
    hpath = prefix.with_name(prefix.name + "-h.el")
    _write(gpath, render_edge_list(g))
    _write(hpath, render_edge_list(h))
    print(gpath, file=out)
    print(hpath, file=out)
    if pi is not None:
        print("# permutation " + " ".join(f"{a}->{b}" for a, b in sorted(pi.items())), file=sys.stderr)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="peeliso", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def mode_flag(p):
        p.add_argument("--mode", choices=[m.value for m in Mode], default=Mode.FAITHFUL.value)

    for name, help_ in (("check", "decide isomorphism and print the mapping"),
                        ("map", "print only the mapping lines")):
        p = sub.add_parser(name, help=help_)
        p.add_argument("g")
        p.add_argument("h")
        mode_flag(p)
        p.add_argument("--trace", action="store_true", help="print one line per peeling round")
        p.set_defaults(func=cmd_check, mapping_only=name == "map")

    p = sub.add_parser("verify", help="check a 'v u' mapping file edge by edge")
    p.add_argument("g")
    p.add_argument("h")
    p.add_argument("mapping")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("fuzz", help="compare the matcher against the exact oracle")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("-n", type=int, default=8)
    p.add_argument("-p", "--p", type=float, default=0.5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--oracle-cap", type=int, default=DEFAULT_CAP)
    p.add_argument("--dump", type=Path, help="directory for counterexample edge lists")
    p.add_argument("--regular", action="store_true", help="append the strongly regular fixture rows")
    p.set_defaults(func=cmd_fuzz)

    p = sub.add_parser("bench", help="time the matcher on random isomorphic pairs")
    p.add_argument("--sizes", type=int, nargs="+", default=[50, 100, 200])
    p.add_argument("--samples", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-p", "--p", type=float, default=0.1)
    mode_flag(p)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("gen", help="write edge-list files")
    p.add_argument("kind", choices=["iso-pair", "random", "regular-pair", "fixture"])
    p.add_argument("name", nargs="?", help="fixture name (gen fixture NAME)")
    p.add_argument("-n", type=int)
    p.add_argument("-p", "--p", type=float, default=0.5)
    p.add_argument("--degree", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--out", required=True, help="output file, or prefix for pairs")
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"peeliso: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
