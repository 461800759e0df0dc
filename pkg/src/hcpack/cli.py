"""Command line interface: ``hcpack verify | search | convert | report``.

Exit status: 0 success, 1 verification mismatch or unmet search target,
2 usage or input error. Results go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import corpus
from .corpus import FormatError, parse_configuration, parse_edges, serialize_configuration
from .hexlattice import Window, to_cartesian
from .packing import Configuration, InvalidConfiguration, build_contact_graph
from .report import bound_check, summary_table, TSV_HEADER, metrics_row
from .search import run
from .search.model import ALGORITHMS, SearchIncomplete, SearchParams

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse exits with 2 already; keep the message on stderr
        self.print_usage(sys.stderr)
        raise _UsageError(message)


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise _UsageError(f"cannot read {path}: {exc.strerror or exc}") from None


def _load_configuration(path: str) -> Configuration:
    try:
        return parse_configuration(_read(path))
    except FormatError as exc:
        raise _UsageError(f"{path}: {exc}") from None


def _write(text: str, out: Optional[str]) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
        return
    try:
        Path(out).write_text(text, encoding="utf-8")
    except OSError as exc:
        raise _UsageError(f"cannot write {out}: {exc.strerror or exc}") from None


def _err(message: str) -> None:
    print(message, file=sys.stderr)


def cmd_verify(args: argparse.Namespace) -> int:
    if args.paper is not None:
        try:
            entry = corpus.embedded(args.paper)
        except ValueError as exc:
            raise _UsageError(str(exc)) from None
        report = corpus.verify_entry(entry)
    else:
        cfg = _load_configuration(args.input)
        if args.edges is None:
            try:
                graph = build_contact_graph(cfg)
            except InvalidConfiguration as exc:
                raise _UsageError(f"{args.input}: {exc}") from None
            sys.stdout.write(f"n\t{graph.n}\ncomputed_count\t{graph.count}\n")
            return EXIT_OK
        try:
            listed = parse_edges(_read(args.edges))
        except FormatError as exc:
            raise _UsageError(f"{args.edges}: {exc}") from None
        bad = [e for e in listed if e[1] > len(cfg)]
        if bad:
            raise _UsageError(f"{args.edges}: edge {bad[0]} refers to a ball beyond n={len(cfg)}")
        report = corpus.verify(cfg, listed)
    sys.stdout.write(report.format())
    return EXIT_OK if report.verdict == "exact-match" else EXIT_MISMATCH


def cmd_search(args: argparse.Namespace) -> int:
    try:
        window = Window.parse(args.window)
    except ValueError as exc:
        raise _UsageError(str(exc)) from None
    initial = _load_configuration(args.init) if args.init else None
    if initial is not None and args.algo == "exact":
        _err("note: --init is ignored by the exact search")
        initial = None
    try:
        params = SearchParams(
            n=args.n,
            window=window,
            algorithm=args.algo,
            seed=args.seed,
            budget=args.budget,
            restarts=args.restarts,
            initial=initial,
            steps=args.steps,
            threads=args.threads,
        )
        result = run(params)
    except SearchIncomplete as exc:
        _err(f"incomplete: {exc}")
        return EXIT_MISMATCH
    except ValueError as exc:
        raise _UsageError(str(exc)) from None

    header = "".join(f"# {line}\n" for line in result.summary_lines())
    _write(header + serialize_configuration(result.configuration), args.out)
    _err(f"elapsed: {result.elapsed:.3f} s")
    if args.target is not None and result.best_count < args.target:
        _err(f"target {args.target} not met (best {result.best_count})")
        return EXIT_MISMATCH
    return EXIT_OK


def _fmt(x: float) -> str:
    value = float(f"{x:.9g}")
    return repr(value + 0.0)  # + 0.0 turns -0.0 into 0.0


def cmd_convert(args: argparse.Namespace) -> int:
    cfg = _load_configuration(args.input)
    if args.to == "cartesian":
        rows = ["index,x,y,z"]
        for t, p in enumerate(cfg, start=1):
            x, y, z = to_cartesian(p)
            rows.append(f"{t},{_fmt(x)},{_fmt(y)},{_fmt(z)}")
        _write("\n".join(rows) + "\n", args.out)
    else:
        _write(corpus.serialize_edges(build_contact_graph(cfg).edges), args.out)
    return EXIT_OK


def cmd_report(args: argparse.Namespace) -> int:
    rows: list[tuple[int, int]] = []
    if args.paper:
        for n in corpus.PAPER_SIZES:
            rows.append((n, build_contact_graph(corpus.embedded(n).configuration).count))
    for path in args.input or ():
        cfg = _load_configuration(path)
        if len(cfg) == 0:
            raise _UsageError(f"{path}: empty configuration has no metrics")
        rows.append((len(cfg), build_contact_graph(cfg).count))

    checks = [bound_check(n, c) for n, c in rows]
    if args.bounds:
        lines = [TSV_HEADER + "\tbound"]
        lines += [f"{metrics_row(n, c).tsv()}\t{b.relation}" for (n, c), b in zip(rows, checks)]
        sys.stdout.write("\n".join(lines) + "\n")
    else:
        sys.stdout.write(summary_table(rows))
    for (n, _), b in zip(rows, checks):
        if b.relation != "inside":
            _err(
                f"note: n={n} ratio {b.ratio:.4f} is {b.relation} the interval "
                f"({b.lower}, {b.upper}); {b.note}"
            )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hcpack", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("verify", help="recompute contacts and compare with a listing")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--paper", type=int, metavar="N", help="reference configuration, 20..27")
    src.add_argument("--input", metavar="FILE", help=".hexcfg configuration")
    p.add_argument("--edges", metavar="FILE", help=".edges listing to compare against")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="search for a configuration with many contacts")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--window", required=True, metavar="IxJxK")
    p.add_argument("--algo", choices=ALGORITHMS, default="exact")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=float, default=None, metavar="SECONDS")
    p.add_argument("--restarts", type=int, default=8)
    p.add_argument("--steps", type=int, default=None, help="annealing moves per restart")
    p.add_argument("--init", metavar="FILE")
    p.add_argument("--target", type=int, default=None, metavar="C")
    p.add_argument("--out", metavar="FILE")
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("convert", help="convert a configuration to Cartesian CSV or edges")
    p.add_argument("--input", required=True, metavar="FILE")
    p.add_argument("--to", choices=("cartesian", "edges"), required=True)
    p.add_argument("--out", metavar="FILE")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("report", help="summary table of contact-number metrics")
    p.add_argument("--paper", action="store_true", help="include the n=20..27 references")
    p.add_argument("--input", nargs="+", metavar="FILE")
    p.add_argument("--bounds", action="store_true", help="append the asymptotic-interval column")
    p.set_defaults(func=cmd_report)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except _UsageError as exc:
        _err(f"hcpack: error: {exc}")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
