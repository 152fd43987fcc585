"""Command-line front end: ``solve``, ``spectrum``, ``verify`` and ``batch``."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import suites
from .criticality import REPORT_HEADER, default_jobs, profile
from .game import IsolatedVertex, InvalidSet, Player, Solver
from .graph6 import parse_g6
from .graphs import Graph, GraphError, generate, join, parse_edge_list, to_mask, union

EXIT_OK, EXIT_DISAGREE, EXIT_USAGE, EXIT_UNWINNABLE = 0, 1, 2, 3

BATCH_HEADER = "g6\tn\tgamma_tg\tgamma_tg_staller\tcritical\tclass\terror"


class UsageError(Exception):
    pass


def parse_gen(spec: str) -> Graph:
    """Parse ``family:param``, ``join:(a,b)`` or ``union:(a,b)``."""
    graph, rest = _parse_gen(spec.replace(" ", ""))
    if rest:
        raise UsageError(f"trailing text {rest!r} in generator spec")
    return graph


def _parse_gen(s: str) -> tuple[Graph, str]:
    name, sep, rest = s.partition(":")
    if not sep:
        raise UsageError(f"generator spec {s!r} lacks ':'")
    if name in ("join", "union"):
        if not rest.startswith("("):
            raise UsageError(f"{name} expects '(spec,spec)'")
        left, rest = _parse_gen(rest[1:])
        if not rest.startswith(","):
            raise UsageError(f"{name} expects two comma-separated specs")
        right, rest = _parse_gen(rest[1:])
        if not rest.startswith(")"):
            raise UsageError(f"{name} missing ')'")
        return (join if name == "join" else union)(left, right), rest[1:]
    digits = ""
    while rest and rest[0].isdigit():
        digits, rest = digits + rest[0], rest[1:]
    if not digits:
        raise UsageError(f"{name} needs an integer parameter")
    try:
        return generate(name, int(digits)), rest
    except GraphError as exc:
        raise UsageError(str(exc)) from exc


def _resolve_graph(args: argparse.Namespace) -> Graph:
    sources = [x for x in (args.gen, args.g6, args.edges) if x is not None]
    if len(sources) != 1:
        raise UsageError("give exactly one of --gen, --g6, --edges")
    try:
        if args.gen is not None:
            return parse_gen(args.gen)
        if args.g6 is not None:
            return parse_g6(args.g6)
        return parse_edge_list(Path(args.edges).read_text())
    except (GraphError, OSError) as exc:
        raise UsageError(str(exc)) from exc


def _parse_given(text: str | None, g: Graph) -> int:
    if not text:
        return 0
    try:
        vertices = [int(t) for t in text.replace(",", " ").split()]
    except ValueError as exc:
        raise UsageError(f"bad --given list {text!r}") from exc
    if any(not 0 <= v < g.n for v in vertices):
        raise UsageError(f"--given vertices must lie in 0..{g.n - 1}")
    return to_mask(vertices)


def _emit(lines: list[str], out: str | None) -> None:
    text = "".join(line + "\n" for line in lines)
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_solve(args: argparse.Namespace) -> int:
    g = _resolve_graph(args)
    given = _parse_given(args.given, g)
    solver = Solver(g)
    d = solver.value(given, Player.DOMINATOR)
    s = solver.value(given, Player.STALLER)
    print(f"gamma_tg={d} gamma_tg_staller={s}")
    return EXIT_OK


def cmd_spectrum(args: argparse.Namespace) -> int:
    g = _resolve_graph(args)
    prof = profile(g)
    lines = ["v\tgamma_tg(G|v)"] + [f"{v}\t{x}" for v, x in enumerate(prof.spectrum)]
    lines.append(f"base gamma_tg={prof.base_value}")
    lines.append(f"critical class={prof.class_k}" if prof.is_critical else "not critical")
    _emit(lines, args.out)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    jobs = args.jobs if args.jobs is not None else default_jobs()
    try:
        result = suites.run_suite(args.suite, lo=args.min, hi=args.max, jobs=jobs)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    _emit([REPORT_HEADER] + [r.tsv() for r in result.reports], args.out)
    bad = sum(not r.agree for r in result.reports)
    print(result.summary, file=sys.stderr if not args.out else sys.stdout)
    return EXIT_OK if bad == 0 else EXIT_DISAGREE


def batch_row(line: str) -> str:
    try:
        g = parse_g6(line)
    except GraphError as exc:
        return f"{line}\t-\t-\t-\t-\t-\tparse error: {exc}"
    try:
        solver = Solver(g)
    except IsolatedVertex as exc:
        return f"{line}\t{g.n}\t-\t-\t-\t-\tunwinnable: isolated {exc.vertices}"
    prof = profile(g, solver)
    staller = solver.value(0, Player.STALLER)
    klass = str(prof.class_k) if prof.is_critical else "-"
    return f"{line}\t{g.n}\t{prof.base_value}\t{staller}\t{str(prof.is_critical).lower()}\t{klass}\t"


def cmd_batch(args: argparse.Namespace) -> int:
    try:
        raw = Path(args.corpus).read_text().splitlines()
    except OSError as exc:
        raise UsageError(str(exc)) from exc
    lines = [ln.strip() for ln in raw if ln.strip()]
    jobs = args.jobs if args.jobs is not None else default_jobs()
    if jobs > 1 and len(lines) > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(batch_row, lines, chunksize=16))
    else:
        rows = [batch_row(ln) for ln in lines]
    _emit([BATCH_HEADER] + rows, args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tdgame", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_source(p: argparse.ArgumentParser) -> None:
        p.add_argument("--gen", help="generator spec, e.g. cycle:9 or join:(path:4,complete:3)")
        p.add_argument("--g6", help="graph6 string")
        p.add_argument("--edges", help="edge-list file: n on the first line, then 'u v' pairs")

    p = sub.add_parser("solve", help="print gamma_tg(G|S) and gamma'_tg(G|S)")
    add_source(p)
    p.add_argument("--given", help="0-based vertices already totally dominated, e.g. 0,3")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("spectrum", help="gamma_tg(G|v) for every v and the criticality verdict")
    add_source(p)
    p.add_argument("--out")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("verify", help="run a verification suite and write a TSV report")
    p.add_argument("suite", choices=sorted(suites.SUITES))
    p.add_argument("--min", type=int, default=None, help="smallest order to check")
    p.add_argument("--max", "--max-n", dest="max", type=int, default=None, help="largest order to check")
    p.add_argument("--out")
    p.add_argument("--jobs", type=int, default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("batch", help="evaluate every graph6 line of a corpus file")
    p.add_argument("corpus")
    p.add_argument("--out")
    p.add_argument("--jobs", type=int, default=None)
    p.set_defaults(func=cmd_batch)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except IsolatedVertex as exc:
        print(f"error: unwinnable: {exc}", file=sys.stderr)
        return EXIT_UNWINNABLE
    except InvalidSet as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
