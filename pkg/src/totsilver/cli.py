"""Command-line entry point: ``totsilver <subcommand> ...``.

Exit codes: 0 success, 1 domain-negative answer (not silver, not isomorphic,
survey disagreement), 2 search budget or limit exhausted, 64 usage error,
65 malformed input file, 66 unreadable input file.
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

from . import formats
from .families import FAMILIES, FamilySpec
from .graph import bipartition, find_isomorphism
from .reductions import ReductionError, reduce_fully
from .silver import (
    DEFAULT_BUDGET,
    BudgetExceeded,
    LimitExceeded,
    MalformedColoring,
    chromatic_number_square,
    first_violation,
    solve_report,
)
from .survey import PLANS, format_tsv, plan_points, run_survey
from .switches import ReplayError, decompose_to_Br, decompose_to_cliques, replay

EX_OK, EX_NO, EX_BUDGET, EX_USAGE, EX_DATAERR, EX_NOINPUT = 0, 1, 2, 64, 65, 66


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        sys.exit(EX_USAGE)


def _int_range(text: str) -> list[int]:
    """``"4..16"`` or ``"7"`` or ``"3,5,9"``."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return list(range(int(lo), int(hi) + 1))
        return [int(t) for t in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad range {text!r}") from None


def _emit(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def cmd_gen(args) -> int:
    try:
        spec = FamilySpec(args.family, r=args.r, copies=args.copies, n=args.n, d=args.d, m=args.m, a=args.a, b=args.b)
        cg = spec.build()
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit(formats.dumps_graph(cg.graph), args.out)
    if args.coloring:
        if cg.coloring is None:
            print(f"{spec.label}: no canonical coloring; none written", file=sys.stderr)
        else:
            _emit(formats.dumps_coloring(cg.coloring), args.coloring)
    return EX_OK


def cmd_verify(args) -> int:
    g = formats.read_graph(args.graph)
    c = formats.read_coloring(args.coloring)
    if len(c) != g.n:
        raise formats.FormatError(f"coloring has {len(c)} vertices, graph has {g.n}")
    bad = first_violation(g, c)
    if bad is None:
        print("totally silver")
        return EX_OK
    print(f"not totally silver: closed neighborhood of vertex {bad} is not rainbow")
    return EX_NO


def cmd_solve(args) -> int:
    g = formats.read_graph(args.graph)
    try:
        res = solve_report(g, args.budget)
    except BudgetExceeded as exc:
        print(f"budget-exceeded: {exc}")
        return EX_BUDGET
    if res.coloring is None:
        print(f"not-silver: {res.reason} (nodes={res.nodes})")
        return EX_NO
    print(f"silver: k={res.coloring.k} (nodes={res.nodes})")
    if args.out:
        _emit(formats.dumps_coloring(res.coloring), args.out)
    return EX_OK


def cmd_decompose(args) -> int:
    g = formats.read_graph(args.graph)
    c = formats.read_coloring(args.coloring)
    if len(c) != g.n:
        raise formats.FormatError(f"coloring has {len(c)} vertices, graph has {g.n}")
    bad = first_violation(g, c)
    if bad is not None:
        print(f"error: not totally silver at vertex {bad}", file=sys.stderr)
        return EX_NO
    if args.mode == "br":
        b = bipartition(g)
        if b is None:
            print("error: graph is not bipartite", file=sys.stderr)
            return EX_NO
        cert = decompose_to_Br(g, c, b)
    else:
        cert = decompose_to_cliques(g, c)
    if replay(cert) != g:
        print("error: certificate failed to replay", file=sys.stderr)
        return EX_NO
    _emit(formats.dumps_certificate(cert), args.out)
    print(f"{cert.base_kind} certificate with {len(cert.moves)} moves", file=sys.stderr)
    return EX_OK


def cmd_replay(args) -> int:
    cert = formats.read_certificate(args.certificate)
    try:
        g = replay(cert)
    except ReplayError as exc:
        print(f"invalid certificate: {exc}")
        return EX_NO
    if args.target:
        target = formats.read_graph(args.target)
        if target != g:
            print("replayed graph differs from target")
            return EX_NO
        print("replay matches target")
    if args.out:
        _emit(formats.dumps_graph(g), args.out)
    return EX_OK


def cmd_reduce(args) -> int:
    g = formats.read_graph(args.graph)
    c = formats.read_coloring(args.coloring)
    if len(c) != g.n:
        raise formats.FormatError(f"coloring has {len(c)} vertices, graph has {g.n}")
    try:
        done, steps = reduce_fully(g, c)
    except ReductionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_NO
    for i, s in enumerate(steps):
        removed = " ".join(map(str, s.removed)) or "-"
        added = " ".join(f"{u}-{v}" for u, v in s.added_edges)
        dropped = " ".join(f"{u}-{v}" for u, v in s.removed_edges)
        print(f"step {i}\t{s.kind}\torder={s.order_before}\tremoved={removed}\tadded={added}\tdeleted={dropped}")
    out_dir = Path(args.out_dir) if args.out_dir else None
    if out_dir:
        out_dir.mkdir(parents=True, exist_ok=True)
    for i, cg in enumerate(done):
        print(f"component {i}\torder={cg.graph.n}\tvertices={' '.join(map(str, cg.origin))}")
        if out_dir:
            formats.write_graph(out_dir / f"component_{i}.tsg", cg.graph)
            formats.write_coloring(out_dir / f"component_{i}.tsc", cg.coloring)
    return EX_OK


def cmd_survey(args) -> int:
    points = plan_points(args.plan, args.n, None if args.d in (None, "all") else _int_range(args.d))
    rows = run_survey(points, args.budget, args.jobs)
    sys.stdout.write(format_tsv(rows))
    if any(r.silver == "budget-exceeded" for r in rows):
        return EX_BUDGET
    return EX_OK if all(r.agrees for r in rows) else EX_NO


def cmd_iso(args) -> int:
    g1 = formats.read_graph(args.graph1)
    g2 = formats.read_graph(args.graph2)
    f = find_isomorphism(g1, g2)
    if f is None:
        print("not isomorphic")
        return EX_NO
    print("isomorphic")
    print(" ".join(f"{v}->{f[v]}" for v in range(g1.n)))
    return EX_OK


def cmd_square_chi(args) -> int:
    g = formats.read_graph(args.graph)
    try:
        print(chromatic_number_square(g, args.limit, args.budget))
    except (LimitExceeded, BudgetExceeded) as exc:
        print(f"limit: {exc}")
        return EX_BUDGET
    return EX_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="totsilver", description="Totally silver graph toolkit.")
    p.add_argument("--timing", action="store_true", help="report elapsed time on stderr")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--timing", action="store_true", default=argparse.SUPPRESS, help=argparse.SUPPRESS)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def command(name, help):
        return sub.add_parser(name, help=help, parents=[common])

    def budgeted(sp):
        sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="search node budget")

    sp = command("gen", help="write a family member as tsg (and tsc)")
    sp.add_argument("--family", required=True, choices=FAMILIES)
    for name in ("r", "copies", "n", "d", "m", "a", "b"):
        sp.add_argument(f"--{name}", type=int)
    sp.add_argument("-o", "--out", help="graph output path (default stdout)")
    sp.add_argument("--coloring", help="coloring output path")
    sp.set_defaults(func=cmd_gen)

    sp = command("verify", help="check a coloring")
    sp.add_argument("graph")
    sp.add_argument("coloring")
    sp.set_defaults(func=cmd_verify)

    sp = command("solve", help="search for a totally silver coloring")
    sp.add_argument("graph")
    sp.add_argument("-o", "--out", help="coloring output path")
    budgeted(sp)
    sp.set_defaults(func=cmd_solve)

    sp = command("decompose", help="emit a colored 2-switch certificate")
    sp.add_argument("graph")
    sp.add_argument("coloring")
    sp.add_argument("--mode", choices=("clique", "br"), default="clique")
    sp.add_argument("-o", "--out", help="certificate output path (default stdout)")
    sp.set_defaults(func=cmd_decompose)

    sp = command("replay", help="replay a certificate")
    sp.add_argument("certificate")
    sp.add_argument("--target", help="graph the replay must reproduce")
    sp.add_argument("-o", "--out", help="write the replayed graph")
    sp.set_defaults(func=cmd_replay)

    sp = command("reduce", help="reduce a cubic silver graph to K4 / nontrivial parts")
    sp.add_argument("graph")
    sp.add_argument("coloring")
    sp.add_argument("--out-dir", help="directory for terminal components")
    sp.set_defaults(func=cmd_reduce)

    sp = command("survey", help="sweep a family against its predicted verdicts")
    sp.add_argument("plan", choices=PLANS)
    sp.add_argument("--n", type=_int_range, help="range like 4..16")
    sp.add_argument("--d", help="'all' or a range (petersen plan)")
    sp.add_argument("--jobs", type=int, default=1)
    budgeted(sp)
    sp.set_defaults(func=cmd_survey)

    sp = command("iso", help="test two graphs for isomorphism")
    sp.add_argument("graph1")
    sp.add_argument("graph2")
    sp.set_defaults(func=cmd_iso)

    sp = command("square-chi", help="chromatic number of the square")
    sp.add_argument("graph")
    sp.add_argument("--limit", type=int, default=10)
    budgeted(sp)
    sp.set_defaults(func=cmd_square_chi)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    t0 = time.perf_counter()
    try:
        code = args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        code = EX_USAGE
    except (formats.FormatError, MalformedColoring) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        code = EX_DATAERR
    except OSError as exc:
        print(f"cannot read input: {exc}", file=sys.stderr)
        code = EX_NOINPUT
    if args.timing:
        print(f"elapsed {time.perf_counter() - t0:.3f}s", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
