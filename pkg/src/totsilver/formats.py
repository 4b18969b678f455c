"""Line-oriented text formats.

``tsg`` (graphs)::

    tsg 1 <n> <m>
    e <u> <v>          # m lines, u < v, sorted

``tsc`` (colorings)::

    tsc 1 <n> <k>
    c <vertex> <color> # n lines in vertex order

``tscert`` (switch certificates)::

    tscert 1 <base_kind> <r> <moves>
    <tsg block>        # start graph
    <tsc block>        # coloring
    [tsb 1 <n>         # BrUnion only: the bipartition,
     b <vertex> <side>]#   one line per vertex, side 0 = X
    s <u1> <v1> <u2> <v2>   # one line per stored move

Moves are written in stored (graph-to-base) order.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterator

from .graph import Bipartition, Graph
from .silver import Coloring
from .switches import SwitchCertificate, SwitchMove

__all__ = [
    "FormatError",
    "dumps_graph",
    "loads_graph",
    "dumps_coloring",
    "loads_coloring",
    "dumps_certificate",
    "loads_certificate",
    "read_graph",
    "write_graph",
    "read_coloring",
    "write_coloring",
    "read_certificate",
    "write_certificate",
]


class FormatError(ValueError):
    pass


class _Lines:
    def __init__(self, text: str):
        self._it: Iterator[tuple[int, list[str]]] = (
            (i + 1, line.split()) for i, line in enumerate(text.splitlines()) if line.strip()
        )

    def next(self, what: str) -> tuple[int, list[str]]:
        try:
            return next(self._it)
        except StopIteration:
            raise FormatError(f"unexpected end of input, expected {what}") from None

    def rest(self) -> list[tuple[int, list[str]]]:
        return list(self._it)


def _ints(lineno: int, toks: list[str], tag: str, count: int) -> list[int]:
    if not toks or toks[0] != tag or len(toks) != count + 1:
        raise FormatError(f"line {lineno}: expected '{tag}' with {count} fields")
    try:
        return [int(t) for t in toks[1:]]
    except ValueError:
        raise FormatError(f"line {lineno}: non-integer field") from None


def _header(lines: _Lines, tag: str, count: int) -> list[int]:
    lineno, toks = lines.next(f"'{tag}' header")
    vals = _ints(lineno, toks, tag, count)
    if vals[0] != 1:
        raise FormatError(f"line {lineno}: unsupported {tag} version {vals[0]}")
    return vals[1:]


def dumps_graph(g: Graph) -> str:
    out = [f"tsg 1 {g.n} {g.m}"]
    out += [f"e {u} {v}" for u, v in g.edge_list()]
    return "\n".join(out) + "\n"


def _parse_graph(lines: _Lines) -> Graph:
    n, m = _header(lines, "tsg", 3)
    if n < 0 or m < 0:
        raise FormatError("negative vertex or edge count")
    seen = set()
    for _ in range(m):
        lineno, toks = lines.next("edge line")
        u, v = _ints(lineno, toks, "e", 2)
        if u == v:
            raise FormatError(f"line {lineno}: self-loop at {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"line {lineno}: vertex out of range")
        if u > v:
            raise FormatError(f"line {lineno}: edge must be written with u < v")
        if (u, v) in seen:
            raise FormatError(f"line {lineno}: duplicate edge {u} {v}")
        seen.add((u, v))
    return Graph(n, frozenset(seen))


def loads_graph(text: str) -> Graph:
    lines = _Lines(text)
    g = _parse_graph(lines)
    if lines.rest():
        raise FormatError("trailing content after graph")
    return g


def dumps_coloring(c: Coloring) -> str:
    out = [f"tsc 1 {len(c)} {c.k}"]
    out += [f"c {v} {col}" for v, col in enumerate(c.colors)]
    return "\n".join(out) + "\n"


def _parse_coloring(lines: _Lines) -> Coloring:
    n, k = _header(lines, "tsc", 3)
    if n < 0 or k < 1:
        raise FormatError("invalid coloring header")
    cols = []
    for v in range(n):
        lineno, toks = lines.next("color line")
        w, col = _ints(lineno, toks, "c", 2)
        if w != v:
            raise FormatError(f"line {lineno}: expected vertex {v}, found {w}")
        if not 0 <= col < k:
            raise FormatError(f"line {lineno}: color {col} outside 0..{k - 1}")
        cols.append(col)
    return Coloring(tuple(cols), k)


def loads_coloring(text: str) -> Coloring:
    lines = _Lines(text)
    c = _parse_coloring(lines)
    if lines.rest():
        raise FormatError("trailing content after coloring")
    return c


def dumps_certificate(cert: SwitchCertificate) -> str:
    out = [f"tscert 1 {cert.base_kind} {cert.r} {len(cert.moves)}"]
    out.append(dumps_graph(cert.start_graph).rstrip("\n"))
    out.append(dumps_coloring(cert.coloring).rstrip("\n"))
    if cert.bipartition is not None:
        out.append(f"tsb 1 {len(cert.bipartition.side)}")
        out += [f"b {v} {s}" for v, s in enumerate(cert.bipartition.side)]
    out += [f"s {m.u1} {m.v1} {m.u2} {m.v2}" for m in cert.moves]
    return "\n".join(out) + "\n"


def loads_certificate(text: str) -> SwitchCertificate:
    lines = _Lines(text)
    lineno, toks = lines.next("'tscert' header")
    if len(toks) != 5 or toks[0] != "tscert" or toks[1] != "1":
        raise FormatError(f"line {lineno}: expected 'tscert 1 <base_kind> <r> <moves>'")
    kind = toks[2]
    if kind not in ("CliqueUnion", "BrUnion"):
        raise FormatError(f"line {lineno}: unknown base kind {kind!r}")
    try:
        r, count = int(toks[3]), int(toks[4])
    except ValueError:
        raise FormatError(f"line {lineno}: non-integer field") from None
    g = _parse_graph(lines)
    c = _parse_coloring(lines)
    if len(c) != g.n:
        raise FormatError("coloring and start graph sizes differ")
    b = None
    if kind == "BrUnion":
        (n,) = _header(lines, "tsb", 2)
        if n != g.n:
            raise FormatError("bipartition and start graph sizes differ")
        side = []
        for v in range(n):
            ln, tk = lines.next("side line")
            w, s = _ints(ln, tk, "b", 2)
            if w != v or s not in (0, 1):
                raise FormatError(f"line {ln}: bad side entry")
            side.append(s)
        b = Bipartition(tuple(side))
    moves = []
    for ln, tk in lines.rest():
        moves.append(SwitchMove(*_ints(ln, tk, "s", 4)))
    if len(moves) != count:
        raise FormatError(f"header announces {count} moves, found {len(moves)}")
    return SwitchCertificate(kind, r, g, c, tuple(moves), b)


def read_graph(path: str | Path) -> Graph:
    return loads_graph(Path(path).read_text(encoding="utf-8"))


def write_graph(path: str | Path, g: Graph) -> None:
    Path(path).write_text(dumps_graph(g), encoding="utf-8")


def read_coloring(path: str | Path) -> Coloring:
    return loads_coloring(Path(path).read_text(encoding="utf-8"))


def write_coloring(path: str | Path, c: Coloring) -> None:
    Path(path).write_text(dumps_coloring(c), encoding="utf-8")


def read_certificate(path: str | Path) -> SwitchCertificate:
    return loads_certificate(Path(path).read_text(encoding="utf-8"))


def write_certificate(path: str | Path, cert: SwitchCertificate) -> None:
    Path(path).write_text(dumps_certificate(cert), encoding="utf-8")
