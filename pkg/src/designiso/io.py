"""Design files and DIMACS graph files.

Design file::

    # comments start with '#'
    design <t> <v> <k> <lambda>
    <b>
    <k space-separated 0-based points>   (b lines)

Graphs use the DIMACS undirected format: ``c`` comment lines, one
``p edge <n> <m>`` line and ``e <u> <v>`` lines with 1-based endpoints.
"""
from __future__ import annotations

import warnings
from pathlib import Path

from .core import Design, Params
from .linegraph import Graph


class FormatError(ValueError):
    def __init__(self, msg: str, lineno: int | None = None):
        super().__init__(f"line {lineno}: {msg}" if lineno is not None else msg)
        self.lineno = lineno


def _lines(text: str, comment: str):
    for n, raw in enumerate(text.splitlines(), 1):
        line = raw.split(comment, 1)[0].strip() if comment == "#" else raw.strip()
        if line:
            yield n, line


def _ints(tokens, lineno, what):
    try:
        return [int(x) for x in tokens]
    except ValueError:
        raise FormatError(f"malformed {what}: expected integers", lineno) from None


def parse_design(text: str) -> Design:
    lines = list(_lines(text, "#"))
    if not lines:
        raise FormatError("empty design file")
    n, head = lines[0]
    tokens = head.split()
    if len(tokens) != 5 or tokens[0] != "design":
        raise FormatError("malformed header, expected 'design <t> <v> <k> <lambda>'", n)
    try:
        params = Params(*_ints(tokens[1:], n, "header"))
    except ValueError as exc:
        if isinstance(exc, FormatError):
            raise
        raise FormatError(f"malformed header: {exc}", n) from None
    if len(lines) < 2:
        raise FormatError("missing block count line")
    n, count = lines[1]
    b = _ints(count.split(), n, "block count")
    if len(b) != 1 or b[0] < 0:
        raise FormatError("malformed block count", n)
    b = b[0]
    body = lines[2:]
    if len(body) != b:
        where = body[b][0] if len(body) > b else (lines[-1][0])
        raise FormatError(f"block count mismatch: header says {b}, found {len(body)} block lines", where)
    seen: dict[tuple[int, ...], int] = {}
    blocks = []
    for n, line in body:
        pts = _ints(line.split(), n, "block")
        if len(set(pts)) != len(pts):
            raise FormatError(f"repeated point in block {pts}", n)
        if len(pts) != params.k:
            raise FormatError(f"wrong block size {len(pts)}, expected {params.k}", n)
        if any(not 0 <= x < params.v for x in pts):
            raise FormatError(f"point index out of range [0, {params.v}) in {pts}", n)
        B = tuple(sorted(pts))
        if B in seen:
            raise FormatError(f"duplicate block {B} (first on line {seen[B]})", n)
        seen[B] = n
        blocks.append(B)
    return Design(params, sorted(blocks))


def emit_design(design: Design) -> str:
    p = design.params
    out = [f"design {p.t} {p.v} {p.k} {p.lam}", str(design.b)]
    out += [" ".join(map(str, B)) for B in sorted(design.blocks)]
    return "\n".join(out) + "\n"


def parse_graph(text: str) -> Graph:
    n = None
    declared = 0
    edges = set()
    count = 0
    for lineno, line in _lines(text, "c"):
        tokens = line.split()
        if tokens[0] == "c":
            continue
        if tokens[0] == "p":
            if n is not None:
                raise FormatError("second p-line", lineno)
            if len(tokens) != 4 or tokens[1] not in ("edge", "col"):
                raise FormatError("malformed p-line, expected 'p edge <n> <m>'", lineno)
            n, declared = _ints(tokens[2:], lineno, "p-line")
            continue
        if tokens[0] == "e":
            if n is None:
                raise FormatError("edge before the p-line", lineno)
            if len(tokens) != 3:
                raise FormatError("malformed edge line", lineno)
            u, w = _ints(tokens[1:], lineno, "edge")
            if not (1 <= u <= n and 1 <= w <= n):
                raise FormatError(f"endpoint out of range [1, {n}]", lineno)
            if u == w:
                raise FormatError(f"self-loop at vertex {u}", lineno)
            e = (min(u, w) - 1, max(u, w) - 1)
            if e in edges:
                warnings.warn(f"line {lineno}: duplicate edge {u} {w} ignored", stacklevel=2)
            edges.add(e)
            count += 1
            continue
        raise FormatError(f"unknown line type {tokens[0]!r}", lineno)
    if n is None:
        raise FormatError("missing p-line")
    if count != declared:
        warnings.warn(f"p-line declares {declared} edges, found {count}", stacklevel=2)
    return Graph.from_edges(n, sorted(edges))


def emit_graph(graph: Graph) -> str:
    out = [f"p edge {graph.n} {graph.num_edges}"]
    out += [f"e {i + 1} {j + 1}" for i, j in graph.edges()]
    return "\n".join(out) + "\n"


def read_design(path) -> Design:
    return parse_design(Path(path).read_text())


def write_design(design: Design, path) -> None:
    Path(path).write_text(emit_design(design))


def read_graph(path) -> Graph:
    return parse_graph(Path(path).read_text())


def write_graph(graph: Graph, path) -> None:
    Path(path).write_text(emit_graph(graph))
