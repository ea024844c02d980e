"""Graph file I/O: DIMACS .col, canonical JSON, and a debug DOT exporter.

The JSON writer is byte-stable: keys sorted, edges normalized (u < v) and
sorted, compact separators, one trailing newline. Golden-file tests rely
on this.
"""

from __future__ import annotations

import json
import os
from typing import Iterable

from .errors import ParseError, UsageError
from .graph import Graph, normalize_edge

FORMATS = ("dimacs", "json")


def parse_dimacs(text: str) -> Graph:
    """Parse DIMACS col format: "c" comments, one "p edge <n> <m>" line,
    then "e <u> <v>" lines with 1-based ids. Repeated edges are
    deduplicated; loops are rejected."""
    n = None
    edges: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        if fields[0] == "p":
            if n is not None:
                raise ParseError("duplicate problem line", lineno)
            if len(fields) != 4 or fields[1] != "edge":
                raise ParseError("problem line must be 'p edge <n> <m>'", lineno)
            try:
                n = int(fields[2])
                int(fields[3])
            except ValueError:
                raise ParseError("non-integer counts in problem line", lineno) from None
            if n < 0:
                raise ParseError("negative vertex count", lineno)
        elif fields[0] == "e":
            if n is None:
                raise ParseError("edge line before problem line", lineno)
            if len(fields) != 3:
                raise ParseError("edge line must be 'e <u> <v>'", lineno)
            try:
                u, v = int(fields[1]), int(fields[2])
            except ValueError:
                raise ParseError("non-integer vertex id", lineno) from None
            if u == v:
                raise ParseError(f"loop at vertex {u}", lineno)
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(f"vertex id out of range 1..{n}", lineno)
            edges.add(normalize_edge(u - 1, v - 1))
        else:
            raise ParseError(f"unknown line type {fields[0]!r}", lineno)
    if n is None:
        raise ParseError("missing problem line")
    return Graph(n, edges)


def write_dimacs(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.m}"]
    lines += [f"e {u + 1} {v + 1}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def parse_json_graph(text: str) -> Graph:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno) from None
    if not isinstance(obj, dict) or "n" not in obj or "edges" not in obj:
        raise ParseError('graph JSON must be {"n": int, "edges": [[u,v], ...]}')
    n = obj["n"]
    if not isinstance(n, int) or n < 0:
        raise ParseError('"n" must be a non-negative integer')
    edges = []
    for e in obj["edges"]:
        if not (isinstance(e, list) and len(e) == 2 and all(isinstance(x, int) for x in e)):
            raise ParseError(f"bad edge entry {e!r}")
        edges.append((e[0], e[1]))
    try:
        return Graph(n, edges)
    except UsageError as exc:
        raise ParseError(str(exc)) from None


def graph_to_json_obj(g: Graph) -> dict:
    return {"n": g.n, "edges": [[u, v] for u, v in g.edges()]}


def canonical_json(obj) -> str:
    """Canonical JSON encoding used for every output of the package."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def write_json_graph(g: Graph) -> str:
    return canonical_json(graph_to_json_obj(g))


def write_dot(g: Graph) -> str:
    """Debug-only DOT export; no layout logic."""
    lines = ["graph g {"]
    lines += [f"  {v};" for v in range(g.n) if not g.neighbors(v)]
    lines += [f"  {u} -- {v};" for u, v in g.edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"


def detect_format(path: str) -> str:
    ext = os.path.splitext(path)[1].lower()
    if ext in (".col", ".dimacs"):
        return "dimacs"
    if ext == ".json":
        return "json"
    raise UsageError(f"cannot detect format of {path!r}; pass an explicit format")


def load_graph(path: str, fmt: str | None = None) -> Graph:
    """Read a graph file; format auto-detected from the extension unless given."""
    fmt = fmt or detect_format(path)
    if fmt not in FORMATS:
        raise UsageError(f"unknown format {fmt!r}")
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    return parse_dimacs(text) if fmt == "dimacs" else parse_json_graph(text)


def dump_graph(g: Graph, path: str, fmt: str | None = None) -> None:
    fmt = fmt or detect_format(path)
    text = write_dimacs(g) if fmt == "dimacs" else write_json_graph(g)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def parse_graph_text(text: str, fmt: str) -> Graph:
    if fmt not in FORMATS:
        raise UsageError(f"unknown format {fmt!r}")
    return parse_dimacs(text) if fmt == "dimacs" else parse_json_graph(text)
