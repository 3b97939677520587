"""Text formats.  All external vertex numbers are 1-based.

Edge list::

    # comment
    n m
    u v        (m lines)

DOT output is a plain ``digraph`` with numeric node ids and the vertex
labels as ``label`` attributes; :func:`parse_dot` reads that output back.
"""

from __future__ import annotations

import json
import re
from pathlib import Path
from typing import Iterable, Sequence

from .digraph import Digraph, DigraphError, VertexSet, build_digraph


class ParseError(DigraphError):
    def __init__(self, message: str, line: int | None = None):
        super().__init__(f"line {line}: {message}" if line is not None else message)
        self.line = line


def parse_edge_list(text: str) -> Digraph:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            rows.append((lineno, body.split()))
    if not rows:
        raise ParseError("missing 'n m' header", 1)
    lineno, header = rows[0]
    if len(header) != 2:
        raise ParseError("header must be 'n m'", lineno)
    try:
        n, m = (int(tok) for tok in header)
    except ValueError:
        raise ParseError("header must hold two integers", lineno) from None
    if len(rows) - 1 != m:
        raise ParseError(f"header announces {m} arcs, found {len(rows) - 1}", rows[-1][0])
    arcs = []
    for lineno, toks in rows[1:]:
        if len(toks) != 2:
            raise ParseError("arc line must be 'u v'", lineno)
        try:
            u, v = int(toks[0]), int(toks[1])
        except ValueError:
            raise ParseError("arc endpoints must be integers", lineno) from None
        if not (1 <= u <= n and 1 <= v <= n):
            raise ParseError(f"vertex out of range 1..{n}", lineno)
        arcs.append((u - 1, v - 1))
    return build_digraph(n, arcs)


def read_edge_list(path: str | Path) -> Digraph:
    return parse_edge_list(Path(path).read_text())


def format_edge_list(D: Digraph) -> str:
    lines = [f"{D.n} {len(D.arcs)}"]
    lines += [f"{u + 1} {v + 1}" for u, v in D.arcs]
    return "\n".join(lines) + "\n"


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(D: Digraph, name: str = "D") -> str:
    lines = [f"digraph {name} {{"]
    for v in range(D.n):
        lines.append(f"  {v + 1} [label={_quote(D.label(v))}];")
    for u, v in D.arcs:
        lines.append(f"  {u + 1} -> {v + 1};")
    lines.append("}")
    return "\n".join(lines) + "\n"


_NODE = re.compile(r'^\s*(\d+)\s*\[label="((?:[^"\\]|\\.)*)"\];\s*$')
_ARC = re.compile(r"^\s*(\d+)\s*->\s*(\d+)\s*;\s*$")


def parse_dot(text: str) -> Digraph:
    """Read back the output of :func:`to_dot`."""
    labels: dict[int, str] = {}
    arcs = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if (m := _ARC.match(line)) is not None:
            arcs.append((int(m.group(1)) - 1, int(m.group(2)) - 1))
        elif (m := _NODE.match(line)) is not None:
            labels[int(m.group(1)) - 1] = re.sub(r"\\(.)", r"\1", m.group(2))
        elif line.strip() not in ("", "}") and not line.lstrip().startswith("digraph"):
            raise ParseError("unrecognised DOT statement", lineno)
    n = max([*labels, *(w for a in arcs for w in a)], default=-1) + 1
    lab = [labels.get(v, str(v + 1)) for v in range(n)]
    return build_digraph(n, arcs, lab)


def family_to_json(family: Iterable[VertexSet]) -> list[list[int]]:
    return [[v + 1 for v in s] for s in family]


def labeling_to_json(g: Sequence[int]) -> dict[str, int]:
    return {str(v + 1): int(t) for v, t in enumerate(g)}


def labeling_from_json(data: dict, n: int) -> tuple[int, ...]:
    g = [-1] * n
    for key, value in data.items():
        g[int(key) - 1] = int(value)
    if min(g, default=0) < 0:
        raise ParseError("labelling must cover every vertex")
    return tuple(g)


def digraph_to_json(D: Digraph) -> dict:
    return {"n": D.n, "arcs": [[u + 1, v + 1] for u, v in D.arcs], "labels": [D.label(v) for v in range(D.n)]}


def digraph_from_json(data: dict) -> Digraph:
    return build_digraph(data["n"], [(u - 1, v - 1) for u, v in data["arcs"]], data.get("labels"))


def dumps(obj) -> str:
    """Deterministic JSON: sorted keys, no floats beyond what callers pass."""
    return json.dumps(obj, sort_keys=True, indent=2)
