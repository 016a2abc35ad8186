"""Plain-text hypergraph format.

::

    # comment
    v 1 2 7          declare vertices (optional)
    e 1 2 3          one edge occurrence; repeats add multiplicity
    e*3 4 5          edge {4, 5} with multiplicity 3

Tokens matching ``[1-9][0-9]*`` are integers, anything else is a string.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field

from .core import Hypergraph, make_part
from .errors import InvalidInputError, ParseError

_INT = re.compile(r"[1-9][0-9]*\Z")
_MULT = re.compile(r"e\*([0-9]+)\Z")


@dataclass(frozen=True)
class HGDocument:
    hypergraph: Hypergraph
    edge_lines: dict = field(default_factory=dict)  # part -> first line declaring it
    vertex_lines: dict = field(default_factory=dict)


def _token(t: str):
    return int(t) if _INT.match(t) else t


def parse_hypergraph(text: str) -> HGDocument:
    mult: dict = {}
    vertices: list = []
    edge_lines: dict = {}
    vertex_lines: dict = {}
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        head, *rest = line.split()
        toks = [_token(t) for t in rest]
        if head == "v":
            if not toks:
                raise ParseError("'v' needs at least one vertex", no)
            for t in toks:
                vertex_lines.setdefault(t, no)
            vertices.extend(toks)
            continue
        if head == "e":
            m = 1
        else:
            mm = _MULT.match(head)
            if not mm:
                raise ParseError(f"unknown directive {head!r}", no)
            m = int(mm.group(1))
            if m < 1:
                raise ParseError("multiplicity must be at least 1", no)
        if not toks:
            raise ParseError("an edge needs at least one vertex", no)
        if len(set(toks)) != len(toks):
            dup = next(t for i, t in enumerate(toks) if t in toks[:i])
            raise ParseError(f"vertex {dup} repeated within one edge", no)
        part = make_part(toks)
        mult[part] = mult.get(part, 0) + m
        edge_lines.setdefault(part, no)
        for t in toks:
            vertex_lines.setdefault(t, no)
    if not mult and not vertices:
        raise ParseError("no vertices or edges")
    return HGDocument(Hypergraph(mult, vertices), edge_lines, vertex_lines)


def _check_emittable(v):
    if isinstance(v, str) and (not v or _INT.match(v) or v.startswith("#") or any(c.isspace() for c in v)):
        raise InvalidInputError(f"vertex {v!r} cannot be written in the text format")


def emit_hypergraph(H: Hypergraph) -> str:
    for v in H.vertices:
        _check_emittable(v)
    lines = ["v " + " ".join(map(str, H.vertices))]
    for e, m in H.edges:
        head = "e" if m == 1 else f"e*{m}"
        lines.append(head + " " + " ".join(map(str, e)))
    return "\n".join(lines) + "\n"
