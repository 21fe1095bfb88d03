"""Reading and writing posets, embeddings and colorings.

Text format, one statement per line::

    # comment
    n 5                 (optional point count)
    label 0 z           (optional label)
    0 < 1               (relation; redundant pairs are reduced)

Relation endpoints are indices, or non-numeric labels.  JSON mirrors
it as ``{"n": 5, "covers": [[0, 1], ...], "labels": [...]}``.
"""
from __future__ import annotations

import json
import re
from pathlib import Path
from typing import Optional

from .colorings import Embedding
from .errors import ParseError, PosetError
from .poset import Poset
from .symmetry import Coloring

_REL = re.compile(r"^(\S+)\s*<\s*(\S+)$")


def parse_text(text: str) -> Poset:
    n: Optional[int] = None
    labels: dict[int, str] = {}
    raw: list[tuple[str, str, int]] = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        words = line.split()
        if words[0] == "n" and len(words) == 2:
            try:
                n = int(words[1])
            except ValueError:
                raise ParseError(f"bad point count {words[1]!r}", lineno) from None
            continue
        if words[0] == "label":
            if len(words) != 3 or not words[1].isdigit():
                raise ParseError("expected 'label <index> <name>'", lineno)
            labels[int(words[1])] = words[2]
            continue
        m = _REL.match(line)
        if not m:
            raise ParseError(f"cannot parse {line!r}", lineno)
        raw.append((m.group(1), m.group(2), lineno))

    by_name = {name: i for i, name in labels.items()}

    def point(tok: str, lineno: int) -> int:
        if tok.isdigit():
            return int(tok)
        if tok in by_name:
            return by_name[tok]
        raise ParseError(f"unknown point {tok!r}", lineno)

    pairs = [(point(a, ln), point(b, ln), ln) for a, b, ln in raw]
    if n is None:
        n = 1 + max([max(a, b) for a, b, _ in pairs] + list(labels), default=-1)
    for a, b, ln in pairs:
        if not (0 <= a < n and 0 <= b < n):
            raise ParseError(f"point out of range for n={n}", ln)
    for i in labels:
        if i >= n:
            raise ParseError(f"label index {i} out of range for n={n}", None)
    names = None
    if labels:
        names = [labels.get(i, str(i)) for i in range(n)]
    try:
        return Poset(n, [(a, b) for a, b, _ in pairs], names)
    except PosetError as exc:
        raise ParseError(str(exc), None) from exc


def to_text(p: Poset) -> str:
    lines = [f"n {p.n}"]
    if p.labels is not None:
        lines += [f"label {i} {s}" for i, s in enumerate(p.labels)]
    lines += [f"{a} < {b}" for a, b in sorted(p.covers)]
    return "\n".join(lines) + "\n"


def parse_json(text: str) -> Poset:
    try:
        data = json.loads(text)
        return Poset(int(data["n"]), [tuple(e) for e in data.get("covers", [])], data.get("labels"))
    except (ValueError, KeyError, TypeError) as exc:
        raise ParseError(f"bad JSON poset: {exc}", None) from exc


def to_json(p: Poset) -> str:
    data = {"n": p.n, "covers": [list(e) for e in sorted(p.covers)]}
    if p.labels is not None:
        data["labels"] = list(p.labels)
    return json.dumps(data, indent=1) + "\n"


_PALETTE = ["white", "red", "lightblue", "palegreen", "gold", "plum", "orange", "cyan",
            "pink", "khaki", "gray", "salmon"]


def to_dot(p: Poset, c: Optional[Coloring] = None) -> str:
    """Hasse diagram drawn bottom-to-top with one row per rank."""
    out = ["digraph poset {", "  rankdir=BT;", "  node [shape=circle];"]
    for x in range(p.n):
        attrs = [f'label="{p.label(x)}"']
        if c is not None:
            attrs += ["style=filled", f'fillcolor="{_PALETTE[c[x] % len(_PALETTE)]}"',
                      f'tooltip="{c.name(c[x])}"']
        out.append(f"  {x} [{', '.join(attrs)}];")
    for level in p.rank_levels():
        out.append("  { rank=same; " + " ".join(map(str, level)) + " }")
    for a, b in sorted(p.covers):
        out.append(f"  {a} -> {b};")
    out.append("}")
    return "\n".join(out) + "\n"


def load_poset(path: str | Path) -> Poset:
    path = Path(path)
    text = path.read_text()
    return parse_json(text) if path.suffix == ".json" else parse_text(text)


def dump_poset(p: Poset, path: str | Path, c: Optional[Coloring] = None) -> None:
    path = Path(path)
    if path.suffix == ".json":
        path.write_text(to_json(p))
    elif path.suffix == ".dot":
        path.write_text(to_dot(p, c))
    else:
        path.write_text(to_text(p))


def parse_embedding(text: str) -> Embedding:
    rows: dict[int, tuple[int, ...]] = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        m = re.match(r"^rank\s+(\d+)\s*:(.*)$", line)
        if not m:
            raise ParseError("expected 'rank k: i j ...'", lineno)
        try:
            rows[int(m.group(1))] = tuple(int(t) for t in m.group(2).split())
        except ValueError:
            raise ParseError("embedding rows hold point indices", lineno) from None
    if sorted(rows) != list(range(len(rows))):
        raise ParseError("embedding ranks must be 0..h-1", None)
    return Embedding(tuple(rows[k] for k in range(len(rows))))


def embedding_text(emb: Embedding) -> str:
    return "".join(f"rank {k}: {' '.join(map(str, row))}\n" for k, row in enumerate(emb.order))


def coloring_json(c: Coloring) -> str:
    data = {"colors": list(c.colors)}
    if c.names is not None:
        data["names"] = list(c.names)
    return json.dumps(data) + "\n"


def parse_coloring(text: str) -> Coloring:
    data = json.loads(text)
    if isinstance(data, list):
        return Coloring(tuple(data))
    return Coloring(tuple(data["colors"]), tuple(data["names"]) if data.get("names") else None)
