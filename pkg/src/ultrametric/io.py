"""Reading and writing spaces, and exporting representing trees.

Two space encodings are supported, both carrying weights as exact decimal
strings.

Matrix text::

    n 3
    a b c
    1
    2 2

Line one gives the point count, line two the labels, and line ``i + 2``
holds ``d(i, 0) ... d(i, i-1)``.  ``#`` starts a comment; blank lines are
ignored.

Structured JSON::

    {"format": "ultrametric-space", "version": 1,
     "labels": ["a", "b", "c"], "dist": [[], ["1"], ["2", "2"]]}
"""

from __future__ import annotations

import json
from pathlib import Path

from .core import UltrametricSpace, as_weight, format_weight
from .errors import ParseError
from .tree import RepresentingTree

FORMAT_NAME = "ultrametric-space"
FORMAT_VERSION = 1


def _weight(token: str, line: int | None):
    try:
        return as_weight(token)
    except (TypeError, ValueError) as exc:
        raise ParseError(f"bad weight {token!r}: {exc}", line) from None


def _assemble(labels: list[str], lower: list[list]) -> UltrametricSpace:
    n = len(labels)
    matrix = [[0] * n for _ in range(n)]
    for i, row in enumerate(lower):
        for j, w in enumerate(row):
            matrix[i][j] = matrix[j][i] = w
    return UltrametricSpace(labels, matrix)


def _parse_matrix(text: str) -> UltrametricSpace:
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            lines.append((lineno, body.split()))
    if not lines:
        raise ParseError("empty document")

    lineno, head = lines[0]
    if len(head) != 2 or head[0] != "n" or not head[1].isdigit():
        raise ParseError("first line must be 'n <count>'", lineno)
    n = int(head[1])
    if n < 1:
        raise ParseError("point count must be at least 1", lineno)
    if len(lines) < 2:
        raise ParseError("missing label line", lineno + 1)
    lineno, labels = lines[1]
    if len(labels) != n:
        raise ParseError(f"expected {n} labels, found {len(labels)}", lineno)

    rows = lines[2:]
    if len(rows) != n - 1:
        where = rows[n - 1][0] if len(rows) > n - 1 else None
        raise ParseError(f"expected {n - 1} distance rows, found {len(rows)}", where)
    lower: list[list] = [[]]
    for i, (lineno, tokens) in enumerate(rows, start=1):
        if len(tokens) != i:
            raise ParseError(f"row {i} must have {i} entries, found {len(tokens)}", lineno)
        lower.append([_weight(tok, lineno) for tok in tokens])
    return _assemble(labels, lower)


def _parse_json(text: str) -> UltrametricSpace:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno) from None
    if not isinstance(doc, dict):
        raise ParseError("document must be a JSON object")
    if doc.get("format", FORMAT_NAME) != FORMAT_NAME:
        raise ParseError(f"unknown format {doc.get('format')!r}")
    if doc.get("version", FORMAT_VERSION) != FORMAT_VERSION:
        raise ParseError(f"unsupported version {doc.get('version')!r}")
    labels = doc.get("labels")
    dist = doc.get("dist")
    if not isinstance(labels, list) or not all(isinstance(x, str) for x in labels):
        raise ParseError("'labels' must be a list of strings")
    if not isinstance(dist, list) or len(dist) != len(labels):
        raise ParseError("'dist' must have one row per label")
    lower = []
    for i, row in enumerate(dist):
        if not isinstance(row, list) or len(row) != i:
            raise ParseError(f"dist[{i}] must have {i} entries")
        if not all(isinstance(x, str) for x in row):
            raise ParseError(f"dist[{i}] entries must be decimal strings")
        lower.append([_weight(tok, None) for tok in row])
    return _assemble(labels, lower)


def parse_space(text: str) -> UltrametricSpace:
    """Parse either encoding; the JSON form is recognised by a leading ``{``."""
    if text.lstrip().startswith("{"):
        return _parse_json(text)
    return _parse_matrix(text)


def load_space(path: str | Path) -> UltrametricSpace:
    return parse_space(Path(path).read_text(encoding="utf-8"))


def serialize_space(space: UltrametricSpace, fmt: str = "matrix") -> str:
    n = space.n
    if fmt == "json":
        doc = {
            "format": FORMAT_NAME,
            "version": FORMAT_VERSION,
            "labels": list(space.labels),
            "dist": [[format_weight(space.d(i, j)) for j in range(i)] for i in range(n)],
        }
        return json.dumps(doc, indent=2) + "\n"
    if fmt != "matrix":
        raise ValueError(f"unknown format {fmt!r}")
    for name in space.labels:
        if not name or any(ch.isspace() for ch in name) or "#" in name:
            raise ValueError(f"label {name!r} cannot be written in matrix form; use json")
    out = [f"n {n}", " ".join(space.labels)]
    for i in range(1, n):
        out.append(" ".join(format_weight(space.d(i, j)) for j in range(i)))
    return "\n".join(out) + "\n"


def export_tree_dot(tree: RepresentingTree) -> str:
    """Graphviz text: internal nodes show their diameter, leaves their point name."""
    names = tree.space.labels
    out = ["graph representing_tree {", "  node [shape=circle];"]
    if len(tree.nodes) == 1:
        out.append(f'  n0 [label="0", tooltip={json.dumps(names[0])}];')
    else:
        for v in tree.nodes:
            if v.is_leaf:
                (p,) = v.ball
                out.append(f"  n{v.id} [label={json.dumps(names[p])}, shape=plaintext];")
            else:
                out.append(f'  n{v.id} [label="{format_weight(v.label)}"];')
        for v in tree.nodes:
            for c in v.children:
                out.append(f"  n{v.id} -- n{c};")
    out.append("}")
    return "\n".join(out) + "\n"


def tree_to_dict(tree: RepresentingTree) -> dict:
    names = tree.space.labels
    return {
        "root": tree.root,
        "nodes": [
            {
                "id": v.id,
                "label": format_weight(v.label),
                "ball": [names[p] for p in sorted(v.ball)],
                "children": list(v.children),
                "parent": v.parent,
                "level": v.level,
            }
            for v in tree.nodes
        ],
    }
