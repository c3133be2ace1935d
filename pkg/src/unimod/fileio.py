"""Plain-text and JSON input formats.

Matrix files: first non-comment line "N n", then N lines of n signed
integers; '#' starts a comment line.  A comment of the form
"# labels: a b c" carries row labels and survives a parse/render round
trip.  A JSON object {"rows": [[...]], "labels": [...]} is accepted
anywhere a matrix file is.  Edge-list files:
first line "m N" (vertices, edges), then N lines "tail head" with 1-indexed
vertex ids.
"""

from __future__ import annotations

import hashlib
import json

from .errors import PreconditionError
from .graphs import Multigraph


def sha256_hex(text):
    return hashlib.sha256(text.encode()).hexdigest()


def _data_lines(text):
    out = []
    for line in text.splitlines():
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        out.append(s)
    return out


def parse_matrix_text(text):
    """Parse a matrix file (text or JSON form) into (rows, labels)."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as e:
            raise PreconditionError(f"bad JSON matrix: {e}") from None
        if not isinstance(obj, dict) or "rows" not in obj:
            raise PreconditionError('JSON matrix needs a "rows" key')
        rows = obj["rows"]
        if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
            raise PreconditionError('"rows" must be a list of integer lists')
        labels = obj.get("labels")
        if labels is not None:
            if len(labels) != len(rows):
                raise PreconditionError("labels length must match the row count")
            labels = tuple(str(x) for x in labels)
        return [tuple(int(x) for x in r) for r in rows], labels
    labels = None
    for line in text.splitlines():
        s = line.strip()
        if s.startswith("#") and s[1:].lstrip().startswith("labels:"):
            labels = tuple(s[1:].lstrip()[len("labels:"):].split())
    lines = _data_lines(text)
    if not lines:
        raise PreconditionError("empty matrix file")
    head = lines[0].split()
    if len(head) != 2:
        raise PreconditionError('matrix header must be "N n"')
    try:
        nrows, ncols = int(head[0]), int(head[1])
    except ValueError:
        raise PreconditionError('matrix header must be "N n"') from None
    if len(lines) - 1 != nrows:
        raise PreconditionError(
            f"expected {nrows} matrix rows, found {len(lines) - 1}")
    rows = []
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != ncols:
            raise PreconditionError(
                f"expected {ncols} entries per row, got {len(parts)}: {line!r}")
        try:
            rows.append(tuple(int(x) for x in parts))
        except ValueError:
            raise PreconditionError(f"non-integer matrix entry in {line!r}") from None
    if labels is not None and len(labels) != nrows:
        raise PreconditionError("labels length must match the row count")
    return rows, labels


def render_matrix_text(rows, labels=None, comments=()):
    """Canonical text rendering of a matrix (labels become comments)."""
    rows = [tuple(r) for r in rows]
    ncols = len(rows[0]) if rows else 0
    lines = [f"# {c}" for c in comments]
    lines.append(f"{len(rows)} {ncols}")
    width = max((len(str(x)) for r in rows for x in r), default=1)
    for r in rows:
        lines.append(" ".join(str(x).rjust(width) for x in r))
    if labels is not None:
        lines.append("# labels: " + " ".join(labels))
    return "\n".join(lines) + "\n"


def render_matrix_json(rows, labels=None):
    obj = {"rows": [list(r) for r in rows]}
    if labels is not None:
        obj["labels"] = list(labels)
    return json.dumps(obj, indent=2) + "\n"


def parse_edges_text(text):
    """Parse an edge-list file into a Multigraph."""
    lines = _data_lines(text)
    if not lines:
        raise PreconditionError("empty edge file")
    head = lines[0].split()
    if len(head) != 2:
        raise PreconditionError('edge header must be "m N"')
    try:
        m, nedges = int(head[0]), int(head[1])
    except ValueError:
        raise PreconditionError('edge header must be "m N"') from None
    if len(lines) - 1 != nedges:
        raise PreconditionError(f"expected {nedges} edges, found {len(lines) - 1}")
    edges = []
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise PreconditionError(f'edge line must be "tail head": {line!r}')
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise PreconditionError(f"non-integer vertex id in {line!r}") from None
    return Multigraph.build(m, edges)


def render_edges_text(g, comments=()):
    lines = [f"# {c}" for c in comments]
    lines.append(f"{g.vertex_count} {g.edge_count}")
    for t, h in g.edges:
        lines.append(f"{t} {h}")
    return "\n".join(lines) + "\n"
