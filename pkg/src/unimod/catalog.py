"""Named example systems and graphs, constructible by string reference.

System entries are built through the ordinary verification pipeline (never
trusted blobs); graph entries return multigraphs for the graphic/cographic
constructors.  References look like "catalog:<name>" or
"catalog:<name>:<param>".
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CatalogError
from .graphs import Multigraph
from .systems import from_matrix

# The 10-form rank-5 system of Bixby and Seymour, in its classical 0/1
# presentation (every maximal minor is 0 or +-2) ...
_BIXBY_SEYMOUR_RAW = (
    (1, 1, 0, 0, 0),
    (0, 1, 1, 0, 0),
    (0, 0, 1, 1, 0),
    (0, 0, 0, 1, 1),
    (1, 0, 0, 0, 1),
    (1, 0, 1, 0, 0),
    (0, 1, 0, 1, 0),
    (0, 0, 1, 0, 1),
    (1, 0, 0, 1, 0),
    (0, 1, 0, 0, 1),
)

# ... and re-expanded over its first five rows, which makes it a standard
# totally unimodular presentation of the same system.
_BIXBY_SEYMOUR = (
    (1, 0, 0, 0, 0),
    (0, 1, 0, 0, 0),
    (0, 0, 1, 0, 0),
    (0, 0, 0, 1, 0),
    (0, 0, 0, 0, 1),
    (0, 0, 1, -1, 1),
    (1, 0, 0, 1, -1),
    (-1, 1, 0, 0, 1),
    (1, -1, 1, 0, 0),
    (0, 1, -1, 1, 0),
)


def _upsilon(m):
    if m < 1:
        raise CatalogError("upsilon needs m >= 1")
    return from_matrix([[1 if i == j else 0 for j in range(m)] for i in range(m)])


def _sigma(n):
    if n < 1:
        raise CatalogError("sigma needs N >= 1")
    return from_matrix([[1]] * n)


def _pair2(_):
    return from_matrix([[1, 0], [0, 1]])


def _triangle3(_):
    return from_matrix([[1, 0], [0, 1], [1, 1]])


def _theta(n):
    if n < 2:
        raise CatalogError("theta needs N >= 2 parallel edges")
    return Multigraph.build(2, [(1, 2)] * n)


def _cycle(n):
    if n < 3:
        raise CatalogError("cycle needs N >= 3")
    return Multigraph.build(n, [(i, i + 1) for i in range(1, n)] + [(n, 1)])


def _complete(n):
    if n < 2:
        raise CatalogError("complete needs N >= 2")
    return Multigraph.build(n, [(i, j) for i in range(1, n + 1)
                                for j in range(i + 1, n + 1)])


def _bixby_seymour_raw(_):
    return from_matrix(_BIXBY_SEYMOUR_RAW)


def _bixby_seymour(_):
    return from_matrix(_BIXBY_SEYMOUR)


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    kind: str          # "system" or "graph"
    takes_param: bool
    default_param: int | None
    description: str
    builder: object


_ENTRIES = [
    CatalogEntry("upsilon", "system", True, 1,
                 "m independent unit forms (the trivial one-form system, summed)",
                 _upsilon),
    CatalogEntry("sigma", "system", True, None,
                 "one form repeated N times", _sigma),
    CatalogEntry("pair2", "system", False, None,
                 "two independent forms in the plane", _pair2),
    CatalogEntry("triangle3", "system", False, None,
                 "three pairwise-independent forms in the plane", _triangle3),
    CatalogEntry("theta", "graph", True, None,
                 "two vertices joined by N parallel edges", _theta),
    CatalogEntry("cycle", "graph", True, None,
                 "the N-cycle graph", _cycle),
    CatalogEntry("complete", "graph", True, None,
                 "the complete graph on N vertices", _complete),
    CatalogEntry("bixby_seymour_raw", "system", False, None,
                 "Bixby-Seymour 10x5 system, 0/1 presentation (minors 0,+-2)",
                 _bixby_seymour_raw),
    CatalogEntry("bixby_seymour", "system", False, None,
                 "Bixby-Seymour 10x5 system, standard form", _bixby_seymour),
]

_BY_NAME = {e.name: e for e in _ENTRIES}


def entries():
    """All catalog entries, in fixed order."""
    return tuple(_ENTRIES)


def lookup(name):
    if name not in _BY_NAME:
        raise CatalogError(f"unknown catalog entry {name!r}")
    return _BY_NAME[name]


def make(name, param=None):
    """Build a catalog entry; param is an integer for parametric entries."""
    entry = lookup(name)
    if not entry.takes_param:
        if param is not None:
            raise CatalogError(f"catalog entry {name!r} takes no parameter")
        return entry.builder(None)
    if param is None:
        if entry.default_param is None:
            raise CatalogError(f"catalog entry {name!r} needs a parameter, "
                               f"e.g. catalog:{name}:4")
        param = entry.default_param
    try:
        param = int(param)
    except (TypeError, ValueError):
        raise CatalogError(f"catalog parameter {param!r} is not an integer") from None
    return entry.builder(param)


def parse_reference(ref):
    """Split 'catalog:<name>[:<param>]' into (name, param or None)."""
    parts = ref.split(":")
    if parts[0] != "catalog" or len(parts) not in (2, 3) or not parts[1]:
        raise CatalogError(f"malformed catalog reference {ref!r}")
    return parts[1], (parts[2] if len(parts) == 3 else None)
