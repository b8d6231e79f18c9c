"""Graph file parsing/emission and the named example graphs.

File format::

    signed-graph n=<int>
    <u> <v> <+|->
    ...

Comment lines start with '#'; blank lines are ignored.  Edge ids follow line
order, repeated lines are parallel edges, u = v is a loop.
"""

from __future__ import annotations

from .core import SignedGraph
from .errors import GraphSyntaxError, VertexOutOfRange

_HEADER = "signed-graph n="


def parse(text: str) -> SignedGraph:
    """Parse a graph file; errors carry the 1-based line number."""
    n = None
    triples = []
    for lineno, rawline in enumerate(text.splitlines(), start=1):
        line = rawline.strip()
        if not line or line.startswith("#"):
            continue
        if n is None:
            if not line.startswith(_HEADER):
                raise GraphSyntaxError(lineno, f"expected header '{_HEADER}<int>'")
            try:
                n = int(line[len(_HEADER):])
            except ValueError:
                raise GraphSyntaxError(lineno, f"bad vertex count in {line!r}") from None
            if n < 0:
                raise GraphSyntaxError(lineno, "vertex count must be nonnegative")
            continue
        parts = line.split()
        if len(parts) != 3 or parts[2] not in ("+", "-"):
            raise GraphSyntaxError(lineno, f"expected '<u> <v> <+|->', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphSyntaxError(lineno, f"bad vertex in {line!r}") from None
        if not (0 <= u < n and 0 <= v < n):
            err = VertexOutOfRange(f"line {lineno}: vertex out of range in {line!r}")
            err.line = lineno
            raise err
        triples.append((u, v, +1 if parts[2] == "+" else -1))
    if n is None:
        raise GraphSyntaxError(1, "empty file, expected header")
    return SignedGraph.from_triples(n, triples)


def emit(g: SignedGraph) -> str:
    """Canonical text form; parse(emit(g)) reproduces g exactly."""
    lines = [f"{_HEADER}{g.n}"]
    for e in g.edges:
        lines.append(f"{e.u} {e.v} {'+' if e.sign == +1 else '-'}")
    return "\n".join(lines) + "\n"


_FIXTURE_TRIPLES: dict[str, tuple[int, list[tuple[int, int, int]]]] = {
    # single positive / negative edge
    "P2": (2, [(0, 1, +1)]),
    "N2": (2, [(0, 1, -1)]),
    # all-positive and one-negative triangles
    "T+": (3, [(0, 1, +1), (1, 2, +1), (2, 0, +1)]),
    "T-": (3, [(0, 1, +1), (1, 2, +1), (2, 0, -1)]),
    # one vertex with a negative loop
    "NEGLOOP": (1, [(0, 0, -1)]),
    # a digon of opposite signs: the smallest necklace
    "NECK2": (2, [(0, 1, +1), (0, 1, -1)]),
    # two negative triangles sharing vertex 0
    "TIGHT": (5, [(0, 1, +1), (1, 2, +1), (2, 0, -1), (0, 3, +1), (3, 4, +1), (4, 0, -1)]),
    # two disjoint negative triangles joined by a bridge
    "LOOSE": (6, [(0, 1, +1), (1, 2, +1), (2, 0, -1), (3, 4, +1), (4, 5, +1), (5, 3, -1), (0, 3, +1)]),
    # three chains between 0 and 1, one carrying a negative edge
    "THETA": (4, [(0, 1, +1), (0, 2, +1), (2, 1, +1), (0, 3, +1), (3, 1, -1)]),
    # K4 with a single negative edge
    "UK4": (4, [(0, 1, -1), (0, 2, +1), (0, 3, +1), (1, 2, +1), (1, 3, +1), (2, 3, +1)]),
    # two negative triangles joined by two vertex-disjoint positive edges
    "DISJB": (6, [(0, 1, +1), (1, 2, +1), (2, 0, -1), (3, 4, +1), (4, 5, +1), (5, 3, -1), (0, 3, +1), (1, 4, +1)]),
    # all-positive even and odd cycles
    "C4": (4, [(0, 1, +1), (1, 2, +1), (2, 3, +1), (3, 0, +1)]),
    "C5": (5, [(0, 1, +1), (1, 2, +1), (2, 3, +1), (3, 4, +1), (4, 0, +1)]),
}

FIXTURE_NAMES = tuple(_FIXTURE_TRIPLES)


def fixture(name: str) -> SignedGraph:
    n, triples = _FIXTURE_TRIPLES[name]
    return SignedGraph.from_triples(n, triples)


def fixtures() -> dict[str, SignedGraph]:
    return {name: fixture(name) for name in FIXTURE_NAMES}
