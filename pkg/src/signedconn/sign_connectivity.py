"""Sign components, witnesses, sign isthmi/articulation vertices/blocks,
positive/negative connection, and parity connection."""

from __future__ import annotations

from dataclasses import dataclass, field

from .balance import component_balance, harary_bipartition
from .core import (
    SignedGraph,
    Walk,
    chain_with_sign,
    connected_components,
    is_connected,
    walk_sign,
)
from .errors import NotSignConnected, PreconditionError


@dataclass(frozen=True)
class ComponentPartition:
    """A partition into components of the given kind.

    For vertex kinds (graph, sign, positive, negative) the classes partition
    the vertex set.  For edge kinds (frame, lift) the classes partition the
    edge set and isolated vertices are listed separately.
    """

    kind: str
    classes: tuple[frozenset[int], ...]
    isolated_vertices: frozenset[int] = field(default=frozenset())

    @property
    def q(self) -> int:
        return len(self.classes) + len(self.isolated_vertices)

    def as_sets(self) -> frozenset[frozenset[int]]:
        return frozenset(self.classes)


def _sorted_classes(classes) -> tuple[frozenset[int], ...]:
    return tuple(sorted((frozenset(c) for c in classes), key=lambda c: min(c)))


def graph_components(g: SignedGraph) -> ComponentPartition:
    return ComponentPartition("graph", _sorted_classes(connected_components(g)))


def sign_components(g: SignedGraph) -> ComponentPartition:
    """Unbalanced connected components stay whole; vertices of balanced
    components are singletons."""
    comps, flags = component_balance(g)
    classes: list[frozenset[int]] = []
    for comp, balanced in zip(comps, flags):
        if balanced:
            classes.extend(frozenset([v]) for v in comp)
        else:
            classes.append(comp)
    return ComponentPartition("sign", _sorted_classes(classes))


def is_sign_connected(g: SignedGraph) -> bool:
    """True iff the graph is connected and unbalanced, or has one vertex."""
    if g.n == 1:
        return True
    comps, flags = component_balance(g)
    return len(comps) == 1 and not flags[0]


@dataclass(frozen=True)
class WitnessPair:
    positive: Walk
    negative: Walk


def witness_chains(g: SignedGraph, x: int, y: int) -> WitnessPair:
    """Explicit chains of both signs joining x and y (length at most 2n)."""
    g.check_vertex(x)
    g.check_vertex(y)
    pos = chain_with_sign(g, x, y, +1)
    neg = chain_with_sign(g, x, y, -1)
    if pos is None or neg is None:
        raise NotSignConnected(f"vertices {x} and {y} are not joined by both signs")
    assert walk_sign(g, pos) == +1 and walk_sign(g, neg) == -1
    return WitnessPair(pos, neg)


def _require_sign_connected(g: SignedGraph) -> None:
    if not is_sign_connected(g):
        raise PreconditionError("graph is not sign connected")


def sign_isthmi(g: SignedGraph) -> frozenset[int]:
    """Edges whose deletion destroys sign connection."""
    _require_sign_connected(g)
    if g.n == 1:
        raise PreconditionError("sign isthmi are defined for graphs with n > 1")
    return frozenset(
        e.id for e in g.edges if not is_sign_connected(g.delete_edges([e.id]))
    )


def sign_articulation_vertices(g: SignedGraph) -> frozenset[int]:
    """Vertices whose deletion destroys sign connection."""
    _require_sign_connected(g)
    if g.n == 1:
        return frozenset()  # deleting the only vertex leaves nothing to test
    return frozenset(
        x for x in range(g.n) if not is_sign_connected(g.delete_vertex(x))
    )


def is_sign_block(g: SignedGraph) -> bool:
    _require_sign_connected(g)
    return not sign_articulation_vertices(g)


def positive_components(g: SignedGraph) -> ComponentPartition:
    """Maximal sets in which every vertex pair is joined by a positive chain.

    Unbalanced components and all-positive components stay whole; a balanced
    component with a negative edge splits into its two bipartition sides.  A
    component with no edges counts as all positive.
    """
    comps, flags = component_balance(g)
    classes: list[frozenset[int]] = []
    for comp, balanced in zip(comps, flags):
        if not balanced:
            classes.append(comp)
            continue
        has_negative = any(e.sign == -1 for e in g.edges if e.u in comp)
        if not has_negative:
            classes.append(comp)
            continue
        bip = harary_bipartition(g.subgraph_of_edges(e.id for e in g.edges if e.u in comp))
        assert bip is not None
        switched = bip.switched & comp
        classes.append(comp - switched)
        classes.append(switched)
    return ComponentPartition("positive", _sorted_classes(classes))


def negative_components(g: SignedGraph) -> ComponentPartition:
    """Maximal sets in which vertex pairs are negatively connected, directly
    or through a common negatively-connected neighbor."""
    comps, flags = component_balance(g)
    classes: list[frozenset[int]] = []
    for comp, balanced in zip(comps, flags):
        has_negative = any(e.sign == -1 for e in g.edges if e.u in comp)
        if not balanced or has_negative:
            classes.append(comp)
        else:
            classes.extend(frozenset([v]) for v in comp)
    return ComponentPartition("negative", _sorted_classes(classes))


def all_negative(g: SignedGraph) -> SignedGraph:
    """The same underlying multigraph with every edge made negative."""
    return SignedGraph.from_triples(g.n, [(e.u, e.v, -1) for e in g.edges])


def is_parity_connected(g: SignedGraph) -> bool:
    """True iff every vertex pair is joined by walks of both parities.

    Signs on g are ignored; for a connected graph with n >= 2 this is
    equivalent to the underlying graph being non-bipartite.
    """
    return is_sign_connected(all_negative(g))
