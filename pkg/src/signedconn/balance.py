"""Balance testing, Harary bipartitions, balancing edges and vertices."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import NamedTuple, Optional

from . import _cycles
from .core import SignedGraph, connected_components, is_connected
from .errors import PreconditionError


def component_balance(g: SignedGraph) -> tuple[list[frozenset[int]], list[bool]]:
    """Connected components plus a balance flag per component.

    A component is balanced iff a switching potential exists on it: a +/-1
    vertex labelling under which every edge sign equals the product of its
    endpoint labels.  One BFS per component finds the labelling or a
    conflicting edge; a negative loop always conflicts.
    """
    pot = [0] * g.n
    comps: list[frozenset[int]] = []
    flags: list[bool] = []
    seen = [False] * g.n
    for root in range(g.n):
        if seen[root]:
            continue
        seen[root] = True
        pot[root] = 1
        comp = [root]
        balanced = True
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for e in g.adjacency[v]:
                w = e.other(v)
                want = pot[v] * e.sign
                if not seen[w]:
                    seen[w] = True
                    pot[w] = want
                    comp.append(w)
                    queue.append(w)
                elif pot[w] != want:
                    balanced = False
        comps.append(frozenset(comp))
        flags.append(balanced)
    return comps, flags


def is_balanced(g: SignedGraph) -> bool:
    """True iff every cycle is positive; a graph with no cycles is balanced."""
    return all(component_balance(g)[1])


def _potentials(g: SignedGraph) -> Optional[list[int]]:
    """Per-vertex switching potential making all edges positive, or None.

    The potential is +1 at the smallest vertex of each component.  Exists iff
    the graph is balanced.
    """
    pot: list[int] = [0] * g.n
    for comp in connected_components(g):
        root = min(comp)
        pot[root] = +1
        stack = [root]
        while stack:
            v = stack.pop()
            for e in g.adjacency[v]:
                w = e.other(v)
                want = pot[v] * e.sign
                if pot[w] == 0:
                    pot[w] = want
                    stack.append(w)
                elif pot[w] != want:
                    return None
    # a negative loop defeats any potential
    for e in g.edges:
        if e.u == e.v and e.sign == -1:
            return None
    return pot


@dataclass(frozen=True)
class HararyBipartition:
    """Per connected component, the vertex set to switch so that every edge of
    the component becomes positive.  Canonical form: the switched side never
    contains the component's smallest vertex."""

    per_component: tuple[frozenset[int], ...]

    @property
    def switched(self) -> frozenset[int]:
        out: set[int] = set()
        for w in self.per_component:
            out |= w
        return frozenset(out)


def harary_bipartition(g: SignedGraph) -> Optional[HararyBipartition]:
    """The canonical bipartition if g is balanced, else None."""
    pot = _potentials(g)
    if pot is None:
        return None
    parts = []
    for comp in connected_components(g):
        parts.append(frozenset(v for v in comp if pot[v] == -1))
    return HararyBipartition(tuple(parts))


def balancing_edges(g: SignedGraph) -> frozenset[int]:
    """Edges of unbalanced components whose deletion balances the component."""
    comps, flags = component_balance(g)
    out = set()
    for comp, balanced in zip(comps, flags):
        if balanced:
            continue
        comp_edges = [e.id for e in g.edges if e.u in comp]
        for i, eid in enumerate(comp_edges):
            rest = comp_edges[:i] + comp_edges[i + 1 :]
            if is_balanced(g.subgraph_of_edges(rest)):
                out.add(eid)
    return frozenset(out)


def balancing_vertices(g: SignedGraph) -> frozenset[int]:
    """Vertices of unbalanced components whose deletion (with incident edges)
    leaves that component balanced."""
    comps, flags = component_balance(g)
    out = set()
    for comp, balanced in zip(comps, flags):
        if balanced:
            continue
        comp_edges = [e.id for e in g.edges if e.u in comp]
        for x in comp:
            rest = [eid for eid in comp_edges if x not in (g.edges[eid].u, g.edges[eid].v)]
            if is_balanced(g.subgraph_of_edges(rest)):
                out.add(x)
    return frozenset(out)


class BalancingEdgeReport(NamedTuple):
    """The five equivalent characterizations of a balancing edge, evaluated
    independently of each other."""

    deletion_balances: bool
    in_every_negative_cycle: bool
    in_every_negative_no_positive: bool
    chain_sign_differs: bool
    switches_to_lone_negative: bool


def check_balancing_edge_equivalences(g: SignedGraph, eid: int) -> BalancingEdgeReport:
    """Evaluate the five balancing-edge conditions on a connected unbalanced
    graph; callers assert they all agree."""
    if not is_connected(g) or is_balanced(g):
        raise PreconditionError("requires a connected, unbalanced graph")
    e = g.edge(eid)

    without = g.delete_edges([eid])
    cond1 = is_balanced(without)

    cycles = _cycles.elementary_cycles(g)
    neg = [c for c, s in cycles if s == -1]
    pos = [c for c, s in cycles if s == +1]
    cond2 = all(eid in c for c in neg)
    cond3 = cond2 and not any(eid in c for c in pos)

    # isthmus test: deleting e must not disconnect
    cond4 = False
    if is_connected(without) and is_balanced(without):
        pot = _potentials(without)
        assert pot is not None
        chain_sign = pot[e.u] * pot[e.v]  # all chains agree in a balanced graph
        cond4 = e.sign != chain_sign

    cond5 = False
    if is_balanced(without):
        pot = _potentials(without)
        assert pot is not None
        same_side = any(e.u in comp and e.v in comp for comp in connected_components(without))
        if same_side:
            # sign of e after switching everything else positive
            cond5 = e.sign * pot[e.u] * pot[e.v] == -1
        else:
            # endpoints in different components: flip one side freely
            cond5 = True
    return BalancingEdgeReport(cond1, cond2, cond3, cond4, cond5)
