"""Elementary cycle enumeration used by the analysis modules.

The brute-force oracle module has its own, deliberately different,
enumeration; keep the two independent.
"""

from __future__ import annotations

from typing import Iterable, Optional

from .core import SignedGraph, Sign
from .errors import CycleBudgetExceeded


def elementary_cycles(
    g: SignedGraph,
    edge_ids: Optional[Iterable[int]] = None,
    max_cycles: Optional[int] = None,
) -> list[tuple[frozenset[int], Sign]]:
    """All elementary cycles (as edge id sets with their sign).

    Includes loops and digons from parallel edges.  Each cycle is anchored at
    its smallest vertex, so every cycle is produced exactly once up to
    direction; directions are deduplicated.  Deterministic order: by
    (length, sorted edge ids).
    """
    allowed = set(range(g.m)) if edge_ids is None else set(edge_ids)
    adj: list[list] = [[] for _ in range(g.n)]
    loops: list[list] = [[] for _ in range(g.n)]
    for eid in allowed:
        e = g.edges[eid]
        if e.u == e.v:
            loops[e.u].append(e)
        else:
            adj[e.u].append(e)
            adj[e.v].append(e)

    found: dict[frozenset[int], Sign] = {}

    def note(edge_set: frozenset[int], sign: Sign) -> None:
        if edge_set not in found:
            found[edge_set] = sign
            if max_cycles is not None and len(found) > max_cycles:
                raise CycleBudgetExceeded(f"more than {max_cycles} cycles")

    for v in range(g.n):
        for e in loops[v]:
            note(frozenset([e.id]), e.sign)

    # DFS on paths whose vertices all exceed the anchor except the anchor
    # itself; closing back to the anchor yields a cycle.
    for root in range(g.n):
        stack = [(root, frozenset([root]), (), 1)]
        while stack:
            at, used_v, used_e, sign = stack.pop()
            for e in adj[at]:
                w = e.other(at)
                if e.id in used_e:
                    continue
                if w == root:
                    if len(used_e) >= 1:  # length >= 2: digon or longer
                        note(frozenset(used_e) | {e.id}, sign * e.sign)
                elif w > root and w not in used_v:
                    stack.append((w, used_v | {w}, used_e + (e.id,), sign * e.sign))

    return sorted(found.items(), key=lambda kv: (len(kv[0]), sorted(kv[0])))


def negative_cycles(
    g: SignedGraph,
    edge_ids: Optional[Iterable[int]] = None,
    max_cycles: Optional[int] = None,
) -> list[frozenset[int]]:
    return [c for c, s in elementary_cycles(g, edge_ids, max_cycles) if s == -1]
