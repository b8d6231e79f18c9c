"""Block-level structure: blocks, cores, unbalanced necklaces, contrabalanced
cactus recognition, theta detection, and hypercyclic-chain classification."""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Optional

from . import _cycles
from .balance import is_balanced
from .core import SignedGraph, Walk, connected_components
from .errors import NotABlock


@dataclass(frozen=True)
class Block:
    """A maximal subgraph with no articulation vertex.  A loop and an isolated
    vertex are blocks; a bridge is a two-vertex block."""

    edges: frozenset[int]
    vertices: frozenset[int]
    balanced: bool
    inner: bool
    component: int

    @property
    def is_cycle(self) -> bool:
        return len(self.edges) >= 1 and len(self.edges) == len(self.vertices)

    @property
    def is_bridge(self) -> bool:
        return len(self.edges) == 1 and len(self.vertices) == 2


@dataclass(frozen=True)
class Core:
    """Union of the inner blocks of one unbalanced connected component."""

    component: int
    edges: frozenset[int]
    necklace: Optional[tuple[frozenset[int], ...]]


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[Block, ...]
    articulation_vertices: frozenset[int]
    components: tuple[frozenset[int], ...]
    component_balanced: tuple[bool, ...]
    cores: tuple[Core, ...]

    def bridges(self) -> frozenset[int]:
        return frozenset(
            next(iter(b.edges)) for b in self.blocks if b.is_bridge
        )


def _biconnected_edge_groups(g: SignedGraph) -> list[list[int]]:
    """Edge id groups of the biconnected components (loops excluded)."""
    adj: list[list] = [[] for _ in range(g.n)]
    for e in g.edges:
        if e.u != e.v:
            adj[e.u].append(e)
            adj[e.v].append(e)

    disc = [-1] * g.n
    low = [0] * g.n
    groups: list[list[int]] = []
    timer = 0
    for root in range(g.n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        edge_stack: list[int] = []
        stack: list[list] = [[root, -1, iter(adj[root])]]
        while stack:
            v, via, it = stack[-1]
            advanced = False
            for e in it:
                if e.id == via:
                    continue
                w = e.other(v)
                if disc[w] == -1:
                    edge_stack.append(e.id)
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append([w, e.id, iter(adj[w])])
                    advanced = True
                    break
                elif disc[w] < disc[v]:
                    edge_stack.append(e.id)
                    if disc[w] < low[v]:
                        low[v] = disc[w]
                        stack[-1][0] = v  # no-op; keep frame mutable
            if advanced:
                continue
            stack.pop()
            if stack:
                u = stack[-1][0]
                if low[v] < low[u]:
                    low[u] = low[v]
                if low[v] >= disc[u]:
                    group = []
                    while True:
                        eid = edge_stack.pop()
                        group.append(eid)
                        if eid == via:
                            break
                    groups.append(group)
    return groups


@lru_cache(maxsize=8192)
def block_decomposition(g: SignedGraph) -> BlockDecomposition:
    comps = connected_components(g)
    comp_of = [0] * g.n
    for i, comp in enumerate(comps):
        for v in comp:
            comp_of[v] = i

    raw: list[tuple[frozenset[int], frozenset[int]]] = []
    for group in _biconnected_edge_groups(g):
        verts = set()
        for eid in group:
            verts.add(g.edges[eid].u)
            verts.add(g.edges[eid].v)
        raw.append((frozenset(group), frozenset(verts)))
    for e in g.edges:
        if e.u == e.v:
            raw.append((frozenset([e.id]), frozenset([e.u])))
    covered = set()
    for _, verts in raw:
        covered |= verts
    for v in range(g.n):
        if v not in covered:
            raw.append((frozenset(), frozenset([v])))
    raw.sort(key=lambda bv: (min(bv[1]), sorted(bv[0])))

    incidence: Counter = Counter()
    for _, verts in raw:
        for v in verts:
            incidence[v] += 1
    articulation = frozenset(v for v, k in incidence.items() if k >= 2)

    balanced_flags = [
        is_balanced(g.subgraph_of_edges(edges)) if edges else True
        for edges, _ in raw
    ]
    inner_flags = _inner_blocks(raw, balanced_flags, articulation)

    blocks = tuple(
        Block(edges, verts, bal, inner, comp_of[min(verts)])
        for (edges, verts), bal, inner in zip(raw, balanced_flags, inner_flags)
    )

    comp_balanced = tuple(
        all(b.balanced for b in blocks if b.component == i) for i in range(len(comps))
    )

    cores = []
    for i in range(len(comps)):
        if comp_balanced[i]:
            continue
        inner = [b for b in blocks if b.component == i and b.inner]
        edges: set[int] = set()
        for b in inner:
            edges |= b.edges
        necklace = None
        if len(inner) == 1:
            necklace = _necklace_constituents(g, inner[0])
        cores.append(Core(i, frozenset(edges), necklace))

    return BlockDecomposition(
        blocks, articulation, tuple(comps), comp_balanced, tuple(cores)
    )


def _inner_blocks(raw, balanced_flags, articulation) -> list[bool]:
    """A block is inner iff it is unbalanced or lies on a block-cut-tree path
    between two unbalanced blocks."""
    n_blocks = len(raw)
    # block-cut tree: nodes = blocks and articulation vertices
    nodes = list(range(n_blocks)) + [("v", a) for a in articulation]
    adj = {node: set() for node in nodes}
    for i, (_, verts) in enumerate(raw):
        for a in verts & articulation:
            adj[i].add(("v", a))
            adj[("v", a)].add(i)

    keep = {i for i in range(n_blocks) if not balanced_flags[i]}
    alive = set(nodes)
    degree = {node: len(adj[node]) for node in nodes}
    leaves = deque(node for node in nodes if degree[node] <= 1 and node not in keep)
    while leaves:
        node = leaves.popleft()
        if node not in alive:
            continue
        alive.discard(node)
        for nb in adj[node]:
            if nb in alive:
                degree[nb] -= 1
                if degree[nb] <= 1 and nb not in keep:
                    leaves.append(nb)
    return [i in alive for i in range(n_blocks)]


def _necklace_constituents(
    g: SignedGraph, block: Block
) -> Optional[tuple[frozenset[int], ...]]:
    """Finest decomposition of an unbalanced block into >= 2 balanced blocks
    glued in a ring, or None if the block is not such a necklace.

    The pieces are found as the connected components of the block's own frame
    matroid (via fundamental circuits of the rank function); a ring
    decomposition exists exactly when there are at least two pieces.
    """
    from . import matroid

    if block.balanced or not block.edges:
        return None
    order = sorted(block.edges)
    sub = g.subgraph_of_edges(order)
    classes = matroid.matroid_components_from_rank(
        list(range(len(order))), lambda s: matroid.frame_rank(sub, s)
    )
    if len(classes) < 2:
        return None
    constituents = [frozenset(order[i] for i in cls) for cls in classes]
    return _ring_order(g, constituents)


def _ring_order(
    g: SignedGraph, constituents: list[frozenset[int]]
) -> tuple[frozenset[int], ...]:
    """Order necklace constituents cyclically, starting at the one holding the
    smallest edge id and moving toward the smaller-id neighbor."""
    if len(constituents) == 2:
        return tuple(sorted(constituents, key=min))
    verts = []
    for c in constituents:
        vs: set[int] = set()
        for eid in c:
            vs.add(g.edges[eid].u)
            vs.add(g.edges[eid].v)
        verts.append(vs)
    k = len(constituents)
    nbrs: list[list[int]] = [[] for _ in range(k)]
    for i in range(k):
        for j in range(i + 1, k):
            if verts[i] & verts[j]:
                nbrs[i].append(j)
                nbrs[j].append(i)
    if any(len(nb) != 2 for nb in nbrs):
        return tuple(sorted(constituents, key=min))
    start = min(range(k), key=lambda i: min(constituents[i]))
    nxt = min(nbrs[start], key=lambda i: min(constituents[i]))
    order = [start, nxt]
    while len(order) < k:
        here = order[-1]
        prev = order[-2]
        step = nbrs[here][0] if nbrs[here][1] == prev else nbrs[here][1]
        order.append(step)
    return tuple(constituents[i] for i in order)


def detect_necklace(
    g: SignedGraph, block_edges: frozenset[int]
) -> Optional[tuple[frozenset[int], ...]]:
    """Constituents of the block, in ring order, if it is an unbalanced
    necklace of balanced blocks; None otherwise."""
    dec = block_decomposition(g)
    match = [b for b in dec.blocks if b.edges == frozenset(block_edges) and b.edges]
    if not match:
        raise NotABlock(f"{sorted(block_edges)} is not a block of the graph")
    return _necklace_constituents(g, match[0])


def is_cactus_forest(g: SignedGraph) -> bool:
    """True iff every block is a cycle (loops count), a bridge, or a vertex."""
    dec = block_decomposition(g)
    return all(len(b.edges) <= 1 or b.is_cycle for b in dec.blocks)


def is_contrabalanced(g: SignedGraph) -> bool:
    """True iff the graph has no positive cycle: it must be a cactus forest
    whose cycle blocks are all negative."""
    dec = block_decomposition(g)
    for b in dec.blocks:
        if not b.is_cycle:
            if len(b.edges) > 1:
                return False
            continue
        sign = 1
        for eid in b.edges:
            sign *= g.edges[eid].sign
        if sign == +1:
            return False
    return True


@dataclass(frozen=True)
class Theta:
    """Three internally disjoint chains sharing both endpoints."""

    endpoints: tuple[int, int]
    chains: tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]


def contains_theta(g: SignedGraph) -> Optional[Theta]:
    """A theta subgraph if one exists (the witness that g is not a cactus)."""
    dec = block_decomposition(g)
    for b in dec.blocks:
        if len(b.edges) > len(b.vertices):
            return _extract_theta(g, b)
    return None


def _extract_theta(g: SignedGraph, block: Block) -> Theta:
    cycles = _cycles.elementary_cycles(g, block.edges)
    cyc = cycles[0][0]
    vc = set()
    for eid in cyc:
        vc.add(g.edges[eid].u)
        vc.add(g.edges[eid].v)
    extra = block.edges - cyc

    ear: Optional[list[int]] = None
    ends: Optional[tuple[int, int]] = None
    for eid in sorted(extra):
        e = g.edges[eid]
        if e.u in vc and e.v in vc and e.u != e.v:
            ear = [eid]
            ends = (e.u, e.v)
            break
    if ear is None:
        adj: dict[int, list] = {}
        for eid in extra:
            e = g.edges[eid]
            adj.setdefault(e.u, []).append(e)
            adj.setdefault(e.v, []).append(e)
        for a in sorted(vc):
            parent: dict[int, tuple[int, int]] = {a: (-1, -1)}
            queue = deque([a])
            hit = None
            while queue and hit is None:
                v = queue.popleft()
                for e in adj.get(v, []):
                    w = e.other(v)
                    if w in parent:
                        continue
                    parent[w] = (v, e.id)
                    if w in vc and w != a:
                        hit = w
                        break
                    if w not in vc:
                        queue.append(w)
            if hit is not None:
                path = []
                v = hit
                while parent[v] != (-1, -1):
                    pv, eid = parent[v]
                    path.append(eid)
                    v = pv
                path.reverse()
                ear = path
                ends = (a, hit)
                break
    assert ear is not None and ends is not None, "2-connected block with extra edges must carry an ear"

    a, b = ends
    arc1, arc2 = _cycle_arcs(g, cyc, a, b)
    return Theta((a, b), (tuple(ear), tuple(arc1), tuple(arc2)))


def _cycle_arcs(g: SignedGraph, cyc: frozenset[int], a: int, b: int):
    """Split an elementary cycle into its two arcs between vertices a and b."""
    adj: dict[int, list] = {}
    for eid in cyc:
        e = g.edges[eid]
        adj.setdefault(e.u, []).append(e)
        adj.setdefault(e.v, []).append(e)
    first, second = adj[a][0], adj[a][1]
    arcs = []
    for start_edge in (first, second):
        arc = [start_edge.id]
        prev_v = a
        v = start_edge.other(a)
        while v != b:
            e1, e2 = adj[v]
            nxt = e2 if arc[-1] == e1.id else e1
            arc.append(nxt.id)
            v = nxt.other(v)
        arcs.append(arc)
    return arcs[0], arcs[1]


class HypercyclicKind(str, Enum):
    DISJOINT_ARMS = "disjoint-arms"
    SHARED_ARM = "shared-arm"
    NOT_HYPERCYCLIC = "not-hypercyclic"


@dataclass(frozen=True)
class HypercyclicVerdict:
    kind: HypercyclicKind
    cycle: Optional[frozenset[int]] = None
    arm_from_start: frozenset[int] = frozenset()
    arm_from_end: frozenset[int] = frozenset()
    shared_segment: frozenset[int] = frozenset()


_NOT = HypercyclicVerdict(HypercyclicKind.NOT_HYPERCYCLIC)


def classify_hypercyclic(g: SignedGraph, w: Walk) -> HypercyclicVerdict:
    """Decide whether the walk is a minimal chain whose graph contains a
    (necessarily unique) negative cycle, and report its shape.

    Shape requirements: a single negative cycle, arms from both walk
    endpoints meeting the cycle at one common vertex, cycle edges traversed
    once, shared arm edges twice, other arm edges once.
    """
    seq = w.vertex_sequence(g)  # raises InvalidWalk on bad input
    x, y = w.start, seq[-1]
    used = Counter(eid for eid, _ in w.steps)
    support = set(used)

    cycles = _cycles.elementary_cycles(g, support)
    if len(cycles) != 1 or cycles[0][1] != -1:
        return _NOT
    cyc = cycles[0][0]
    if any(used[eid] != 1 for eid in cyc):
        return _NOT
    vc = set()
    for eid in cyc:
        vc.add(g.edges[eid].u)
        vc.add(g.edges[eid].v)

    rest = support - cyc
    if not rest:
        if x != y or x not in vc:
            return _NOT
        return HypercyclicVerdict(HypercyclicKind.DISJOINT_ARMS, cyc)

    # the remaining edges must form a tree touching the cycle at one vertex
    rest_adj: dict[int, list] = {}
    for eid in rest:
        e = g.edges[eid]
        if e.u == e.v:
            return _NOT
        rest_adj.setdefault(e.u, []).append(e)
        rest_adj.setdefault(e.v, []).append(e)
    attach = set(rest_adj) & vc
    if len(attach) != 1:
        return _NOT
    t = attach.pop()
    if len(rest_adj) != len(rest) + 1:
        return _NOT  # not a tree

    parent: dict[int, tuple[int, int]] = {t: (-1, -1)}
    queue = deque([t])
    while queue:
        v = queue.popleft()
        for e in rest_adj[v]:
            wv = e.other(v)
            if wv not in parent:
                parent[wv] = (v, e.id)
                if wv not in vc:
                    queue.append(wv)
                else:
                    return _NOT  # touches the cycle twice
    if len(parent) != len(rest_adj):
        return _NOT  # disconnected remainder

    def path_to_t(v: int) -> Optional[set[int]]:
        if v == t:
            return set()
        if v not in parent:
            return None
        out = set()
        while v != t:
            pv, eid = parent[v]
            out.add(eid)
            v = pv
        return out

    px = path_to_t(x)
    py = path_to_t(y)
    if px is None or py is None or px | py != rest:
        return _NOT
    shared = px & py
    for eid in rest:
        if used[eid] != (2 if eid in shared else 1):
            return _NOT
    kind = HypercyclicKind.SHARED_ARM if shared else HypercyclicKind.DISJOINT_ARMS
    return HypercyclicVerdict(
        kind, cyc, frozenset(px - shared), frozenset(py - shared), frozenset(shared)
    )
