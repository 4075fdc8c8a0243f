"""Simple undirected graphs with contraction and connectivity decompositions.

Graphs are immutable: every operation is a pure function returning a new
value, so values can be shared freely across threads. Each vertex carries
an origin set recording which original vertices were merged into it; the
origin sets always partition the original vertex set.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple


class Graph:
    """Simple undirected graph (no loops, no parallel edges) with merge history."""

    __slots__ = ("_adj", "_origin")

    def __init__(self, adj: Dict[int, FrozenSet[int]],
                 origin: Dict[int, FrozenSet[int]]):
        self._adj = adj
        self._origin = origin

    @classmethod
    def build(cls, vertices: Iterable[int], edges: Iterable[Tuple[int, int]],
              origins: Optional[Dict[int, FrozenSet[int]]] = None) -> "Graph":
        """Construct a graph, defaulting each vertex's origin to itself."""
        vs = set()
        for v in vertices:
            if v < 0:
                raise ValueError(f"vertex ids must be nonnegative, got {v}")
            vs.add(v)
        adj = {v: set() for v in vs}
        for u, w in edges:
            if u == w:
                raise ValueError(f"self-loop at vertex {u}")
            if u not in adj or w not in adj:
                raise ValueError(f"edge ({u}, {w}) references unknown vertex")
            adj[u].add(w)
            adj[w].add(u)
        if origins is None:
            origin = {v: frozenset((v,)) for v in vs}
        else:
            origin = {v: frozenset(origins[v]) for v in vs}
            if any(not s for s in origin.values()):
                raise ValueError("origin sets must be nonempty")
        return cls({v: frozenset(nbrs) for v, nbrs in adj.items()}, origin)

    @classmethod
    def from_edges(cls, vertices: Iterable[int],
                   edges: Iterable[Tuple[int, int]]) -> "Graph":
        return cls.build(vertices, edges)

    @property
    def vertices(self) -> FrozenSet[int]:
        return frozenset(self._adj)

    def sorted_vertices(self) -> List[int]:
        return sorted(self._adj)

    @property
    def vertex_count(self) -> int:
        return len(self._adj)

    @property
    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self._adj.values()) // 2

    def neighbors(self, v: int) -> FrozenSet[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_vertex(self, v: int) -> bool:
        return v in self._adj

    def has_edge(self, u: int, v: int) -> bool:
        return u in self._adj and v in self._adj[u]

    def edges(self) -> List[Tuple[int, int]]:
        """All edges as (u, v) pairs with u < v, sorted."""
        out = []
        for u, nbrs in self._adj.items():
            for w in nbrs:
                if u < w:
                    out.append((u, w))
        out.sort()
        return out

    def origin(self, v: int) -> FrozenSet[int]:
        return self._origin[v]

    def origin_map(self) -> Dict[int, FrozenSet[int]]:
        return dict(self._origin)

    def origin_min(self, v: int) -> int:
        return min(self._origin[v])

    def min_origin_of(self, vs: Iterable[int]) -> int:
        return min(min(self._origin[v]) for v in vs)

    def induced(self, keep: Iterable[int]) -> "Graph":
        """Induced subgraph on ``keep``; origins of kept vertices carry over."""
        ks = frozenset(keep)
        if not ks <= self.vertices:
            raise ValueError("induced subgraph on vertices not in the graph")
        adj = {v: self._adj[v] & ks for v in ks}
        origin = {v: self._origin[v] for v in ks}
        return Graph(adj, origin)

    def is_tree(self) -> bool:
        return is_connected(self) and self.edge_count == self.vertex_count - 1

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj and self._origin == other._origin

    def __hash__(self):
        return hash((frozenset(self._adj.items()),
                     frozenset(self._origin.items())))

    def __repr__(self) -> str:
        return f"Graph(n={self.vertex_count}, m={self.edge_count})"


@dataclass(frozen=True)
class WitnessStructure:
    """Partition of a graph's vertices realizing a path or cycle target.

    ``sets`` are ordered along the target (cyclically when the target is a
    cycle); ``endpoints`` optionally names the two end-set indices of a
    path target.
    """

    target_kind: str  # "path" | "cycle"
    sets: Tuple[FrozenSet[int], ...]
    endpoints: Optional[Tuple[int, int]] = None


@dataclass(frozen=True)
class BlockDecomposition:
    """Blocks, cut vertices, bridges and 2-edge-connected components."""

    blocks: Tuple[FrozenSet[int], ...]
    cut_vertices: FrozenSet[int]
    bridges: FrozenSet[Tuple[int, int]]
    tecc: Tuple[FrozenSet[int], ...]


def contract_edge(g: Graph, u: int, v: int) -> Graph:
    """Contract edge uv; the surviving vertex keeps v's id.

    The survivor becomes adjacent to exactly the union of both
    neighbourhoods (minus u and v), so no loops or parallel edges arise,
    and it absorbs u's origin set.
    """
    if not g.has_edge(u, v):
        raise ValueError(f"({u}, {v}) is not an edge")
    adj = dict(g._adj)
    merged = (adj[u] | adj[v]) - {u, v}
    del adj[u]
    adj[v] = frozenset(merged)
    for w in merged:
        nbrs = adj[w]
        if u in nbrs:
            adj[w] = (nbrs - {u}) | {v}
    origin = dict(g._origin)
    origin[v] = origin[u] | origin[v]
    del origin[u]
    return Graph(adj, origin)


def contract_set_onto_rest(g: Graph, xset: Iterable[int]) -> Tuple[Graph, int]:
    """Contract every vertex of ``xset`` onto the outside, outside ids surviving.

    Vertices of the set are absorbed one at a time, smallest id first,
    each merging into its smallest-id neighbour outside the set. Exactly
    ``len(xset)`` contractions are performed.
    """
    remaining = set(xset)
    if not remaining <= g.vertices:
        raise ValueError("set contains vertices not in the graph")
    if remaining == g.vertices:
        raise ValueError("cannot contract every vertex onto nothing")
    count = 0
    cur = g
    while remaining:
        pick = None
        for x in sorted(remaining):
            outside = [w for w in cur.neighbors(x) if w not in remaining]
            if outside:
                pick = (x, min(outside))
                break
        if pick is None:
            raise ValueError("set has no neighbour outside; graph disconnected?")
        x, target = pick
        cur = contract_edge(cur, x, target)
        remaining.discard(x)
        count += 1
    return cur, count


def components(g: Graph) -> List[FrozenSet[int]]:
    """Connected components, ordered by smallest contained original id."""
    seen = set()
    comps = []
    for start in g.sorted_vertices():
        if start in seen:
            continue
        comp = {start}
        stack = [start]
        seen.add(start)
        while stack:
            v = stack.pop()
            for w in g.neighbors(v):
                if w not in seen:
                    seen.add(w)
                    comp.add(w)
                    stack.append(w)
        comps.append(frozenset(comp))
    comps.sort(key=g.min_origin_of)
    return comps


def is_connected(g: Graph) -> bool:
    return len(components(g)) == 1


def decompose(g: Graph) -> BlockDecomposition:
    """Blocks, cut vertices, bridges and 2-edge-connected components.

    Iterative depth-first low-link computation; safe on graphs far deeper
    than the interpreter's recursion limit. Requires a connected graph.
    """
    if not is_connected(g):
        raise ValueError("decompose requires a connected graph")
    verts = g.sorted_vertices()
    if len(verts) == 1:
        v = verts[0]
        return BlockDecomposition((), frozenset(), frozenset(),
                                  (frozenset((v,)),))

    disc: Dict[int, int] = {}
    low: Dict[int, int] = {}
    parent: Dict[int, Optional[int]] = {}
    iters = {}
    edge_stack: List[Tuple[int, int]] = []
    blocks: List[FrozenSet[int]] = []
    cut = set()
    bridges = set()

    root = verts[0]
    parent[root] = None
    disc[root] = low[root] = 0
    timer = 1
    iters[root] = iter(sorted(g.neighbors(root)))
    stack = [root]
    root_children = 0

    while stack:
        v = stack[-1]
        advanced = False
        for w in iters[v]:
            if w == parent[v]:
                continue
            if w not in disc:
                parent[w] = v
                disc[w] = low[w] = timer
                timer += 1
                edge_stack.append((v, w))
                iters[w] = iter(sorted(g.neighbors(w)))
                stack.append(w)
                advanced = True
                break
            if disc[w] < disc[v]:
                edge_stack.append((v, w))
                if disc[w] < low[v]:
                    low[v] = disc[w]
        if advanced:
            continue
        stack.pop()
        u = parent[v]
        if u is None:
            continue
        if low[v] < low[u]:
            low[u] = low[v]
        if low[v] > disc[u]:
            bridges.add((u, v) if u < v else (v, u))
        if low[v] >= disc[u]:
            if u == root:
                root_children += 1
            else:
                cut.add(u)
            members = set()
            while True:
                e = edge_stack.pop()
                members.update(e)
                if e == (v, w_ := v) or e == (u, v):
                    if e == (u, v):
                        break
            blocks.append(frozenset(members))
    if root_children >= 2:
        cut.add(root)

    blocks.sort(key=g.min_origin_of)

    bridge_set = frozenset(bridges)
    seen = set()
    tecc: List[FrozenSet[int]] = []
    for start in verts:
        if start in seen:
            continue
        comp = {start}
        seen.add(start)
        dfs = [start]
        while dfs:
            a = dfs.pop()
            for b in g.neighbors(a):
                e = (a, b) if a < b else (b, a)
                if e in bridge_set or b in seen:
                    continue
                seen.add(b)
                comp.add(b)
                dfs.append(b)
        tecc.append(frozenset(comp))
    tecc.sort(key=g.min_origin_of)

    return BlockDecomposition(tuple(blocks), frozenset(cut), bridge_set,
                              tuple(tecc))


def is_k_connected(g: Graph, k: int) -> bool:
    """Whether no vertex set of size < k disconnects g (k in {2, 3}).

    Convention for small graphs: 2-connectivity requires at least 3
    vertices, 3-connectivity at least 4. Tested by deleting up to k - 1
    vertices and checking what remains.
    """
    if k not in (2, 3):
        raise ValueError("only k = 2 or 3 supported")
    n = g.vertex_count
    if n <= k:
        return False
    if not is_connected(g):
        return False
    if k == 2:
        return not decompose(g).cut_vertices
    if any(g.degree(v) < 3 for v in g.vertices):
        return False
    for u in g.sorted_vertices():
        rest = g.induced(g.vertices - {u})
        if not is_connected(rest) or decompose(rest).cut_vertices:
            return False
    return True


def is_two_edge_connected(g: Graph) -> bool:
    """No bridge and at least 2 vertices; a single vertex counts as True."""
    if g.vertex_count == 1:
        return True
    if not is_connected(g):
        return False
    return not decompose(g).bridges


def _induced_connected(g: Graph, vs: FrozenSet[int]) -> bool:
    it = iter(vs)
    start = next(it)
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in g.neighbors(v) & vs:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(vs)


def _sets_adjacent(g: Graph, a: FrozenSet[int], b: FrozenSet[int]) -> bool:
    small, big = (a, b) if len(a) <= len(b) else (b, a)
    return any(g.neighbors(v) & big for v in small)


def validate_witness(original: Graph, w: WitnessStructure) -> bool:
    """Check the three witness-structure conditions for the declared kind.

    True iff the sets partition the graph's vertices, each induces a
    connected subgraph, and exactly the consecutive sets (cyclically for
    a cycle target, which needs at least 3 sets) share an edge.
    """
    if w.target_kind not in ("path", "cycle"):
        raise ValueError(f"unknown target kind {w.target_kind!r}")
    sets = w.sets
    if not sets or any(not s for s in sets):
        return False
    union = set()
    total = 0
    for s in sets:
        union.update(s)
        total += len(s)
    if total != len(union) or union != set(original.vertices):
        return False
    if any(not _induced_connected(original, s) for s in sets):
        return False
    p = len(sets)
    if w.target_kind == "cycle":
        if p < 3:
            return False
        for i in range(p):
            for j in range(i + 1, p):
                consecutive = (j - i == 1) or (i == 0 and j == p - 1)
                if _sets_adjacent(original, sets[i], sets[j]) != consecutive:
                    return False
        return True
    for i in range(p):
        for j in range(i + 1, p):
            consecutive = j - i == 1
            if _sets_adjacent(original, sets[i], sets[j]) != consecutive:
                return False
    return True
