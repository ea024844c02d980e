"""Simple undirected graphs over dense integer vertex ids.

Graphs are immutable after construction: every "mutating" operation returns
a new Graph, and derived subgraphs carry explicit id maps back to their
parent so downstream certificates never need isomorphism tests. Adjacency
is stored as sorted tuples, which makes edge iteration order canonical and
fixes all tie-breaking in the rest of the package.
"""

from __future__ import annotations

from array import array
from bisect import bisect_left
from typing import Iterable, Iterator

from .errors import UsageError

Edge = tuple[int, int]


def normalize_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """Loop-free simple graph on vertices 0..n-1."""

    __slots__ = ("n", "m", "_adj", "_csr", "_masks")

    def __init__(self, n: int, edges: Iterable[Edge] = ()):
        if n < 0:
            raise UsageError("vertex count must be non-negative")
        neighbor_sets: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise UsageError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise UsageError(f"loop at vertex {u} not allowed")
            neighbor_sets[u].add(v)
            neighbor_sets[v].add(u)
        self.n = n
        self._adj: tuple[tuple[int, ...], ...] = tuple(
            tuple(sorted(s)) for s in neighbor_sets
        )
        self.m = sum(len(a) for a in self._adj) // 2
        self._csr = None
        self._masks = None

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return self._adj[v]

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        a = self._adj[u]
        i = bisect_left(a, v)
        return i < len(a) and a[i] == v

    def edges(self) -> Iterator[Edge]:
        """Edges as (u, v) with u < v, in lexicographic order."""
        for u in range(self.n):
            for v in self._adj[u]:
                if v > u:
                    yield (u, v)

    def edge_list(self) -> list[Edge]:
        return list(self.edges())

    def vertices(self) -> range:
        return range(self.n)

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise UsageError(f"vertex id {v} out of range for n={self.n}")

    def validate(self) -> None:
        """Re-check structural invariants (symmetry, no loops, m consistency)."""
        for v, nbrs in enumerate(self._adj):
            if v in nbrs:
                raise UsageError(f"loop at vertex {v}")
            if list(nbrs) != sorted(set(nbrs)):
                raise UsageError(f"adjacency of {v} not a sorted set")
            for u in nbrs:
                if v not in self._adj[u]:
                    raise UsageError(f"asymmetric edge ({v},{u})")
        if self.m * 2 != sum(len(a) for a in self._adj):
            raise UsageError("edge count out of sync with adjacency")

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self.n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    # Cached array forms consumed by the flow / coloring kernels.

    def csr(self) -> tuple[array, array, array]:
        """(indptr, indices, rev) arc arrays; rev[p] is the reverse arc of p."""
        if self._csr is None:
            indptr = array("i", [0] * (self.n + 1))
            indices = array("i")
            for v in range(self.n):
                indices.extend(self._adj[v])
                indptr[v + 1] = len(indices)
            rev = array("i", [0] * len(indices))
            for v in range(self.n):
                for p in range(indptr[v], indptr[v + 1]):
                    u = indices[p]
                    rev[p] = indptr[u] + bisect_left(self._adj[u], v)
            self._csr = (indptr, indices, rev)
        return self._csr

    def adjacency_masks(self) -> list[int]:
        """Per-vertex neighbor bitmasks (bit u set iff u adjacent)."""
        if self._masks is None:
            masks = []
            for nbrs in self._adj:
                m = 0
                for u in nbrs:
                    m |= 1 << u
                masks.append(m)
            self._masks = masks
        return self._masks


# -- construction helpers ---------------------------------------------------


def from_edges(n: int, edges: Iterable[Edge]) -> Graph:
    return Graph(n, edges)


def complete_graph(n: int) -> Graph:
    return Graph(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise UsageError("cycle needs at least 3 vertices")
    return Graph(n, ((i, (i + 1) % n) for i in range(n)))


def wheel_graph(rim: int) -> Graph:
    """Odd wheel: rim cycle on 0..rim-1 plus hub vertex `rim` joined to all."""
    if rim < 3 or rim % 2 == 0:
        raise UsageError("wheel rim length must be odd and >= 3")
    edges = [(i, (i + 1) % rim) for i in range(rim)]
    edges += [(i, rim) for i in range(rim)]
    return Graph(rim + 1, edges)


def add_edges(g: Graph, new_edges: Iterable[Edge]) -> Graph:
    return Graph(g.n, list(g.edges()) + list(new_edges))


def add_clique(g: Graph, vertices: Iterable[int]) -> Graph:
    """All pairs inside `vertices` become adjacent; idempotent on present edges."""
    vs = sorted(set(vertices))
    for v in vs:
        g._check_vertex(v)
    extra = [(vs[i], vs[j]) for i in range(len(vs)) for j in range(i + 1, len(vs))]
    return add_edges(g, extra)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced by `vertices`, plus the map new-id -> old-id.

    New ids are assigned in increasing order of old ids.
    """
    vs = sorted(set(vertices))
    for v in vs:
        g._check_vertex(v)
    old_to_new = {old: new for new, old in enumerate(vs)}
    edges = [
        (old_to_new[u], old_to_new[v])
        for u in vs
        for v in g.neighbors(u)
        if u < v and v in old_to_new
    ]
    return Graph(len(vs), edges), tuple(vs)


def delete_edge(g: Graph, u: int, v: int) -> Graph:
    if not g.has_edge(u, v):
        raise UsageError(f"edge ({u},{v}) not present")
    e = normalize_edge(u, v)
    return Graph(g.n, (x for x in g.edges() if x != e))


# -- degree queries ----------------------------------------------------------


def degree(g: Graph, v: int) -> int:
    return g.degree(v)


def degree_extremes(g: Graph) -> tuple[int, int]:
    """(min degree, max degree); the empty graph yields (0, 0) by convention."""
    if g.n == 0:
        return (0, 0)
    degs = [len(g._adj[v]) for v in range(g.n)]
    return (min(degs), max(degs))


def coloring_number(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Coloring number col(G) = degeneracy + 1, with a greedy-friendly order.

    Repeatedly removes a minimum-degree vertex (ties by smallest id). The
    returned order is the reversal of the removal sequence: coloring greedily
    along it uses at most col(G) colors, because each vertex sees at most
    col(G) - 1 already-colored neighbors.
    """
    if g.n == 0:
        return (1, ())
    deg = [len(g._adj[v]) for v in range(g.n)]
    removed = [False] * g.n
    removal: list[int] = []
    degeneracy = 0
    for _ in range(g.n):
        v = min((x for x in range(g.n) if not removed[x]), key=lambda x: (deg[x], x))
        degeneracy = max(degeneracy, deg[v])
        removed[v] = True
        removal.append(v)
        for u in g._adj[v]:
            if not removed[u]:
                deg[u] -= 1
    return (degeneracy + 1, tuple(reversed(removal)))


# -- shape predicates --------------------------------------------------------


def is_complete(g: Graph) -> bool:
    return g.n >= 1 and g.m == g.n * (g.n - 1) // 2


def is_cycle(g: Graph) -> bool:
    return g.n >= 3 and g.m == g.n and all(len(a) == 2 for a in g._adj) and _is_connected_simple(g)


def is_odd_cycle(g: Graph) -> bool:
    return is_cycle(g) and g.n % 2 == 1


def is_odd_wheel(g: Graph) -> int | None:
    """Hub id if G is an odd cycle plus a vertex joined to all of it, else None.

    K_4 is the rim-3 odd wheel; the smallest valid hub is returned.
    """
    if g.n < 4:
        return None
    for h in range(g.n):
        if len(g._adj[h]) == g.n - 1:
            rest, _ = induced_subgraph(g, [v for v in range(g.n) if v != h])
            if is_odd_cycle(rest):
                return h
    return None


def cycle_order(g: Graph) -> tuple[int, ...]:
    """Vertices of a cycle graph in canonical traversal order.

    Starts at the smallest id and moves toward its smaller neighbor.
    """
    if not is_cycle(g):
        raise UsageError("not a cycle graph")
    start = 0
    order = [start]
    prev, cur = start, g._adj[start][0]
    while cur != start:
        order.append(cur)
        a, b = g._adj[cur]
        prev, cur = cur, (b if a == prev else a)
    return tuple(order)


def _is_connected_simple(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = [False] * g.n
    stack = [0]
    seen[0] = True
    count = 1
    while stack:
        v = stack.pop()
        for u in g._adj[v]:
            if not seen[u]:
                seen[u] = True
                count += 1
                stack.append(u)
    return count == g.n
