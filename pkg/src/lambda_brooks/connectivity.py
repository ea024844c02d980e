"""Edge-disjoint-path flows, minimum edge cuts, blocks, and separators.

All operations are pure functions over immutable graphs. Tie-breaking is
lexicographic everywhere (vertex id order, normalized edge order), so every
returned cut, block list, and separator is canonical for a given input.
"""

from __future__ import annotations

from dataclasses import dataclass

from ._kernels import edge_connectivity as _flow_kernel
from .errors import UsageError
from .graph import Graph, induced_subgraph, normalize_edge

Edge = tuple[int, int]


@dataclass(frozen=True)
class EdgeCut:
    """A triple (X, Y, F): vertex bipartition plus the crossing edge set.

    x_boundary / y_boundary are the vertices of X / Y incident to F.
    """

    X: tuple[int, ...]
    Y: tuple[int, ...]
    F: tuple[Edge, ...]
    x_boundary: tuple[int, ...]
    y_boundary: tuple[int, ...]

    def flipped(self) -> "EdgeCut":
        return EdgeCut(self.Y, self.X, self.F, self.y_boundary, self.x_boundary)

    def to_json_obj(self) -> dict:
        return {
            "X": list(self.X),
            "Y": list(self.Y),
            "F": [list(e) for e in self.F],
        }


def edge_cut_from_side(g: Graph, side) -> EdgeCut:
    """Build the edge cut determined by one side of a vertex bipartition."""
    xs = sorted(set(side))
    in_x = [False] * g.n
    for v in xs:
        g._check_vertex(v)
        in_x[v] = True
    ys = [v for v in range(g.n) if not in_x[v]]
    if not xs or not ys:
        raise UsageError("both sides of an edge cut must be non-empty")
    f = sorted((u, v) if in_x[u] else (v, u) for u, v in g.edges() if in_x[u] != in_x[v])
    xb = sorted({u for u, _ in f})
    yb = sorted({v for _, v in f})
    # F entries keep the X endpoint first; normalize for serialization order
    f_norm = tuple(sorted(normalize_edge(u, v) for u, v in f))
    return EdgeCut(tuple(xs), tuple(ys), f_norm, tuple(xb), tuple(yb))


@dataclass(frozen=True)
class BlockDecomposition:
    """Blocks (maximal 2-connected subgraphs, bridges, isolated vertices),
    cut vertices, and the bipartite block/cut-vertex incidence."""

    blocks: tuple[tuple[int, ...], ...]
    cut_vertices: tuple[int, ...]
    block_cut_tree: tuple[tuple[int, int], ...]  # (block index, cut vertex)

    def to_json_obj(self) -> dict:
        return {
            "blocks": [list(b) for b in self.blocks],
            "cut_vertices": list(self.cut_vertices),
        }


@dataclass(frozen=True)
class VertexEdgeSeparator:
    """A vertex v and edge e = (w1, w2), not incident to v, whose joint
    removal disconnects the graph. The two parts both contain v and
    intersect exactly in {v}; w1 lies in part1, w2 in part2."""

    v: int
    edge: Edge
    part1: tuple[int, ...]
    part2: tuple[int, ...]


def connected_components(g: Graph) -> list[list[int]]:
    """Maximal connected vertex sets, each sorted, ordered by smallest member."""
    seen = [False] * g.n
    comps = []
    for start in range(g.n):
        if seen[start]:
            continue
        seen[start] = True
        stack = [start]
        comp = [start]
        while stack:
            v = stack.pop()
            for u in g.neighbors(v):
                if not seen[u]:
                    seen[u] = True
                    comp.append(u)
                    stack.append(u)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) <= 1


def block_decomposition(g: Graph) -> BlockDecomposition:
    """Biconnected components via iterative DFS low-points.

    Bridges appear as 2-vertex blocks and isolated vertices as singletons;
    every edge lies in exactly one block.
    """
    disc = [-1] * g.n
    low = [0] * g.n
    parent = [-1] * g.n
    blocks: list[list[int]] = []
    cut: set[int] = set()
    edge_stack: list[Edge] = []
    timer = 0

    for root in range(g.n):
        if disc[root] != -1:
            continue
        if not g.neighbors(root):
            blocks.append([root])
            continue
        root_children = 0
        # frames: (vertex, iterator index into adjacency)
        stack = [(root, 0)]
        disc[root] = low[root] = timer
        timer += 1
        while stack:
            v, i = stack[-1]
            nbrs = g.neighbors(v)
            if i < len(nbrs):
                stack[-1] = (v, i + 1)
                u = nbrs[i]
                if disc[u] == -1:
                    parent[u] = v
                    edge_stack.append((v, u))
                    disc[u] = low[u] = timer
                    timer += 1
                    stack.append((u, 0))
                elif u != parent[v] and disc[u] < disc[v]:
                    edge_stack.append((v, u))
                    low[v] = min(low[v], disc[u])
            else:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    low[p] = min(low[p], low[v])
                    if p == root:
                        root_children += 1
                    if low[v] >= disc[p]:
                        members = set()
                        while edge_stack:
                            a, b = edge_stack[-1]
                            if disc[a] < disc[v] and (a, b) != (p, v):
                                break
                            edge_stack.pop()
                            members.add(a)
                            members.add(b)
                        blocks.append(sorted(members))
                        if p != root:
                            cut.add(p)
        if root_children > 1:
            cut.add(root)

    blocks.sort()
    cut_sorted = tuple(sorted(cut))
    tree = tuple(
        (i, v) for i, blk in enumerate(blocks) for v in blk if v in cut
    )
    return BlockDecomposition(tuple(tuple(b) for b in blocks), cut_sorted, tree)


def local_edge_connectivity(g: Graph, u: int, v: int) -> tuple[int, EdgeCut]:
    """Number of edge-disjoint u-v paths and a minimum cut witnessing it.

    Menger: the value equals the minimum |boundary(X)| over X containing u
    but not v; the returned cut takes X = the residual-reachable side, so
    u is in X, v in Y and |F| equals the value.
    """
    g._check_vertex(u)
    g._check_vertex(v)
    if u == v:
        raise UsageError("local edge connectivity needs two distinct vertices")
    indptr, indices, rev = g.csr()
    value, reach = _flow_kernel(g.n, indptr, indices, rev, u, v)
    cut = edge_cut_from_side(g, [x for x in range(g.n) if reach[x]])
    assert len(cut.F) == value, "flow/cut mismatch"
    return value, cut


def local_edge_connectivity_value(g: Graph, u: int, v: int) -> int:
    """Flow value only (skips cut construction)."""
    g._check_vertex(u)
    g._check_vertex(v)
    if u == v:
        raise UsageError("local edge connectivity needs two distinct vertices")
    indptr, indices, rev = g.csr()
    value, _ = _flow_kernel(g.n, indptr, indices, rev, u, v)
    return value


def lambda_max(g: Graph) -> tuple[int, tuple[int, int] | None]:
    """Maximum local edge connectivity over all vertex pairs.

    0 for graphs with fewer than two vertices. The witness pair is the
    lexicographically smallest pair attaining the maximum. Pairs whose
    degree bound cannot beat the current best are skipped; this cannot
    change the value or the witness.
    """
    if g.n <= 1:
        return 0, None
    best = -1
    witness = None
    for u in range(g.n):
        du = g.degree(u)
        for v in range(u + 1, g.n):
            if min(du, g.degree(v)) <= best:
                continue
            val = local_edge_connectivity_value(g, u, v)
            if val > best:
                best = val
                witness = (u, v)
    return best, witness


def bridges(g: Graph) -> list[Edge]:
    """Bridge edges in normalized sorted order (works per component)."""
    disc = [-1] * g.n
    low = [0] * g.n
    parent = [-1] * g.n
    out: list[Edge] = []
    timer = 0
    for root in range(g.n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        stack = [(root, 0)]
        while stack:
            v, i = stack[-1]
            nbrs = g.neighbors(v)
            if i < len(nbrs):
                stack[-1] = (v, i + 1)
                u = nbrs[i]
                if disc[u] == -1:
                    parent[u] = v
                    disc[u] = low[u] = timer
                    timer += 1
                    stack.append((u, 0))
                elif u != parent[v]:
                    low[v] = min(low[v], disc[u])
            else:
                stack.pop()
        # second pass folds low values upward in reverse discovery order
    order = sorted(range(g.n), key=lambda x: -disc[x])
    for v in order:
        p = parent[v]
        if p != -1:
            low[p] = min(low[p], low[v])
            if low[v] > disc[p]:
                out.append(normalize_edge(p, v))
    return sorted(out)


def find_vertex_edge_separator(g: Graph) -> VertexEdgeSeparator | None:
    """First (v, e) in canonical order whose removal disconnects G.

    Scans vertices in id order; for each v, bridges of G - v in normalized
    edge order. part1 is the component of w1 in G - v - e plus v; part2 is
    everything else plus v (several components may land there when v is a
    cut vertex of G - e).
    """
    if g.n < 3:
        raise UsageError("vertex+edge separator search needs at least 3 vertices")
    if not is_connected(g):
        raise UsageError("vertex+edge separator search requires a connected graph")
    for v in range(g.n):
        rest = [x for x in range(g.n) if x != v]
        sub, old_ids = induced_subgraph(g, rest)
        bs = bridges(sub)
        if not bs:
            continue
        a, b = bs[0]
        w1, w2 = normalize_edge(old_ids[a], old_ids[b])
        comp1 = _component_without(g, v, (w1, w2), w1)
        part1 = tuple(sorted(comp1 | {v}))
        part2 = tuple(sorted((set(range(g.n)) - comp1 - {v}) | {v}))
        return VertexEdgeSeparator(v, (w1, w2), part1, part2)
    return None


def _component_without(g: Graph, v: int, e: Edge, start: int) -> set[int]:
    """Component of `start` in G - v - e."""
    seen = {start, v}
    stack = [start]
    while stack:
        x = stack.pop()
        for u in g.neighbors(x):
            if normalize_edge(x, u) == e or u in seen:
                continue
            seen.add(u)
            stack.append(u)
    seen.discard(v)
    return seen


@dataclass(frozen=True)
class TwoCutDecomposition:
    side1: Graph
    map1: tuple[int, ...]
    side2: Graph
    map2: tuple[int, ...]
    extra_components: bool  # True when G - S had more than two components


def decompose_at_2cut(g: Graph, s) -> TwoCutDecomposition:
    """Split at a separating vertex set S: sides are G[C_i ∪ S] with id maps.

    With more than two components the first component is returned against
    the union of the rest, flagged, since the two-component situation is
    only guaranteed for critical inputs.
    """
    s_set = sorted(set(s))
    for v in s_set:
        g._check_vertex(v)
    rest = [v for v in range(g.n) if v not in s_set]
    sub, old_ids = induced_subgraph(g, rest)
    comps = connected_components(sub)
    base = len(connected_components(g))
    if len(comps) <= base:
        raise UsageError("vertex set does not separate the graph")
    first = {old_ids[i] for i in comps[0]}
    others = {old_ids[i] for comp in comps[1:] for i in comp}
    g1, m1 = induced_subgraph(g, first | set(s_set))
    g2, m2 = induced_subgraph(g, others | set(s_set))
    return TwoCutDecomposition(g1, m1, g2, m2, extra_components=len(comps) > 2)


def min_cut_between_high_vertices(g: Graph, k: int) -> tuple[int, int, EdgeCut] | None:
    """Minimum cut between the two smallest-id vertices of degree > k.

    None when fewer than two such vertices exist. The cut is oriented so
    that |x_boundary| <= |y_boundary|.
    """
    high = [v for v in range(g.n) if g.degree(v) > k]
    if len(high) < 2:
        return None
    u, w = high[0], high[1]
    _, cut = local_edge_connectivity(g, u, w)
    if len(cut.x_boundary) > len(cut.y_boundary):
        cut = cut.flipped()
    return u, w, cut
