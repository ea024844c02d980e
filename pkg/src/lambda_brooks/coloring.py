"""Coloring machinery: proper-coloring checks, exact oracles, degree-list
coloring, cut-merge by color permutation, and the decision procedure that
either k-colors a graph with lambda(G) <= k or exhibits a certified block
proving the chromatic number is k+1.

Branches that the underlying theory rules out are still checked at runtime;
reaching one raises InternalInconsistencyError with a serialized repro
bundle instead of silently trusting the proof.
"""

from __future__ import annotations

import os
from bisect import bisect_left
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from ._kernels import k_coloring as _k_coloring_kernel
from .connectivity import (
    EdgeCut,
    block_decomposition,
    find_vertex_edge_separator,
    lambda_max,
    min_cut_between_high_vertices,
)
from .errors import InternalInconsistencyError, ResourceLimitError, UsageError
from .graph import (
    Graph,
    add_clique,
    add_edges,
    induced_subgraph,
    is_complete,
    is_odd_cycle,
)
from .hajos import (
    Certificate,
    CertLeaf,
    CertNode,
    certificate_to_json_obj,
    recognize_hk,
    remap_certificate,
    verify_certificate,
)
from .io import graph_to_json_obj

DEFAULT_ORACLE_LIMIT = 26
ORACLE_LIMIT_ENV = "LAMBDA_BROOKS_ORACLE_LIMIT"


def resolve_oracle_limit(limit: int | None = None) -> int:
    if limit is not None:
        return limit
    env = os.environ.get(ORACLE_LIMIT_ENV)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise UsageError(f"{ORACLE_LIMIT_ENV} must be an integer, not {env!r}") from None
    return DEFAULT_ORACLE_LIMIT


@dataclass(frozen=True)
class Coloring:
    """Total color assignment with palette {1..k}; colors[v] is v's color."""

    k: int
    colors: tuple[int, ...]

    def to_json_obj(self) -> dict:
        return {"k": self.k, "colors": list(self.colors)}


def is_proper(g: Graph, f: Coloring) -> bool:
    if len(f.colors) != g.n:
        raise UsageError("coloring must be total on the vertex set")
    for c in f.colors:
        if not (1 <= c <= f.k):
            raise UsageError(f"color {c} outside palette 1..{f.k}")
    return all(f.colors[u] != f.colors[v] for u, v in g.edges())


def permute_colors(f: Coloring, pi: Mapping[int, int] | Sequence[int]) -> Coloring:
    """Apply a palette bijection; properness is preserved."""
    if isinstance(pi, Mapping):
        pi = dict(pi)
    elif len(pi) == f.k:
        pi = {c: pi[c - 1] for c in range(1, f.k + 1)}
    else:
        raise UsageError(f"permutation must map all of 1..{f.k}")
    if sorted(pi.keys()) != list(range(1, f.k + 1)) or sorted(pi.values()) != list(
        range(1, f.k + 1)
    ):
        raise UsageError(f"permutation must be a bijection on 1..{f.k}")
    return Coloring(f.k, tuple(pi[c] for c in f.colors))


# -- exact oracles -----------------------------------------------------------


def _greedy_clique(g: Graph) -> int:
    """Greedy clique size (a chromatic lower bound), deterministic."""
    if g.n == 0:
        return 0
    best = 1
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    for seed in order:
        if g.degree(seed) + 1 <= best:
            break
        clique = [seed]
        for u in order:
            if u != seed and all(g.has_edge(u, x) for x in clique):
                clique.append(u)
        best = max(best, len(clique))
    return best


def _greedy_dsatur(g: Graph) -> tuple[int, list[int]]:
    """DSATUR greedy (no backtracking): an upper bound plus its coloring."""
    n = g.n
    colors = [0] * n
    neighbor_colors: list[set[int]] = [set() for _ in range(n)]
    used = 0
    for _ in range(n):
        v = max(
            (x for x in range(n) if colors[x] == 0),
            key=lambda x: (len(neighbor_colors[x]), g.degree(x), -x),
        )
        c = 1
        while c in neighbor_colors[v]:
            c += 1
        colors[v] = c
        used = max(used, c)
        for u in g.neighbors(v):
            neighbor_colors[u].add(c)
    return used, colors


def exact_k_colorable(g: Graph, k: int, limit: int | None = None) -> Coloring | None:
    """Exact decision: a proper coloring with palette {1..k}, or None.

    DSATUR branch and bound behind the oracle size limit (default 26
    vertices, LAMBDA_BROOKS_ORACLE_LIMIT or the `limit` argument override).
    """
    if k < 0:
        raise UsageError("palette size must be non-negative")
    cap = resolve_oracle_limit(limit)
    if g.n > cap:
        raise ResourceLimitError(f"exact oracle limited to {cap} vertices, got {g.n}")
    if g.n == 0:
        return Coloring(k, ())
    if k == 0:
        return None
    degrees = [g.degree(v) for v in range(g.n)]
    res = _k_coloring_kernel(g.n, g.adjacency_masks(), degrees, k)
    return None if res is None else Coloring(k, tuple(res))


def exact_chromatic(g: Graph, limit: int | None = None) -> tuple[int, Coloring]:
    """Exact chromatic number with a witness coloring.

    Clique lower bound, DSATUR greedy upper bound, then branch-and-bound
    decisions for each k in between.
    """
    cap = resolve_oracle_limit(limit)
    if g.n > cap:
        raise ResourceLimitError(f"exact oracle limited to {cap} vertices, got {g.n}")
    if g.n == 0:
        return 0, Coloring(0, ())
    lb = max(_greedy_clique(g), 1)
    ub, greedy = _greedy_dsatur(g)
    degrees = [g.degree(v) for v in range(g.n)]
    for k in range(lb, ub):
        res = _k_coloring_kernel(g.n, g.adjacency_masks(), degrees, k)
        if res is not None:
            return k, Coloring(k, tuple(res))
    return ub, Coloring(ub, tuple(greedy))


def is_critical(g: Graph, limit: int | None = None) -> bool:
    """Whether every proper subgraph has a strictly smaller chromatic number.

    Checked as: no isolated vertex (unless G = K_1), and chi(G - e) < chi(G)
    for every edge; vertex deletions follow since G - v is contained in
    G - e for any edge e at v.
    """
    if g.n <= 1:
        return True
    if any(g.degree(v) == 0 for v in range(g.n)):
        return False
    chi, _ = exact_chromatic(g, limit)
    for e in g.edges():
        reduced = Graph(g.n, (x for x in g.edges() if x != e))
        if exact_k_colorable(reduced, chi - 1, limit) is None:
            return False
    return True


# -- structural helpers ------------------------------------------------------


@dataclass(frozen=True)
class LowHighSplit:
    low: Graph
    low_map: tuple[int, ...]
    high: Graph
    high_map: tuple[int, ...]
    below: tuple[int, ...]  # vertices with degree < k; empty in critical inputs


def low_high_split(g: Graph, k: int) -> LowHighSplit:
    """Induced subgraphs on the degree-k (low) and degree->k (high) vertices."""
    low = [v for v in range(g.n) if g.degree(v) == k]
    high = [v for v in range(g.n) if g.degree(v) > k]
    below = tuple(v for v in range(g.n) if g.degree(v) < k)
    gl, ml = induced_subgraph(g, low)
    gh, mh = induced_subgraph(g, high)
    return LowHighSplit(gl, ml, gh, mh, below)


def classify_block(sub: Graph) -> str:
    if is_complete(sub):
        return "complete"
    if is_odd_cycle(sub):
        return "odd_cycle"
    return "other"


@dataclass(frozen=True)
class GallaiForestReport:
    ok: bool
    blocks: tuple[tuple[tuple[int, ...], str], ...]

    def __bool__(self) -> bool:
        return self.ok


def is_gallai_forest(g: Graph) -> GallaiForestReport:
    """True iff every block is a complete graph or an odd cycle."""
    kinds = []
    ok = True
    for blk in block_decomposition(g).blocks:
        sub, _ = induced_subgraph(g, blk)
        kind = classify_block(sub)
        kinds.append((blk, kind))
        ok = ok and kind != "other"
    return GallaiForestReport(ok, tuple(kinds))


# -- degree list coloring ----------------------------------------------------


@dataclass(frozen=True)
class GallaiTreeReport:
    """Emitted when list coloring is not attempted further: every block is
    complete or an odd cycle and every list is tight (|L(u)| = degree)."""

    blocks: tuple[tuple[tuple[int, ...], str], ...]
    tight: bool


def degree_list_color(
    h: Graph, lists: Sequence[Iterable[int]]
) -> Coloring | GallaiTreeReport:
    """Constructive degree version of Brooks' theorem.

    Requires h connected and |L(u)| >= degree(u) everywhere. Returns a
    coloring respecting the lists unless every block is complete or an odd
    cycle and every list is tight, in which case the structural report may
    be returned instead.

    Strategy: a vertex with list surplus lets a reverse-BFS greedy finish
    from it; otherwise a block that is neither complete nor an odd cycle
    contains a vertex v with non-adjacent neighbors a, b sharing an
    available color whose removal keeps the graph connected -- coloring a
    and b alike makes v the surplus vertex.
    """
    if len(lists) != h.n:
        raise UsageError("one color list per vertex required")
    if h.n == 0:
        return Coloring(0, ())
    sets = [sorted(set(lst)) for lst in lists]
    for v, lst in enumerate(sets):
        if any(c < 1 for c in lst):
            raise UsageError("list colors must be positive")
        if len(lst) < h.degree(v):
            raise UsageError(f"list of vertex {v} smaller than its degree")
    if not _connected_excluding(h, frozenset()):
        raise UsageError("degree list coloring requires a connected graph")
    palette = max(c for lst in sets for c in lst)

    for v in range(h.n):
        if len(sets[v]) > h.degree(v):
            colors = [0] * h.n
            _greedy_reverse_bfs(h, sets, v, colors, frozenset())
            return Coloring(palette, tuple(colors))

    classified = tuple(
        (blk, classify_block(induced_subgraph(h, blk)[0]))
        for blk in block_decomposition(h).blocks
    )
    bad_blocks = [blk for blk, kind in classified if kind == "other"]
    if not bad_blocks:
        return GallaiTreeReport(classified, tight=True)

    for blk in bad_blocks:
        members = set(blk)
        for v in blk:
            nbrs = [u for u in h.neighbors(v) if u in members]
            for i, a in enumerate(nbrs):
                for b in nbrs[i + 1 :]:
                    if h.has_edge(a, b):
                        continue
                    common = set(sets[a]) & set(sets[b])
                    if not common:
                        continue
                    if not _connected_excluding(h, frozenset((a, b))):
                        continue
                    c = min(common)
                    colors = [0] * h.n
                    colors[a] = colors[b] = c
                    _greedy_reverse_bfs(h, sets, v, colors, frozenset((a, b)))
                    return Coloring(palette, tuple(colors))

    # Theory says one of the above always applies; exhaustive search is a
    # safety net for callers with adversarial (e.g. pairwise-disjoint) lists.
    colors = _list_color_backtrack(h, sets)
    if colors is not None:
        return Coloring(palette, tuple(colors))
    return GallaiTreeReport(classified, tight=True)


def _connected_excluding(h: Graph, skip: frozenset[int]) -> bool:
    active = [v for v in range(h.n) if v not in skip]
    if not active:
        return True
    seen = set(skip)
    seen.add(active[0])
    stack = [active[0]]
    count = 1
    while stack:
        v = stack.pop()
        for u in h.neighbors(v):
            if u not in seen:
                seen.add(u)
                count += 1
                stack.append(u)
    return count == len(active)


def _greedy_reverse_bfs(h, sets, root, colors, skip) -> None:
    """Greedy along reverse BFS order from root; root is colored last.

    Every vertex except the root still has an uncolored neighbor (its BFS
    predecessor) when its turn comes, so a tight list always has a spare
    color; the root relies on surplus or on two neighbors sharing a color.
    """
    order = [root]
    seen = set(skip)
    seen.add(root)
    i = 0
    while i < len(order):
        v = order[i]
        i += 1
        for u in h.neighbors(v):
            if u not in seen:
                seen.add(u)
                order.append(u)
    assert len(order) == h.n - len(skip), "BFS must reach every active vertex"
    for v in reversed(order):
        forbidden = {colors[u] for u in h.neighbors(v) if colors[u]}
        choice = next((c for c in sets[v] if c not in forbidden), None)
        assert choice is not None, "greedy order guarantees a spare color"
        colors[v] = choice


def _list_color_backtrack(h: Graph, sets) -> list[int] | None:
    colors = [0] * h.n

    def go(v: int) -> bool:
        if v == h.n:
            return True
        forbidden = {colors[u] for u in h.neighbors(v) if colors[u]}
        for c in sets[v]:
            if c not in forbidden:
                colors[v] = c
                if go(v + 1):
                    return True
        colors[v] = 0
        return False

    return colors if go(0) else None


# -- cut merging (perfect-graph lemma) ---------------------------------------


def find_merge_permutation(k: int, conflicts) -> list[int] | None:
    """Bijection pi on {1..k} with pi[y] != x for every conflict pair (x, y).

    Solved as perfect bipartite matching in the complement of the conflict
    relation (augmenting paths). With at most k distinct pairs, failure
    happens exactly when the pairs form a star: one color on one side
    conflicting with all k colors of the other. Returns pi as a list indexed
    1..k (slot 0 unused), or None.
    """
    forbidden: dict[int, set[int]] = {y: set() for y in range(1, k + 1)}
    for x, y in conflicts:
        if not (1 <= x <= k and 1 <= y <= k):
            raise UsageError(f"conflict pair ({x},{y}) outside palette 1..{k}")
        forbidden[y].add(x)
    match_of_target = [0] * (k + 1)  # target color -> source color
    match_of_source = [0] * (k + 1)

    def augment(y: int, visited: set[int]) -> bool:
        for d in range(1, k + 1):
            if d in forbidden[y] or d in visited:
                continue
            visited.add(d)
            if match_of_target[d] == 0 or augment(match_of_target[d], visited):
                match_of_target[d] = y
                match_of_source[y] = d
                return True
        return False

    for y in range(1, k + 1):
        if not augment(y, set()):
            return None
    return match_of_source


def merge_cut_colorings(
    g: Graph, cut: EdgeCut, f_x: Coloring, f_y: Coloring
) -> Coloring | None:
    """Combine side colorings across an edge cut by permuting the Y palette.

    f_x colors sorted(X) positionally, f_y colors sorted(Y). Returns the
    combined proper coloring of G, or None exactly when no palette
    bijection avoids all conflicts (the star obstruction of at most k
    crossing edges).
    """
    k = f_x.k
    if f_y.k != k:
        raise UsageError("side colorings must share one palette")
    if len(cut.F) > k:
        raise UsageError(f"cut has {len(cut.F)} edges, more than the palette size {k}")
    if len(f_x.colors) != len(cut.X) or len(f_y.colors) != len(cut.Y):
        raise UsageError("side coloring sizes do not match the cut")
    sub_x, _ = induced_subgraph(g, cut.X)
    sub_y, _ = induced_subgraph(g, cut.Y)
    if not is_proper(sub_x, f_x) or not is_proper(sub_y, f_y):
        raise UsageError("side colorings must be proper on their sides")
    color_x = dict(zip(cut.X, f_x.colors))
    color_y = dict(zip(cut.Y, f_y.colors))
    conflicts = set()
    for u, v in cut.F:
        if u in color_x:
            conflicts.add((color_x[u], color_y[v]))
        else:
            conflicts.add((color_x[v], color_y[u]))
    pi = find_merge_permutation(k, conflicts)
    if pi is None:
        return None
    combined = [0] * g.n
    for v, c in color_x.items():
        combined[v] = c
    for v, c in color_y.items():
        combined[v] = pi[c]
    return Coloring(k, tuple(combined))


# -- the decision procedure --------------------------------------------------


@dataclass(frozen=True)
class ChiWitness:
    """Either a proper k-coloring, or a block plus a certificate proving the
    chromatic number is k+1. The certificate's ids refer to the induced
    block subgraph (vertices renumbered in sorted order)."""

    coloring: Coloring | None = None
    block: tuple[int, ...] | None = None
    certificate: Certificate | None = None

    def __post_init__(self):
        has_col = self.coloring is not None
        has_block = self.block is not None and self.certificate is not None
        if has_col == has_block:
            raise UsageError("witness must be exactly one of coloring / block+certificate")

    @property
    def is_coloring(self) -> bool:
        return self.coloring is not None

    def to_json_obj(self) -> dict:
        if self.coloring is not None:
            return {"coloring": self.coloring.to_json_obj()}
        return {
            "block": list(self.block),
            "certificate": certificate_to_json_obj(self.certificate),
        }


class _MemberBlock(Exception):
    """Internal: a block certificate surfaced inside the recursion."""

    def __init__(self, block: tuple[int, ...], cert: Certificate):
        self.block = block
        self.cert = cert
        super().__init__("member block found")


def _inconsistency(stage: str, g: Graph, k: int, **extra) -> InternalInconsistencyError:
    bundle = {"k": k, "graph": graph_to_json_obj(g)}
    bundle.update(extra)
    return InternalInconsistencyError(stage, bundle)


def color_or_find_hk_block(
    g: Graph, k: int, oracle_limit: int | None = None
) -> ChiWitness:
    """Either a proper k-coloring of G, or a block certified to force
    chromatic number k+1. Requires lambda(G) <= k.

    For k >= 4 this runs the recursive decomposition procedure (blocks,
    vertex+edge separators, degree-list coloring, minimum cuts between
    high-degree vertices with clique-augmented sides). For k <= 3 the
    certificate half still comes from the recognizer, while the coloring
    half falls back to the exact oracle.
    """
    if k < 1:
        raise UsageError("k must be at least 1")
    lam, _ = lambda_max(g)
    if lam > k:
        raise UsageError(f"lambda(G) = {lam} exceeds k = {k}")
    if k <= 3:
        witness = _small_k_witness(g, k, oracle_limit)
    else:
        try:
            colors = _color_graph(g, k, allow_member=True)
            witness = ChiWitness(coloring=Coloring(k, tuple(colors)))
        except _MemberBlock as mb:
            witness = ChiWitness(block=mb.block, certificate=mb.cert)
    _assert_witness(g, k, witness)
    return witness


def _assert_witness(g: Graph, k: int, witness: ChiWitness) -> None:
    """Executable soundness assertion on every returned witness."""
    if witness.is_coloring:
        if not is_proper(g, witness.coloring) or witness.coloring.k > k:
            raise _inconsistency("witness-coloring-improper", g, k)
        return
    if witness.block not in set(block_decomposition(g).blocks):
        raise _inconsistency("witness-block-not-a-block", g, k, block=list(witness.block))
    sub, _ = induced_subgraph(g, witness.block)
    check = verify_certificate(sub, k, witness.certificate)
    if not check.ok:
        raise _inconsistency("witness-certificate-invalid", g, k, reason=check.reason)


def _small_k_witness(g: Graph, k: int, oracle_limit) -> ChiWitness:
    for blk in block_decomposition(g).blocks:
        sub, _ = induced_subgraph(g, blk)
        cert = recognize_hk(sub, k)
        if cert is not None:
            return ChiWitness(block=blk, certificate=cert)
    coloring = exact_k_colorable(g, k, oracle_limit)
    if coloring is None:
        # lambda(G) <= k with no member block forces k-colorability
        raise _inconsistency("small-k-oracle-refused", g, k)
    return ChiWitness(coloring=coloring)


def _color_graph(h: Graph, k: int, allow_member: bool) -> list[int]:
    """Color every block, then align the block colorings at cut vertices."""
    colors = [0] * h.n
    bd = block_decomposition(h)
    by_cut: dict[int, list[int]] = {}
    for bi, cv in bd.block_cut_tree:
        by_cut.setdefault(cv, []).append(bi)
    visited = [False] * len(bd.blocks)
    for start in range(len(bd.blocks)):
        if visited[start]:
            continue
        visited[start] = True
        queue: list[tuple[int, int | None]] = [(start, None)]
        while queue:
            bi, anchor = queue.pop()
            blk = bd.blocks[bi]
            sub, ids = induced_subgraph(h, blk)
            try:
                local = _color_block(sub, k)
            except _MemberBlock as mb:
                cert = mb.cert  # already in induced-block ids
                if not allow_member:
                    raise _inconsistency(
                        "member-block-in-recursion", h, k, block=list(blk)
                    ) from None
                raise _MemberBlock(blk, cert) from None
            if anchor is not None:
                want = colors[anchor]
                got = local[bisect_left(ids, anchor)]
                if got != want:
                    local = [
                        want if c == got else got if c == want else c for c in local
                    ]
            for pos, old in enumerate(ids):
                colors[old] = local[pos]
            for cv in blk:
                for nb in by_cut.get(cv, ()):
                    if not visited[nb]:
                        visited[nb] = True
                        queue.append((nb, cv))
    return colors


def _color_block(b: Graph, k: int) -> list[int]:
    """Color one block with palette {1..k}, or raise _MemberBlock with a
    certificate in the block's own vertex ids."""
    if b.n <= k:
        return list(range(1, b.n + 1))

    sep = find_vertex_edge_separator(b)
    if sep is not None:
        return _color_block_with_separator(b, k, sep)

    high = [v for v in range(b.n) if b.degree(v) > k]
    if len(high) <= 1:
        return _color_block_degree_list(b, k)
    return _color_block_via_cut(b, k)


def _color_block_with_separator(b: Graph, k: int, sep) -> list[int]:
    v, (w1, w2) = sep.v, sep.edge
    sub1, ids1 = induced_subgraph(b, sep.part1)
    sub2, ids2 = induced_subgraph(b, sep.part2)
    pos1 = {old: i for i, old in enumerate(ids1)}
    pos2 = {old: i for i, old in enumerate(ids2)}
    aug1 = add_edges(sub1, [(pos1[v], pos1[w1])])
    aug2 = add_edges(sub2, [(pos2[v], pos2[w2])])
    cert1 = recognize_hk(aug1, k)
    cert2 = recognize_hk(aug2, k)
    if cert1 is not None and cert2 is not None:
        if b.has_edge(v, w1) or b.has_edge(v, w2):
            # both sides accepted although a virtual edge was real: the
            # proof rules this out whenever lambda <= k
            raise _inconsistency("separator-virtual-edge-present", b, k, v=v, w1=w1, w2=w2)
        cert = CertNode(
            v, w1, w2, remap_certificate(cert1, ids1), remap_certificate(cert2, ids2)
        )
        raise _MemberBlock(tuple(range(b.n)), cert)

    if cert1 is None:
        f_p = _color_graph(aug1, k, allow_member=False)
        p_ids, p_pos, wp = ids1, pos1, w1
        sec, s_ids, s_pos, ws = sub2, ids2, pos2, w2
    else:
        f_p = _color_graph(aug2, k, allow_member=False)
        p_ids, p_pos, wp = ids2, pos2, w2
        sec, s_ids, s_pos, ws = sub1, ids1, pos1, w1
    f_s = _color_graph(sec, k, allow_member=False)

    fp_v, fp_w = f_p[p_pos[v]], f_p[p_pos[wp]]
    # the virtual edge makes the primary side split colors at v / w
    assert fp_v != fp_w
    fs_v = f_s[s_pos[v]]
    if fs_v != fp_v:
        f_s = [fp_v if c == fs_v else fs_v if c == fp_v else c for c in f_s]
    fs_w = f_s[s_pos[ws]]
    if fs_w == fp_w:
        third = next(c for c in range(1, k + 1) if c not in (fp_v, fp_w))
        f_s = [third if c == fs_w else fs_w if c == third else c for c in f_s]

    colors = [0] * b.n
    for i, old in enumerate(p_ids):
        colors[old] = f_p[i]
    for i, old in enumerate(s_ids):
        colors[old] = f_s[i]
    return colors


def _color_block_degree_list(b: Graph, k: int) -> list[int]:
    vstar = min(range(b.n), key=lambda x: (-b.degree(x), x))
    rest = [x for x in range(b.n) if x != vstar]
    sub, ids = induced_subgraph(b, rest)
    star_nbrs = set(b.neighbors(vstar))
    lists = [
        range(2, k + 1) if ids[i] in star_nbrs else range(1, k + 1)
        for i in range(sub.n)
    ]
    out = degree_list_color(sub, lists)
    if isinstance(out, Coloring):
        colors = [0] * b.n
        colors[vstar] = 1
        for i, old in enumerate(ids):
            colors[old] = out.colors[i]
        return colors
    # tight Gallai-tree report with no vertex+edge separator and k >= 4
    # forces the block to be K_{k+1}
    if not (is_complete(b) and b.n == k + 1):
        raise _inconsistency("degree-list-report-not-complete", b, k)
    raise _MemberBlock(tuple(range(b.n)), CertLeaf("complete", tuple(range(b.n))))


def _color_block_via_cut(b: Graph, k: int) -> list[int]:
    found = min_cut_between_high_vertices(b, k)
    assert found is not None
    _, _, cut = found
    if len(cut.F) > k:
        raise _inconsistency(
            "cut-exceeds-k", b, k, cut=cut.to_json_obj()
        )
    a, bb = len(cut.x_boundary), len(cut.y_boundary)

    if bb <= k - 1:
        f_x = Coloring(k, tuple(_color_side(b, cut.X, k)))
        f_y = Coloring(k, tuple(_color_side(b, cut.Y, k)))
        merged = merge_cut_colorings(b, cut, f_x, f_y)
        if merged is None:
            raise _inconsistency("merge-failed-small-boundary", b, k, cut=cut.to_json_obj())
        return list(merged.colors)

    # each boundary vertex of a k-sized boundary meets exactly one cut edge
    assert len(cut.F) == k == bb
    f_x = Coloring(k, tuple(_color_clique_augmented(b, cut.X, cut.y_boundary, k)))
    if a < bb:
        f_y = Coloring(k, tuple(_color_side(b, cut.Y, k)))
    else:
        assert a == k
        f_y = Coloring(k, tuple(_color_clique_augmented(b, cut.Y, cut.x_boundary, k)))
    merged = merge_cut_colorings(b, cut, f_x, f_y)
    if merged is None:
        raise _inconsistency("merge-failed-clique-augmented", b, k, cut=cut.to_json_obj())
    return list(merged.colors)


def _color_side(b: Graph, side, k: int) -> list[int]:
    sub, _ = induced_subgraph(b, side)
    return _color_graph(sub, k, allow_member=False)


def _color_clique_augmented(b: Graph, side, other_boundary, k: int) -> list[int]:
    """Color G[side ∪ boundary] with the boundary forced into a clique, then
    restrict to the side (positions follow sorted(side))."""
    union = sorted(set(side) | set(other_boundary))
    sub, ids = induced_subgraph(b, union)
    pos = {old: i for i, old in enumerate(ids)}
    aug = add_clique(sub, [pos[x] for x in other_boundary])
    f = _color_graph(aug, k, allow_member=False)
    return [f[pos[x]] for x in sorted(side)]
