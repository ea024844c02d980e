"""The Hajos join, recursive class recognition with replayable certificates,
certificate verification, and generators for certified members and hosts.

A certificate is a binary tree over explicit vertex ids of the target
graph: leaves name base graphs (complete graphs, odd wheels, odd cycles,
single edges/vertices depending on the parameter k), internal nodes record
the join parameters (identified vertex v, the two edge endpoints w1, w2).
Verification replays the construction bottom-up and compares edge sets
exactly; no isomorphism testing is ever involved.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .connectivity import find_vertex_edge_separator, is_connected
from .errors import UsageError
from .graph import (
    Graph,
    add_edges,
    complete_graph,
    cycle_order,
    induced_subgraph,
    is_complete,
    is_odd_cycle,
    is_odd_wheel,
    normalize_edge,
    wheel_graph,
)
from .rng import SplitMix64

BASE_KINDS = ("complete", "odd_wheel", "odd_cycle", "single_edge", "single_vertex")


@dataclass(frozen=True)
class CertLeaf:
    base: str
    vertices: tuple[int, ...]  # odd_wheel: hub first, rim in cyclic order;
    # odd_cycle: cyclic order; complete: any order


@dataclass(frozen=True)
class CertNode:
    v: int
    w1: int
    w2: int
    left: "Certificate"   # covers the side containing w1
    right: "Certificate"  # covers the side containing w2


Certificate = Union[CertLeaf, CertNode]


def certificate_to_json_obj(cert: Certificate) -> dict:
    if isinstance(cert, CertLeaf):
        return {"base": cert.base, "vertices": list(cert.vertices)}
    return {
        "v": cert.v,
        "w1": cert.w1,
        "w2": cert.w2,
        "left": certificate_to_json_obj(cert.left),
        "right": certificate_to_json_obj(cert.right),
    }


def certificate_from_json_obj(obj) -> Certificate:
    if not isinstance(obj, dict):
        raise UsageError("certificate node must be a JSON object")
    if "base" in obj:
        base = obj.get("base")
        vertices = obj.get("vertices")
        if base not in BASE_KINDS:
            raise UsageError(f"unknown base kind {base!r}")
        if not isinstance(vertices, list) or not all(isinstance(x, int) for x in vertices):
            raise UsageError("leaf vertices must be a list of ints")
        return CertLeaf(base, tuple(vertices))
    try:
        return CertNode(
            int(obj["v"]),
            int(obj["w1"]),
            int(obj["w2"]),
            certificate_from_json_obj(obj["left"]),
            certificate_from_json_obj(obj["right"]),
        )
    except KeyError as exc:
        raise UsageError(f"certificate node missing field {exc}") from None


def remap_certificate(cert: Certificate, old_to_new) -> Certificate:
    """Rewrite all vertex ids through a mapping (sequence or dict)."""
    if isinstance(cert, CertLeaf):
        return CertLeaf(cert.base, tuple(old_to_new[v] for v in cert.vertices))
    return CertNode(
        old_to_new[cert.v],
        old_to_new[cert.w1],
        old_to_new[cert.w2],
        remap_certificate(cert.left, old_to_new),
        remap_certificate(cert.right, old_to_new),
    )


# -- the join ----------------------------------------------------------------


@dataclass(frozen=True)
class JoinSpec:
    """Join parameters: edge (v1, w1) of `left`, edge (v2, w2) of `right`.

    v1 and v2 are identified; the orientation of each pair matters.
    """

    left: Graph
    right: Graph
    v1: int
    w1: int
    v2: int
    w2: int


@dataclass(frozen=True)
class JoinResult:
    graph: Graph
    v: int
    w1: int
    w2: int  # ids in the joined graph
    left_map: tuple[int, ...]   # left old id -> new id (identity)
    right_map: tuple[int, ...]  # right old id -> new id


def hajos_join(spec: JoinSpec) -> JoinResult:
    """Delete v1w1 and v2w2, identify v1 with v2, add the new edge w1w2.

    Left ids are kept; right ids are shifted past the left graph with v2
    mapped onto v1. The result always has |V1|+|V2|-1 vertices and
    |E1|+|E2|-1 edges.
    """
    g1, g2 = spec.left, spec.right
    if not g1.has_edge(spec.v1, spec.w1):
        raise UsageError(f"({spec.v1},{spec.w1}) is not an edge of the left graph")
    if not g2.has_edge(spec.v2, spec.w2):
        raise UsageError(f"({spec.v2},{spec.w2}) is not an edge of the right graph")
    left_map = tuple(range(g1.n))
    right_map = tuple(
        spec.v1 if x == spec.v2 else (g1.n + x if x < spec.v2 else g1.n + x - 1)
        for x in range(g2.n)
    )
    e1 = normalize_edge(spec.v1, spec.w1)
    e2 = normalize_edge(spec.v2, spec.w2)
    edges = [e for e in g1.edges() if e != e1]
    edges += [
        normalize_edge(right_map[u], right_map[v]) for u, v in g2.edges() if (u, v) != e2
    ]
    w2_new = right_map[spec.w2]
    edges.append(normalize_edge(spec.w1, w2_new))
    joined = Graph(g1.n + g2.n - 1, edges)
    return JoinResult(joined, spec.v1, spec.w1, w2_new, left_map, right_map)


# -- recognition -------------------------------------------------------------


def recognize_hk(g: Graph, k: int) -> Certificate | None:
    """Certificate of membership in the k-th Hajos-closed class, or None.

    For k <= 2 the class consists of the base shapes alone (single vertex,
    single edge, odd cycles) and the test is direct. For k >= 3 the
    recognizer checks the base shape (odd wheels when k = 3, complete graphs
    of order k+1 when k >= 4) and otherwise splits at the first vertex+edge
    separator in canonical order, recursing on both parts with the virtual
    edges vw1 / vw2 added. No backtracking over separator choices is needed:
    every separator of a true member splits it into two members.
    """
    if k < 0:
        raise UsageError("k must be non-negative")
    if not is_connected(g):
        raise UsageError("recognition requires a connected graph")
    return _recognize(g, k)


def _recognize(g: Graph, k: int) -> Certificate | None:
    if k == 0:
        return CertLeaf("single_vertex", (0,)) if (g.n == 1 and g.m == 0) else None
    if k == 1:
        return CertLeaf("single_edge", (0, 1)) if (g.n == 2 and g.m == 1) else None
    if k == 2:
        return CertLeaf("odd_cycle", cycle_order(g)) if is_odd_cycle(g) else None
    if k == 3:
        hub = is_odd_wheel(g)
        if hub is not None:
            rim, rim_ids = induced_subgraph(g, [v for v in range(g.n) if v != hub])
            order = tuple(rim_ids[i] for i in cycle_order(rim))
            return CertLeaf("odd_wheel", (hub,) + order)
    elif is_complete(g) and g.n == k + 1:
        return CertLeaf("complete", tuple(range(g.n)))
    if g.n < 3:
        return None
    sep = find_vertex_edge_separator(g)
    if sep is None:
        return None
    v, (w1, w2) = sep.v, sep.edge
    # A member never induces the virtual edge: if vw_i is already present,
    # the replayed join cannot reproduce this graph and no other
    # decomposition can either (the graph would properly contain a member,
    # so it is not critical and not in the class).
    if g.has_edge(v, w1) or g.has_edge(v, w2):
        return None
    left = _recognize_part(g, k, sep.part1, v, w1)
    if left is None:
        return None
    right = _recognize_part(g, k, sep.part2, v, w2)
    if right is None:
        return None
    return CertNode(v, w1, w2, left, right)


def _recognize_part(g: Graph, k: int, part, v: int, w: int) -> Certificate | None:
    sub, old_ids = induced_subgraph(g, part)
    new_ids = {old: new for new, old in enumerate(old_ids)}
    candidate = add_edges(sub, [(new_ids[v], new_ids[w])])
    cert = _recognize(candidate, k)
    return None if cert is None else remap_certificate(cert, old_ids)


# -- verification ------------------------------------------------------------


@dataclass(frozen=True)
class CertificateCheck:
    ok: bool
    reason: str | None = None  # machine-readable first failure, None when ok

    def __bool__(self) -> bool:
        return self.ok


def verify_certificate(g: Graph, k: int, cert: Certificate) -> CertificateCheck:
    """Structural replay of a certificate against its target graph.

    Reconstructs the edge set bottom-up (leaf shapes by convention, joins by
    delete-identify-add) and demands exact equality with E(G) over all of
    V(G). Runs in linear time in the certificate size; never searches.
    """
    try:
        vertex_set, edge_set = _replay(g, k, cert, "cert")
    except _CertFail as exc:
        return CertificateCheck(False, str(exc))
    if vertex_set != set(range(g.n)):
        return CertificateCheck(False, "cert: vertex set does not cover the target graph")
    actual = set(g.edges())
    if edge_set != actual:
        missing = sorted(actual - edge_set)
        extra = sorted(edge_set - actual)
        return CertificateCheck(
            False, f"cert: replayed edges differ (missing={missing}, extra={extra})"
        )
    return CertificateCheck(True, None)


class _CertFail(Exception):
    pass


def _replay(g: Graph, k: int, cert: Certificate, path: str) -> tuple[set[int], set]:
    if isinstance(cert, CertLeaf):
        return _replay_leaf(g, k, cert, path)
    if k <= 2:
        raise _CertFail(f"{path}: join nodes are not allowed for k={k}")
    left_v, left_e = _replay(g, k, cert.left, path + ".left")
    right_v, right_e = _replay(g, k, cert.right, path + ".right")
    v, w1, w2 = cert.v, cert.w1, cert.w2
    if left_v & right_v != {v}:
        raise _CertFail(f"{path}: sides must share exactly the identified vertex {v}")
    if w1 not in left_v or w1 == v:
        raise _CertFail(f"{path}: w1={w1} must lie in the left side and differ from v")
    if w2 not in right_v or w2 == v:
        raise _CertFail(f"{path}: w2={w2} must lie in the right side and differ from v")
    e1 = normalize_edge(v, w1)
    e2 = normalize_edge(v, w2)
    if e1 not in left_e:
        raise _CertFail(f"{path}: edge {e1} to delete is absent on the left")
    if e2 not in right_e:
        raise _CertFail(f"{path}: edge {e2} to delete is absent on the right")
    edges = (left_e - {e1}) | (right_e - {e2})
    edges.add(normalize_edge(w1, w2))
    return left_v | right_v, edges


def _replay_leaf(g: Graph, k: int, leaf: CertLeaf, path: str) -> tuple[set[int], set]:
    vs = leaf.vertices
    if len(set(vs)) != len(vs):
        raise _CertFail(f"{path}: repeated vertex in leaf")
    for x in vs:
        if not (0 <= x < g.n):
            raise _CertFail(f"{path}: vertex {x} out of range")
    kind = leaf.base
    if kind == "complete":
        if not (k >= 4 or k <= 1):
            raise _CertFail(f"{path}: complete base illegal for k={k}")
        if len(vs) != k + 1:
            raise _CertFail(f"{path}: complete base must have order {k + 1}")
        edges = {
            normalize_edge(a, b) for i, a in enumerate(vs) for b in vs[i + 1 :]
        }
    elif kind == "odd_wheel":
        if k != 3:
            raise _CertFail(f"{path}: odd_wheel base illegal for k={k}")
        hub, rim = vs[0], vs[1:]
        if len(rim) < 3 or len(rim) % 2 == 0:
            raise _CertFail(f"{path}: wheel rim must be odd and >= 3")
        edges = {normalize_edge(hub, r) for r in rim}
        edges |= {
            normalize_edge(rim[i], rim[(i + 1) % len(rim)]) for i in range(len(rim))
        }
    elif kind == "odd_cycle":
        if k != 2:
            raise _CertFail(f"{path}: odd_cycle base illegal for k={k}")
        if len(vs) < 3 or len(vs) % 2 == 0:
            raise _CertFail(f"{path}: odd cycle must have odd length >= 3")
        edges = {normalize_edge(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))}
    elif kind == "single_edge":
        if k != 1 or len(vs) != 2:
            raise _CertFail(f"{path}: single_edge base only valid for k=1")
        edges = {normalize_edge(vs[0], vs[1])}
    elif kind == "single_vertex":
        if k != 0 or len(vs) != 1:
            raise _CertFail(f"{path}: single_vertex base only valid for k=0")
        edges = set()
    else:
        raise _CertFail(f"{path}: unknown base kind {kind!r}")
    return set(vs), edges


# -- generators --------------------------------------------------------------


def gen_hk_random(k: int, joins: int, seed: int) -> tuple[Graph, Certificate]:
    """Random certified member: joins+1 base graphs folded by repeated joins.

    Bases are odd wheels with rim in {3, 5, 7} for k = 3, complete graphs of
    order k+1 for k >= 4. Edge choices and orientations are drawn from the
    seeded generator, so output is a pure function of (k, joins, seed).
    """
    if k < 3:
        raise UsageError("generation needs k >= 3")
    if joins < 0:
        raise UsageError("joins must be non-negative")
    rng = SplitMix64(seed)
    graph, cert = _random_base(k, rng)
    for _ in range(joins):
        base, base_cert = _random_base(k, rng)
        e1 = rng.choice(graph.edge_list())
        e2 = rng.choice(base.edge_list())
        v1, w1 = e1 if rng.coin() else (e1[1], e1[0])
        v2, w2 = e2 if rng.coin() else (e2[1], e2[0])
        res = hajos_join(JoinSpec(graph, base, v1, w1, v2, w2))
        cert = CertNode(
            res.v, res.w1, res.w2, cert, remap_certificate(base_cert, res.right_map)
        )
        graph = res.graph
    return graph, cert


def _random_base(k: int, rng: SplitMix64) -> tuple[Graph, Certificate]:
    if k == 3:
        rim = rng.choice((3, 5, 7))
        g = wheel_graph(rim)
        return g, CertLeaf("odd_wheel", (rim,) + tuple(range(rim)))
    g = complete_graph(k + 1)
    return g, CertLeaf("complete", tuple(range(k + 1)))


def embed_in_host(core: Graph, pendant_budget: int, seed: int) -> Graph:
    """Attach pendant trees and pendant triangles at random core vertices.

    No edge between two core vertices is ever added, so the core stays a
    block of the result. With a positive budget the first attachment is a
    triangle, which pins the maximum local edge connectivity of the result
    at max(lambda(core), 2).
    """
    if not is_connected(core):
        raise UsageError("host embedding needs a connected core")
    if pendant_budget < 0:
        raise UsageError("pendant budget must be non-negative")
    rng = SplitMix64(seed)
    n = core.n
    edges = core.edge_list()
    for i in range(pendant_budget):
        anchor = rng.randrange(core.n)
        if i == 0 or rng.coin():
            edges += [(anchor, n), (anchor, n + 1), (n, n + 1)]
            n += 2
        else:
            size = 1 + rng.randrange(3)
            attach = [anchor]
            for _ in range(size):
                edges.append((rng.choice(attach), n))
                attach.append(n)
                n += 1
    return Graph(n, edges)
