import pytest

from lambda_brooks import (
    Graph,
    JoinSpec,
    UsageError,
    block_decomposition,
    complete_graph,
    connected_components,
    cycle_graph,
    decompose_at_2cut,
    find_vertex_edge_separator,
    hajos_join,
    lambda_max,
    local_edge_connectivity,
    min_cut_between_high_vertices,
    wheel_graph,
)
from lambda_brooks.connectivity import bridges, edge_cut_from_side

from oracles import brute_min_cut


def bowtie():
    """Two triangles sharing vertex 2."""
    return Graph(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])


def join_of_two_k4():
    return hajos_join(JoinSpec(complete_graph(4), complete_graph(4), 0, 1, 0, 1)).graph


def test_connected_components():
    g = Graph(5, [(0, 1), (0, 2), (1, 2), (3, 4)])  # K_3 + K_2
    assert connected_components(g) == [[0, 1, 2], [3, 4]]
    assert connected_components(cycle_graph(5)) == [[0, 1, 2, 3, 4]]
    assert connected_components(Graph(3)) == [[0], [1], [2]]


def test_block_decomposition_path():
    g = Graph(3, [(0, 1), (1, 2)])
    bd = block_decomposition(g)
    assert bd.blocks == ((0, 1), (1, 2))
    assert bd.cut_vertices == (1,)
    assert set(bd.block_cut_tree) == {(0, 1), (1, 1)}


def test_block_decomposition_join_is_single_block():
    g = join_of_two_k4()
    bd = block_decomposition(g)
    assert bd.blocks == (tuple(range(7)),)
    assert bd.cut_vertices == ()


def test_block_decomposition_bowtie():
    bd = block_decomposition(bowtie())
    assert len(bd.blocks) == 2
    assert bd.cut_vertices == (2,)


def test_block_decomposition_edge_partition():
    for g in (bowtie(), join_of_two_k4(), wheel_graph(7), Graph(4)):
        bd = block_decomposition(g)
        from lambda_brooks import induced_subgraph

        total = sum(induced_subgraph(g, blk)[0].m for blk in bd.blocks)
        assert total == g.m


def test_local_edge_connectivity_complete():
    k4 = complete_graph(4)
    for u in range(4):
        for v in range(u + 1, 4):
            value, cut = local_edge_connectivity(k4, u, v)
            assert value == 3
            assert len(cut.F) == 3 and u in cut.X and v in cut.Y


def test_local_edge_connectivity_bowtie():
    # non-shared vertices of different triangles: both paths go through 2
    value, cut = local_edge_connectivity(bowtie(), 0, 3)
    assert value == 2 == brute_min_cut(bowtie(), 0, 3)
    assert len(cut.F) == 2


def test_local_edge_connectivity_wheel():
    w5 = wheel_graph(5)
    value, _ = local_edge_connectivity(w5, 5, 0)  # hub vs rim vertex
    assert value == 3 == brute_min_cut(w5, 5, 0)


def test_local_edge_connectivity_errors():
    with pytest.raises(UsageError):
        local_edge_connectivity(complete_graph(3), 1, 1)


def test_edge_cut_from_side():
    g = cycle_graph(4)
    cut = edge_cut_from_side(g, [0, 1])
    assert cut.F == ((0, 3), (1, 2))
    assert cut.x_boundary == (0, 1) and cut.y_boundary == (2, 3)
    with pytest.raises(UsageError):
        edge_cut_from_side(g, range(4))


def test_lambda_max():
    assert lambda_max(complete_graph(5)) == (4, (0, 1))
    assert lambda_max(wheel_graph(5))[0] == 3
    assert lambda_max(join_of_two_k4())[0] == 3
    assert lambda_max(Graph(1)) == (0, None)
    assert lambda_max(Graph(0)) == (0, None)
    assert lambda_max(Graph(3))[0] == 0


def test_bridges():
    g = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 1), (3, 4)])
    assert bridges(g) == [(0, 1), (3, 4)]
    assert bridges(complete_graph(4)) == []


def test_vertex_edge_separator_on_join():
    g = join_of_two_k4()
    sep = find_vertex_edge_separator(g)
    assert sep is not None
    v, (w1, w2) = sep.v, sep.edge
    assert not g.has_edge(v, w1) and not g.has_edge(v, w2)
    assert set(sep.part1) & set(sep.part2) == {v}
    assert set(sep.part1) | set(sep.part2) == set(range(g.n))
    # removing v and the edge really disconnects
    rest = Graph(g.n, [e for e in g.edges() if e != (min(w1, w2), max(w1, w2))])
    from lambda_brooks import induced_subgraph, is_connected

    sub, _ = induced_subgraph(rest, [x for x in range(g.n) if x != v])
    assert not is_connected(sub)


def test_vertex_edge_separator_absent_on_k5():
    assert find_vertex_edge_separator(complete_graph(5)) is None


def test_vertex_edge_separator_on_cycle():
    sep = find_vertex_edge_separator(cycle_graph(5))
    assert sep is not None
    assert sep.v not in sep.edge


def test_vertex_edge_separator_errors():
    with pytest.raises(UsageError):
        find_vertex_edge_separator(Graph(4, [(0, 1), (2, 3)]))  # disconnected
    with pytest.raises(UsageError):
        find_vertex_edge_separator(Graph(2, [(0, 1)]))  # too small


def test_decompose_at_2cut():
    c4 = cycle_graph(4)
    dec = decompose_at_2cut(c4, [0, 2])
    assert dec.side1.n == 3 and dec.side1.m == 2  # path of length 2
    assert dec.side2.n == 3 and dec.side2.m == 2
    assert not dec.extra_components

    two_tri = Graph(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])  # share edge (1,2)
    dec = decompose_at_2cut(two_tri, [1, 2])
    assert dec.side1.m == 3 and dec.side2.m == 3  # two triangles

    with pytest.raises(UsageError):
        decompose_at_2cut(complete_graph(4), [0, 1])


def test_decompose_at_2cut_extra_components_flag():
    star = Graph(5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2)])
    dec = decompose_at_2cut(star, [0, 1])
    assert dec.extra_components  # vertices 3 and 4 fall apart separately


def test_min_cut_between_high_vertices():
    # K_{k+1}: nobody exceeds degree k
    assert min_cut_between_high_vertices(complete_graph(5), 4) is None
    # star K_{1,6}: only the hub exceeds degree 4
    star = Graph(7, [(0, i) for i in range(1, 7)])
    assert min_cut_between_high_vertices(star, 4) is None


def test_min_cut_between_high_vertices_two_k5():
    # two K_5s with interleaved ids joined by a 4-edge matching so the two
    # smallest-id high vertices straddle the cut
    left = [0, 2, 4, 6, 8]
    right = [1, 3, 5, 7, 9]
    edges = [(a, b) for i, a in enumerate(left) for b in left[i + 1 :]]
    edges += [(a, b) for i, a in enumerate(right) for b in right[i + 1 :]]
    matching = [(0, 1), (2, 3), (4, 5), (6, 7)]
    g = Graph(10, edges + matching)
    res = min_cut_between_high_vertices(g, 4)
    assert res is not None
    u, w, cut = res
    assert (u, w) == (0, 1)
    assert len(cut.F) == 4 == brute_min_cut(g, 0, 1)
    assert set(cut.F) == set(matching)
    assert len(cut.x_boundary) <= len(cut.y_boundary)


def test_join_arithmetic():
    res = hajos_join(JoinSpec(complete_graph(4), complete_graph(4), 0, 1, 0, 1))
    assert res.graph.n == 7 and res.graph.m == 11
    res = hajos_join(JoinSpec(cycle_graph(5), cycle_graph(5), 0, 1, 0, 1))
    assert res.graph.n == 9 and res.graph.m == 9
