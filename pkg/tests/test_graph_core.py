import pytest

from lambda_brooks import (
    Graph,
    UsageError,
    add_clique,
    coloring_number,
    complete_graph,
    cycle_graph,
    degree_extremes,
    generate,
    GeneratorSpec,
    induced_subgraph,
    is_complete,
    is_odd_cycle,
    is_odd_wheel,
    wheel_graph,
)
from lambda_brooks.graph import add_edges, cycle_order, delete_edge
from lambda_brooks.io import write_json_graph

from oracles import brute_chromatic


def test_construction_normalizes():
    g = Graph(4, [(1, 0), (0, 1), (2, 3)])
    assert g.m == 2
    assert g.neighbors(0) == (1,)
    assert g.has_edge(3, 2)
    g.validate()


def test_loops_rejected():
    with pytest.raises(UsageError):
        Graph(3, [(1, 1)])


def test_out_of_range_rejected():
    with pytest.raises(UsageError):
        Graph(2, [(0, 2)])
    with pytest.raises(UsageError):
        Graph(2, []).degree(5)


def test_degree_examples():
    k5 = complete_graph(5)
    assert all(k5.degree(v) == 4 for v in range(5))
    c5 = cycle_graph(5)
    assert all(c5.degree(v) == 2 for v in range(5))
    w5 = wheel_graph(5)
    assert w5.degree(5) == 5  # hub joined to all rim vertices


def test_degree_extremes():
    assert degree_extremes(complete_graph(4)) == (3, 3)
    assert degree_extremes(wheel_graph(5)) == (3, 5)
    assert degree_extremes(Graph(0)) == (0, 0)  # paper convention for empty G


def test_coloring_number_examples():
    assert coloring_number(cycle_graph(5))[0] == 3
    assert coloring_number(complete_graph(5))[0] == 5
    assert coloring_number(Graph(0))[0] == 1


def test_coloring_number_greedy_bound():
    # greedy along the returned order never needs more than col colors
    for seed in range(30):
        g = generate(GeneratorSpec("gnp", {"n": 9, "p": 0.4}, seed))
        col, order = coloring_number(g)
        colors = {}
        used = 0
        for v in order:
            taken = {colors[u] for u in g.neighbors(v) if u in colors}
            c = 1
            while c in taken:
                c += 1
            colors[v] = c
            used = max(used, c)
        assert used <= col
        assert brute_chromatic(g) <= col


def test_induced_subgraph():
    k5 = complete_graph(5)
    sub, ids = induced_subgraph(k5, [0, 2, 4])
    assert is_complete(sub) and sub.n == 3
    assert ids == (0, 2, 4)
    c5 = cycle_graph(5)
    sub, _ = induced_subgraph(c5, [0, 1])
    assert sub.m == 1
    full, ids = induced_subgraph(c5, range(5))
    assert full == c5 and ids == tuple(range(5))


def test_add_clique():
    empty3 = Graph(3)
    assert is_complete(add_clique(empty3, [0, 1, 2]))
    k3 = complete_graph(3)
    assert add_clique(k3, [0, 1, 2]) == k3  # idempotent
    path = Graph(3, [(0, 1), (1, 2)])
    assert is_complete(add_clique(path, [0, 2]))


def test_shape_predicates():
    assert is_odd_wheel(complete_graph(4)) is not None  # K_4 is the rim-3 wheel
    assert is_odd_cycle(cycle_graph(7))
    c6 = cycle_graph(6)
    assert not is_complete(c6) and not is_odd_cycle(c6) and is_odd_wheel(c6) is None
    assert is_odd_wheel(wheel_graph(9)) == 9


def test_cycle_order_canonical():
    c = cycle_graph(5)
    assert cycle_order(c) == (0, 1, 2, 3, 4)
    with pytest.raises(UsageError):
        cycle_order(complete_graph(4))


def test_generate_kinds():
    assert generate(GeneratorSpec("complete", {"n": 5})) == complete_graph(5)
    w = generate(GeneratorSpec("wheel", {"rim": 5}))
    assert w.n == 6
    with pytest.raises(UsageError):
        generate(GeneratorSpec("wheel", {"rim": 4}))  # rim must be odd
    with pytest.raises(UsageError):
        generate(GeneratorSpec("gnp", {"n": 5, "p": 1.5}))
    with pytest.raises(UsageError):
        generate(GeneratorSpec("nonsense", {}))


def test_generate_deterministic():
    spec = GeneratorSpec("gnp", {"n": 10, "p": 0.5}, seed=1)
    a, b = generate(spec), generate(spec)
    assert a == b
    assert write_json_graph(a) == write_json_graph(b)
    # a different seed changes the graph (overwhelmingly likely at n=10)
    assert generate(GeneratorSpec("gnp", {"n": 10, "p": 0.5}, seed=2)) != a


def test_generate_hosted_and_tower():
    tower = generate(GeneratorSpec("hajos-tower", {"k": 4, "joins": 1}, seed=3))
    assert tower.n == 9
    hosted = generate(
        GeneratorSpec("hosted", {"core": {"kind": "complete", "n": 5}, "budget": 0}, seed=1)
    )
    assert hosted == complete_graph(5)


def test_edit_helpers():
    g = add_edges(Graph(3), [(0, 1)])
    assert g.m == 1
    assert delete_edge(g, 0, 1).m == 0
    with pytest.raises(UsageError):
        delete_edge(g, 0, 2)
