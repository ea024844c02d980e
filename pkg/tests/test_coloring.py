import itertools

import pytest

from lambda_brooks import (
    Coloring,
    GallaiTreeReport,
    Graph,
    JoinSpec,
    ResourceLimitError,
    UsageError,
    complete_graph,
    cycle_graph,
    degree_list_color,
    exact_chromatic,
    exact_k_colorable,
    find_merge_permutation,
    hajos_join,
    is_critical,
    is_gallai_forest,
    is_proper,
    low_high_split,
    merge_cut_colorings,
    permute_colors,
    wheel_graph,
)
from lambda_brooks.connectivity import edge_cut_from_side
from lambda_brooks.generate import GeneratorSpec, generate

from oracles import (
    brute_chromatic,
    brute_k_colorable,
    brute_list_colorable,
    brute_merge_exists,
    is_star_relation,
)


def test_is_proper():
    k3 = complete_graph(3)
    assert is_proper(k3, Coloring(3, (1, 2, 3)))
    assert not is_proper(k3, Coloring(3, (1, 1, 2)))
    assert is_proper(Graph(3), Coloring(1, (1, 1, 1)))
    with pytest.raises(UsageError):
        is_proper(k3, Coloring(3, (1, 2)))  # partial
    with pytest.raises(UsageError):
        is_proper(k3, Coloring(2, (1, 2, 3)))  # outside palette


def test_exact_chromatic_examples():
    assert exact_chromatic(cycle_graph(5))[0] == 3
    assert exact_chromatic(complete_graph(6))[0] == 6
    join = hajos_join(JoinSpec(complete_graph(4), complete_graph(4), 0, 1, 0, 1)).graph
    assert exact_chromatic(join)[0] == 4
    chi, witness = exact_chromatic(wheel_graph(5))
    assert chi == 4 and is_proper(wheel_graph(5), witness)
    assert exact_chromatic(Graph(0)) == (0, Coloring(0, ()))


def test_exact_chromatic_matches_brute_force():
    for seed in range(60):
        g = generate(GeneratorSpec("gnp", {"n": 3 + seed % 6, "p": 0.45}, seed))
        chi, witness = exact_chromatic(g)
        assert chi == brute_chromatic(g)
        assert is_proper(g, witness) and max(witness.colors, default=0) <= chi


def test_exact_k_colorable():
    assert exact_k_colorable(cycle_graph(5), 2) is None
    col = exact_k_colorable(cycle_graph(5), 3)
    assert col is not None and is_proper(cycle_graph(5), col)
    assert exact_k_colorable(wheel_graph(5), 3) is None
    assert exact_k_colorable(Graph(2), 1) is not None


def test_oracle_limit():
    with pytest.raises(ResourceLimitError):
        exact_chromatic(Graph(30), limit=26)
    assert exact_chromatic(Graph(30), limit=31)[0] == 1
    monkey = pytest.MonkeyPatch()
    monkey.setenv("LAMBDA_BROOKS_ORACLE_LIMIT", "5")
    try:
        with pytest.raises(ResourceLimitError):
            exact_chromatic(complete_graph(6))
    finally:
        monkey.undo()


def test_is_critical():
    assert is_critical(cycle_graph(5))
    assert not is_critical(cycle_graph(6))
    assert is_critical(complete_graph(4))
    assert not is_critical(wheel_graph(5).__class__(5, []))  # edgeless, n > 1
    assert is_critical(Graph(1))
    assert not is_critical(Graph(4, [(0, 1), (1, 2), (2, 0)]))  # K_3 plus isolated vertex
    join = hajos_join(JoinSpec(complete_graph(4), complete_graph(4), 0, 1, 0, 1)).graph
    assert is_critical(join)


def test_low_high_split():
    k5 = complete_graph(5)
    split = low_high_split(k5, 4)
    assert split.low == k5 and split.high.n == 0 and not split.below

    w5 = wheel_graph(5)
    split = low_high_split(w5, 3)
    assert split.low.n == 5 and split.low.m == 5  # the rim cycle
    assert split.high_map == (5,)  # the hub

    join = hajos_join(JoinSpec(complete_graph(4), complete_graph(4), 0, 1, 0, 1)).graph
    split = low_high_split(join, 3)
    assert split.high.n == 1 and join.degree(split.high_map[0]) == 6

    split = low_high_split(w5, 4)
    assert split.below  # rim vertices have degree 3 < 4


def test_is_gallai_forest():
    tree = Graph(5, [(0, 1), (1, 2), (1, 3), (3, 4)])
    assert is_gallai_forest(tree).ok
    assert not is_gallai_forest(cycle_graph(4)).ok
    two_k4 = Graph(7, [(a, b) for a in range(4) for b in range(a)] +
                   [(3, 4), (3, 5), (3, 6), (4, 5), (4, 6), (5, 6)])
    assert is_gallai_forest(two_k4).ok
    report = is_gallai_forest(cycle_graph(7))
    assert report.ok and report.blocks[0][1] == "odd_cycle"


def test_degree_list_color_even_cycle():
    c6 = cycle_graph(6)
    out = degree_list_color(c6, [{1, 2}] * 6)
    assert isinstance(out, Coloring)
    assert is_proper(c6, out)
    assert all(c in (1, 2) for c in out.colors)


def test_degree_list_color_tight_reports():
    out = degree_list_color(Graph(2, [(0, 1)]), [{1}, {1}])
    assert isinstance(out, GallaiTreeReport)
    assert out.tight and out.blocks[0][1] == "complete"

    out = degree_list_color(cycle_graph(5), [{1, 2}] * 5)
    assert isinstance(out, GallaiTreeReport)
    assert out.blocks[0][1] == "odd_cycle"


def test_degree_list_color_surplus_vertex():
    # a path with one roomy list: greedy from the surplus end
    path = Graph(4, [(0, 1), (1, 2), (2, 3)])
    out = degree_list_color(path, [{1}, {1, 2}, {1, 2}, {2}])
    assert isinstance(out, Coloring)
    assert is_proper(path, out)
    assert out.colors[0] == 1 and out.colors[3] == 2


def test_degree_list_color_non_gallai_block():
    # C_4 is 2-connected, neither complete nor an odd cycle: tight identical
    # lists must still be colorable
    c4 = cycle_graph(4)
    out = degree_list_color(c4, [{1, 2}] * 4)
    assert isinstance(out, Coloring) and is_proper(c4, out)

    k23 = Graph(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)])
    lists = [{1, 2, 3}, {1, 2, 3}, {1, 2}, {1, 2}, {1, 2}]
    out = degree_list_color(k23, lists)
    assert isinstance(out, Coloring)
    assert all(out.colors[v] in lists[v] for v in range(5))


def test_degree_list_color_respects_lists_randomly():
    for seed in range(40):
        g = generate(GeneratorSpec("gnp", {"n": 7, "p": 0.5}, seed))
        from lambda_brooks.connectivity import is_connected

        if not is_connected(g):
            continue
        lists = [set(range(1, g.degree(v) + 1 + (seed + v) % 2)) for v in range(g.n)]
        out = degree_list_color(g, lists)
        if isinstance(out, Coloring):
            assert is_proper(g, out)
            assert all(out.colors[v] in lists[v] for v in range(g.n))
        else:
            # reports only happen in the tight Gallai-tree situation
            assert out.tight
            assert all(kind != "other" for _, kind in out.blocks)
            # for 2-connected graphs with identical tight lists this is
            # exactly the unsolvable case
            bd_blocks = out.blocks
            if len(bd_blocks) == 1 and len(set(map(tuple, lists))) == 1:
                assert not brute_list_colorable(g, [sorted(l) for l in lists])


def test_degree_list_color_errors():
    with pytest.raises(UsageError):
        degree_list_color(cycle_graph(4), [{1}] * 4)  # list smaller than degree
    with pytest.raises(UsageError):
        degree_list_color(Graph(2), [{1}, {1}])  # disconnected
    with pytest.raises(UsageError):
        degree_list_color(Graph(1), [set()])


def test_find_merge_permutation_basic():
    # one conflicting pair: any transposition resolves it
    pi = find_merge_permutation(3, {(1, 1)})
    assert pi is not None and pi[1] != 1
    # conflict-free: identity works and is found first
    assert find_merge_permutation(3, set())[1:] == [1, 2, 3]
    # the star: one X color against all k Y colors
    star = {(2, y) for y in range(1, 5)}
    assert find_merge_permutation(4, star) is None


def test_merge_cut_colorings_identity_and_transposition():
    g = Graph(2, [(0, 1)])
    cut = edge_cut_from_side(g, [0])
    both = merge_cut_colorings(g, cut, Coloring(2, (1,)), Coloring(2, (2,)))
    assert both is not None and is_proper(g, both)
    conflicted = merge_cut_colorings(g, cut, Coloring(2, (1,)), Coloring(2, (1,)))
    assert conflicted is not None and is_proper(g, conflicted)


def test_merge_cut_colorings_star_absent():
    # 4-edge star: X vertex 0 joined to 4 rainbow Y vertices
    g = Graph(5, [(0, i) for i in range(1, 5)])
    cut = edge_cut_from_side(g, [0])
    f_x = Coloring(4, (1,))
    f_y = Coloring(4, (1, 2, 3, 4))
    assert merge_cut_colorings(g, cut, f_x, f_y) is None
    # matches the exhaustive search over all 24 permutations
    assert not brute_merge_exists(4, {(1, y) for y in range(1, 5)})


def test_merge_cut_colorings_validates():
    g = Graph(2, [(0, 1)])
    cut = edge_cut_from_side(g, [0])
    with pytest.raises(UsageError):
        merge_cut_colorings(g, cut, Coloring(2, (1,)), Coloring(3, (1,)))
    k3 = complete_graph(3)
    cut3 = edge_cut_from_side(k3, [0])
    with pytest.raises(UsageError):
        merge_cut_colorings(k3, cut3, Coloring(1, (1,)), Coloring(1, (1, 1)))


def test_merge_matches_brute_force_sampled():
    # exhaustive sweep lives in the acceptance suite; spot-check k=3 here
    k = 3
    cells = list(itertools.product(range(1, k + 1), repeat=2))
    for size in (1, 2, 3, 4):
        for conflicts in itertools.combinations(cells, size):
            got = find_merge_permutation(k, set(conflicts))
            want = brute_merge_exists(k, set(conflicts))
            assert (got is not None) == want
            if got is None and len(set(conflicts)) <= k:
                assert is_star_relation(k, set(conflicts))


def test_permute_colors():
    f = Coloring(3, (1, 2, 3))
    assert permute_colors(f, {1: 1, 2: 2, 3: 3}) == f
    swapped = permute_colors(f, {1: 2, 2: 1, 3: 3})
    assert swapped.colors == (2, 1, 3)
    assert is_proper(complete_graph(3), swapped)
    # composition: applying pi then its inverse restores f
    pi = {1: 3, 2: 1, 3: 2}
    inv = {v: k for k, v in pi.items()}
    assert permute_colors(permute_colors(f, pi), inv) == f
    with pytest.raises(UsageError):
        permute_colors(f, {1: 1, 2: 2, 3: 2})
