from itertools import combinations

import pytest
from hypothesis import given

from bchromatic.generators import (
    complete_graph,
    cycle_graph,
    empty_graph,
    path_graph,
    petersen_graph,
    star_graph,
)
from bchromatic.graph import (
    Graph,
    GraphError,
    degree,
    delete_vertex,
    distance,
    girth,
    induced_subgraph,
    is_connected,
    max_degree,
    neighbors,
    second_neighborhood,
)

from conftest import small_graphs


def brute_girth(g):
    """Shortest cycle by trying every vertex sequence (tiny graphs only)."""
    from itertools import permutations

    best = None
    for length in range(3, g.n + 1):
        for seq in permutations(range(g.n), length):
            if seq[0] != min(seq):
                continue
            if all(g.has_edge(seq[i], seq[(i + 1) % length]) for i in range(length)):
                return length
    return best


class TestConstruction:
    def test_rejects_self_loop(self):
        with pytest.raises(GraphError):
            Graph.from_edges(3, [(1, 1)])

    def test_rejects_asymmetric_masks(self):
        with pytest.raises(GraphError):
            Graph(2, [0b10, 0b00])

    def test_collapses_duplicate_edges(self):
        g = Graph.from_edges(3, [(0, 1), (1, 0), (0, 1)])
        assert g.num_edges == 1

    def test_out_of_range_edge(self):
        with pytest.raises(GraphError):
            Graph.from_edges(2, [(0, 2)])

    def test_equality_and_hash(self):
        a = Graph.from_edges(3, [(0, 1), (1, 2)])
        b = path_graph(3)
        assert a == b and hash(a) == hash(b)
        assert a != complete_graph(3)


@pytest.mark.parametrize(
    "g, v, expected",
    [
        (complete_graph(3), 0, {1, 2}),
        (empty_graph(4), 2, set()),
        (cycle_graph(5), 0, {1, 4}),
    ],
)
def test_neighbors(g, v, expected):
    assert neighbors(g, v) == expected


@pytest.mark.parametrize(
    "g, v, expected",
    [(complete_graph(4), 2, 3), (star_graph(5), 0, 5), (path_graph(4), 1, 2)],
)
def test_degree(g, v, expected):
    assert degree(g, v) == expected


def test_out_of_range_vertex():
    with pytest.raises(GraphError):
        neighbors(path_graph(3), 3)
    with pytest.raises(GraphError):
        degree(path_graph(3), -1)


def test_max_degree():
    assert max_degree(complete_graph(5)) == 4
    assert max_degree(path_graph(4)) == 2
    assert max_degree(petersen_graph()) == 3
    with pytest.raises(GraphError):
        max_degree(empty_graph(0))


def test_distance():
    c6 = cycle_graph(6)
    assert distance(c6, 4, 4) == 0
    assert distance(c6, 0, 3) == 3
    assert distance(Graph.from_edges(4, [(0, 1), (2, 3)]), 0, 3) is None


def test_second_neighborhood():
    assert second_neighborhood(path_graph(4), 0) == {2}
    assert second_neighborhood(complete_graph(4), 1) == set()
    assert second_neighborhood(cycle_graph(5), 0) == {2, 3}


def test_girth_examples():
    assert girth(complete_graph(3)) == 3
    assert girth(star_graph(4)) is None
    assert girth(path_graph(6)) is None
    assert girth(petersen_graph()) == 5
    assert girth(cycle_graph(7)) == 7


def test_delete_vertex():
    h, mapping = delete_vertex(complete_graph(4), 1)
    assert h == complete_graph(3)
    assert mapping == {0: 0, 2: 1, 3: 2}
    assert delete_vertex(cycle_graph(5), 2)[0] == Graph.from_edges(4, [(0, 1), (2, 3), (3, 0)])
    assert delete_vertex(star_graph(3), 0)[0] == empty_graph(3)
    with pytest.raises(GraphError):
        delete_vertex(empty_graph(1), 0)


def test_induced_subgraph():
    assert induced_subgraph(complete_graph(5), {0, 2, 4})[0] == complete_graph(3)
    assert induced_subgraph(cycle_graph(5), {0, 1, 2})[0] == path_graph(3)
    assert induced_subgraph(cycle_graph(5), set())[0].n == 0
    with pytest.raises(GraphError):
        induced_subgraph(cycle_graph(5), {7})


def test_is_connected():
    assert is_connected(cycle_graph(5))
    assert not is_connected(Graph.from_edges(4, [(0, 1), (2, 3)]))
    assert is_connected(empty_graph(1))


@given(small_graphs())
def test_distance_symmetric(g):
    for u, v in combinations(range(g.n), 2):
        assert distance(g, u, v) == distance(g, v, u)


@given(small_graphs())
def test_second_neighborhood_disjoint(g):
    for v in range(g.n):
        second = second_neighborhood(g, v)
        assert not second & neighbors(g, v)
        assert v not in second
        assert second == {u for u in range(g.n) if distance(g, v, u) == 2}


@given(small_graphs(min_n=2))
def test_delete_then_readd_restores_graph(g):
    for x in range(g.n):
        h, mapping = delete_vertex(g, x)
        inverse = {new: old for old, new in mapping.items()}
        edges = [(inverse[u], inverse[v]) for u, v in h.edges()]
        edges += [(x, u) for u in neighbors(g, x)]
        assert Graph.from_edges(g.n, edges) == g


@given(small_graphs(max_n=6))
def test_girth_matches_brute_force(g):
    assert girth(g) == brute_girth(g)


@given(small_graphs())
def test_girth_five_means_no_triangles_or_squares(g):
    gv = girth(g)
    if gv is not None and gv < 5:
        return
    for v in range(g.n):
        nb = sorted(neighbors(g, v))
        for a, b in combinations(nb, 2):
            assert not g.has_edge(a, b)
            assert neighbors(g, a) & neighbors(g, b) == {v}
