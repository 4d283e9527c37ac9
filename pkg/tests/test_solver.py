import pytest
from hypothesis import given, settings

from bchromatic.coloring import is_b_coloring, is_proper
from bchromatic.generators import (
    complete_graph,
    cycle_graph,
    empty_graph,
    enumerate_labeled,
    gen_gnp,
    path_graph,
    petersen_graph,
    star_graph,
)
from bchromatic.graph import Graph, GraphError
from bchromatic.solver import (
    b_chromatic,
    brute_force_b_chromatic,
    chromatic_number,
    enumerate_b_colorings,
    enumerate_proper_colorings,
    find_b_coloring,
    m_degree,
    m_degree_of_sequence,
    optimal_coloring,
)

from conftest import small_graphs


def bell(n):
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for v in row:
            nxt.append(nxt[-1] + v)
        row = nxt
    return row[0]


@pytest.mark.parametrize(
    "degrees, m",
    [([], 0), ([0], 1), ([0, 0, 0], 1), ([1, 1], 2), ([3, 3, 3, 3], 4), ([3] * 10, 4), ([5, 1, 1, 1, 1, 1], 2)],
)
def test_m_degree_of_sequence(degrees, m):
    assert m_degree_of_sequence(degrees) == m


def test_m_degree_of_graphs():
    assert m_degree(petersen_graph()) == 4
    assert m_degree(star_graph(5)) == 2
    with pytest.raises(GraphError):
        m_degree(empty_graph(0))


@pytest.mark.parametrize(
    "g, chi",
    [(complete_graph(5), 5), (cycle_graph(5), 3), (cycle_graph(6), 2), (petersen_graph(), 3), (empty_graph(3), 1)],
)
def test_chromatic_number(g, chi):
    assert chromatic_number(g) == chi
    c = optimal_coloring(g)
    assert is_proper(g, c) and c.k == chi


@pytest.mark.parametrize(
    "g, b",
    [
        (complete_graph(4), 4),
        (empty_graph(3), 1),
        (path_graph(2), 2),
        (path_graph(4), 2),
        (path_graph(5), 3),
        (cycle_graph(4), 2),
        (cycle_graph(5), 3),
        (star_graph(4), 2),
        (petersen_graph(), 3),
    ],
)
def test_b_chromatic_examples(g, b):
    result = b_chromatic(g)
    assert result.b == b
    assert is_b_coloring(g, result.witness) and result.witness.k == b
    if g.n <= 9:
        assert brute_force_b_chromatic(g) == b


def test_find_b_coloring_bounds():
    with pytest.raises(ValueError):
        find_b_coloring(cycle_graph(4), 0)
    with pytest.raises(ValueError):
        find_b_coloring(cycle_graph(4), 5)
    assert find_b_coloring(cycle_graph(4), 3) is None
    assert find_b_coloring(cycle_graph(4), 1) is None
    assert find_b_coloring(empty_graph(2), 1).colors == (0, 0)


def test_proper_coloring_count_is_bell_number_on_edgeless():
    for n in range(1, 7):
        assert sum(1 for _ in enumerate_proper_colorings(empty_graph(n))) == bell(n)


def test_brute_force_limits():
    with pytest.raises(ValueError):
        brute_force_b_chromatic(cycle_graph(10))
    with pytest.raises(GraphError):
        brute_force_b_chromatic(empty_graph(0))


def test_solver_agrees_with_oracle_on_all_small_graphs():
    for n in range(1, 6):
        for g in enumerate_labeled(n):
            assert b_chromatic(g).b == brute_force_b_chromatic(g)


@given(small_graphs(max_n=7))
def test_sandwich_and_witness(g):
    result = b_chromatic(g)
    chi, m = result.bounds_used
    assert chi == chromatic_number(g)
    assert m == m_degree(g)
    assert chi <= result.b <= m
    assert is_b_coloring(g, result.witness)


@given(small_graphs(max_n=6))
def test_every_b_coloring_k_reachable_by_search(g):
    ks = {c.k for c in enumerate_b_colorings(g)}
    for k in range(1, g.n + 1):
        found = find_b_coloring(g, k)
        assert (found is not None) == (k in ks)


@settings(max_examples=30)
@given(small_graphs(min_n=8, max_n=9))
def test_oracle_agreement_n8_9(g):
    assert b_chromatic(g).b == brute_force_b_chromatic(g)


def test_medium_random_graphs_certified():
    for seed in range(10):
        g = gen_gnp(16, 0.3, seed)
        r = b_chromatic(g)
        assert is_b_coloring(g, r.witness)
        assert r.bounds_used[0] <= r.b <= r.bounds_used[1]
    assert b_chromatic(Graph.from_edges(1, [])).b == 1
