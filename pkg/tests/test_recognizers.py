from itertools import combinations

import pytest
from hypothesis import given

from bchromatic.generators import (
    complete_graph,
    cycle_graph,
    enumerate_labeled,
    gen_G1,
    gen_random_chordal,
    line_graph,
    path_graph,
    petersen_graph,
    star_graph,
)
from bchromatic.graph import Graph, delete_vertex, induced_subgraph, is_connected
from bchromatic.recognizers import (
    PreconditionError,
    check_chordal_triple,
    chordless_cycle,
    classify,
    clique_number,
    enumerate_cycles,
    find_claw,
    is_chordal,
    is_claw_free,
    is_quasi_line,
    max_clique,
    mcs_order,
    perfect_elimination_ordering,
    qualifying_triples,
    two_clique_cover,
)

from conftest import small_graphs


def induces_long_cycle(g, subset):
    if len(subset) < 4:
        return False
    sub, _ = induced_subgraph(g, subset)
    if any(sub.degree(v) != 2 for v in range(sub.n)):
        return False
    return is_connected(sub)


def brute_chordal(g):
    return not any(
        induces_long_cycle(g, s) for r in range(4, g.n + 1) for s in combinations(range(g.n), r)
    )


def brute_clique_number(g):
    best = 0
    for r in range(1, g.n + 1):
        for s in combinations(range(g.n), r):
            if all(g.has_edge(u, v) for u, v in combinations(s, 2)):
                best = r
                break
    return best


def brute_two_cliques(g, v):
    nb = sorted(g.neighbors(v))
    for mask in range(1 << len(nb)):
        parts = ([u for i, u in enumerate(nb) if mask >> i & 1], [u for i, u in enumerate(nb) if not mask >> i & 1])
        if all(all(g.has_edge(a, b) for a, b in combinations(p, 2)) for p in parts):
            return True
    return False


def brute_claw_free(g):
    for s in combinations(range(g.n), 4):
        for c in s:
            leaves = [u for u in s if u != c]
            if all(g.has_edge(c, u) for u in leaves) and not any(
                g.has_edge(a, b) for a, b in combinations(leaves, 2)
            ):
                return False
    return True


class TestChordal:
    @pytest.mark.parametrize(
        "g, expected",
        [
            (complete_graph(5), True),
            (path_graph(5), True),
            (star_graph(4), True),
            (cycle_graph(3), True),
            (cycle_graph(4), False),
            (cycle_graph(6), False),
            (petersen_graph(), False),
        ],
    )
    def test_examples(self, g, expected):
        assert is_chordal(g) is expected
        assert (perfect_elimination_ordering(g) is not None) is expected
        assert (chordless_cycle(g) is None) is expected

    def test_mcs_breaks_ties_by_smallest_id(self):
        assert mcs_order(path_graph(4)) == [0, 1, 2, 3]
        assert mcs_order(Graph.from_edges(4, [])) == [0, 1, 2, 3]

    @given(small_graphs(max_n=7))
    def test_matches_brute_force(self, g):
        assert is_chordal(g) == brute_chordal(g)

    @given(small_graphs(max_n=8))
    def test_certificates(self, g):
        order = perfect_elimination_ordering(g)
        if order is not None:
            assert sorted(order) == list(range(g.n))
            pos = {v: i for i, v in enumerate(order)}
            for v in order:
                later = [u for u in g.neighbors(v) if pos[u] > pos[v]]
                assert all(g.has_edge(a, b) for a, b in combinations(later, 2))
        else:
            cyc = chordless_cycle(g)
            assert cyc is not None and len(cyc) >= 4
            assert induces_long_cycle(g, cyc)
            for i, v in enumerate(cyc):
                assert g.has_edge(v, cyc[(i + 1) % len(cyc)])

    def test_generated_chordal_graphs(self):
        for seed in range(30):
            assert is_chordal(gen_random_chordal(12, 1 + seed % 4, seed))


class TestCliques:
    @given(small_graphs(max_n=8))
    def test_clique_number_matches_brute_force(self, g):
        omega = brute_clique_number(g)
        assert clique_number(g) == omega
        mask = max_clique(g)
        assert mask.bit_count() == omega
        assert g.is_clique(mask)

    def test_examples(self):
        assert clique_number(petersen_graph()) == 2
        assert clique_number(complete_graph(6)) == 6
        assert clique_number(Graph.from_edges(1, [])) == 1


class TestQuasiLine:
    def test_cover_of_star_center_fails(self):
        assert two_clique_cover(star_graph(3), 0) is None
        assert find_claw(star_graph(3)) == (0, (1, 2, 3))

    def test_cover_sides(self):
        first, second = two_clique_cover(cycle_graph(5), 0)
        assert first == {1} and second == {4}

    @given(small_graphs(max_n=7))
    def test_matches_brute_force(self, g):
        for v in range(g.n):
            cover = two_clique_cover(g, v)
            assert (cover is not None) == brute_two_cliques(g, v)
            if cover is not None:
                a, b = cover
                assert a | b == g.neighbors(v) and not a & b
                assert g.is_clique(sum(1 << u for u in a)) and g.is_clique(sum(1 << u for u in b))
        assert is_claw_free(g) == brute_claw_free(g)
        if is_quasi_line(g):
            assert is_claw_free(g)

    def test_line_graphs_are_quasi_line(self):
        for g in [complete_graph(5), petersen_graph(), star_graph(4), cycle_graph(6)]:
            assert is_quasi_line(line_graph(g))

    def test_G1_family(self):
        g, _ = gen_G1(3)
        assert is_claw_free(g) and is_chordal(g)


class TestAdjacencyLemma:
    def test_precondition_errors(self):
        c4 = cycle_graph(4)
        with pytest.raises(PreconditionError) as info:
            check_chordal_triple(c4, [0, 1, 2, 3], 0, 1, 2)
        assert info.value.condition == "chordal"
        k4 = complete_graph(4)
        with pytest.raises(PreconditionError) as info:
            check_chordal_triple(k4, [0, 1, 2, 3], 0, 1, 2)
        assert info.value.condition == "isolated-middle"
        with pytest.raises(PreconditionError) as info:
            check_chordal_triple(k4, [0, 1, 2], 0, 1, 3)
        assert info.value.condition == "consecutive"
        with pytest.raises(PreconditionError) as info:
            check_chordal_triple(path_graph(3), [0, 1, 2], 0, 1, 2)
        assert info.value.condition == "cycle"

    def test_triangle(self):
        assert check_chordal_triple(complete_graph(3), [0, 1, 2], 0, 1, 2)

    def test_enumerate_cycles_counts(self):
        assert len(list(enumerate_cycles(complete_graph(4)))) == 7
        assert len(list(enumerate_cycles(cycle_graph(6)))) == 1
        assert list(enumerate_cycles(path_graph(5))) == []

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_reachability_matches_cycle_enumeration(self, n):
        for g in enumerate_labeled(n):
            explicit = set()
            for cyc in enumerate_cycles(g):
                L = len(cyc)
                for p, x in enumerate(cyc):
                    a, b = cyc[p - 1], cyc[(p + 1) % L]
                    if all(not g.has_edge(x, w) for w in cyc if w not in (a, b, x)):
                        explicit.add((min(a, b), x, max(a, b)))
            fast = {(a, x, b) for a, x, b, _ in qualifying_triples(g)}
            assert fast == explicit

    def test_chordal_triples_always_adjacent(self):
        for n in range(3, 7):
            for g in enumerate_labeled(n):
                if is_chordal(g):
                    assert all(adj for *_, adj in qualifying_triples(g))

    def test_non_chordal_graph_has_non_adjacent_triple(self):
        assert any(not adj for *_, adj in qualifying_triples(cycle_graph(5)))


def test_classify_report(petersen):
    rep = classify(petersen)
    assert not rep.chordal and rep.chordless_cycle is not None
    assert not rep.claw_free and rep.claw is not None
    assert rep.girth == 5 and rep.clique_number == 2
    d = rep.to_dict()
    assert d["quasi_line"] is False and d["uncoverable_vertex"] == 0


def test_classify_g1_minus_junction():
    g, junctions = gen_G1(3)
    h, _ = delete_vertex(g, junctions[0])
    rep = classify(h)
    assert rep.chordal and rep.quasi_line and rep.clique_covers is not None
