import pytest
from hypothesis import given

from bchromatic.coloring import ColoringError, is_b_coloring
from bchromatic.generators import complete_graph, cycle_graph, enumerate_labeled, gen_G1, star_graph
from bchromatic.graph import GraphError, delete_vertex
from bchromatic.recognizers import is_quasi_line
from bchromatic.recolor import BoundViolation, recolor_general, recolor_quasi_line
from bchromatic.solver import b_chromatic, enumerate_b_colorings

from conftest import small_graphs


def steps(cert):
    return [(s.vertex, s.old, s.new, s.reason) for s in cert.trace.steps]


@pytest.mark.parametrize("x", range(4))
@pytest.mark.parametrize("proc", [recolor_general, recolor_quasi_line])
def test_complete_graph(proc, x):
    cert = proc(complete_graph(4), [0, 1, 2, 3], x)
    assert cert.after.k == 3 and cert.colors_lost == 1
    assert steps(cert) == []


def test_c5_trace():
    cert = recolor_general(cycle_graph(5), [0, 1, 2, 0, 1], 0)
    assert steps(cert) == [
        (1, 1, 0, "promote-dominating"),
        (4, 1, 2, "eliminate-missing"),
    ]
    assert cert.trace.renaming == {0: 0, 2: 1}
    assert cert.after.colors == (0, 1, 0, 1)
    assert cert.colors_lost == 1 and cert.bound == 2
    assert cert.replay() == cert.after


def test_c5_quasi_line():
    cert = recolor_quasi_line(cycle_graph(5), [0, 1, 2, 0, 1], 0)
    assert cert.after.k == 2 and cert.colors_lost == 1 and cert.bound == 2


def test_star_leaf_keeps_colors():
    cert = recolor_general(star_graph(3), [0, 1, 1, 1], 2)
    assert cert.colors_lost == 0 and cert.after.colors == (0, 1, 1)


def test_rejects_bad_input():
    with pytest.raises(ColoringError):
        recolor_general(cycle_graph(4), [0, 1, 0, 2], 0)  # not a b-coloring
    with pytest.raises(GraphError):
        recolor_quasi_line(star_graph(3), [0, 1, 1, 1], 1)
    with pytest.raises(GraphError):
        recolor_general(complete_graph(1), [0], 0)


def test_certificate_json():
    d = recolor_general(cycle_graph(5), [0, 1, 2, 0, 1], 0).to_dict()
    assert d["before"] == [0, 1, 2, 0, 1] and d["after"] == [0, 1, 0, 1]
    assert d["trace"]["renaming"] == {"0": 0, "2": 1}


def test_violation_carries_artifact():
    err = BoundViolation("x", {"graph6": "Bw"})
    assert isinstance(err, AssertionError) and err.artifact["graph6"] == "Bw"


def check_certificate(g, c, x, cert, bound):
    h, _ = delete_vertex(g, x)
    assert is_b_coloring(h, cert.after)
    assert cert.after.k >= c.k - bound
    assert cert.colors_lost == c.k - cert.after.k
    assert cert.replay() == cert.after
    assert cert.after.k <= b_chromatic(h).b


@pytest.mark.parametrize("n", [2, 3, 4])
def test_exhaustive_small(n):
    for g in enumerate_labeled(n):
        quasi = is_quasi_line(g)
        for c in enumerate_b_colorings(g):
            for x in range(n):
                check_certificate(g, c, x, recolor_general(g, c, x), g.degree(x))
                if quasi:
                    check_certificate(g, c, x, recolor_quasi_line(g, c, x), 2)


@given(small_graphs(min_n=2, max_n=7))
def test_solver_witness_property(g):
    c = b_chromatic(g).witness
    for x in range(g.n):
        check_certificate(g, c, x, recolor_general(g, c, x), g.degree(x))
        if is_quasi_line(g):
            check_certificate(g, c, x, recolor_quasi_line(g, c, x), 2)


def test_G1_junction():
    g, junctions = gen_G1(3)
    c = b_chromatic(g).witness
    assert c.k == 5
    cert = recolor_quasi_line(g, c, junctions[3])
    assert cert.after.k >= 3
    h, _ = delete_vertex(g, junctions[3])
    assert b_chromatic(h).b >= 4
