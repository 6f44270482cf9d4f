import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from wfcolor.dimacs import (DimacsParseError, DimacsWarning, parse_dimacs,
                            write_dimacs)
from wfcolor.graph import crown_graph, random_gnp

K3_TEXT = "p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n"


def test_parse_triangle():
    g = parse_dimacs(K3_TEXT)
    assert g.n == 3
    assert g.m == 3
    assert g.max_degree == 2


def test_parse_dedupes_reversed_edges():
    g = parse_dimacs("p edge 2 1\ne 1 2\ne 2 1\n")
    assert g.m == 1


def test_parse_skips_comments_and_blanks():
    g = parse_dimacs("c made by hand\n\nc another\np edge 2 1\ne 1 2\n")
    assert g.m == 1


def test_vertex_out_of_range_reports_line():
    with pytest.raises(DimacsParseError) as exc:
        parse_dimacs("p edge 2 1\ne 1 3\n")
    assert exc.value.kind == "vertex-range"
    assert exc.value.line_no == 2


def test_self_loop_is_an_error():
    with pytest.raises(DimacsParseError) as exc:
        parse_dimacs("p edge 3 1\ne 3 3\n")
    assert exc.value.kind == "self-loop"
    assert exc.value.line_no == 2


def test_missing_problem_line():
    with pytest.raises(DimacsParseError) as exc:
        parse_dimacs("c nothing here\n")
    assert exc.value.kind == "missing-problem-line"
    with pytest.raises(DimacsParseError) as exc:
        parse_dimacs("e 1 2\np edge 2 1\n")
    assert exc.value.kind == "missing-problem-line"
    assert exc.value.line_no == 1


@pytest.mark.parametrize("text", [
    "p edge x 3\n",
    "p edge 3\n",
    "p vertex 3 3\n",
    "p edge 3 0\nq 1 2\n",
    "p edge 3 1\ne 1\n",
    "p edge 3 1\ne 1 two\n",
    "p edge 3 0\np edge 3 0\n",
])
def test_malformed_lines(text):
    with pytest.raises(DimacsParseError):
        parse_dimacs(text)


def test_declared_edge_count_is_advisory():
    with pytest.warns(DimacsWarning):
        g = parse_dimacs("p edge 3 5\ne 1 2\n")
    assert g.m == 1


def test_accepts_edges_keyword():
    assert parse_dimacs("p edges 2 1\ne 1 2\n").m == 1


def test_write_triangle():
    g = parse_dimacs(K3_TEXT)
    assert write_dimacs(g) == "p edge 3 3\ne 1 2\ne 1 3\ne 2 3\n"


def test_write_single_vertex():
    g = parse_dimacs("p edge 1 0\n")
    assert write_dimacs(g) == "p edge 1 0\n"


@pytest.mark.parametrize("n", range(2, 9))
def test_crown_round_trip(n):
    g = crown_graph(n)
    back = parse_dimacs(write_dimacs(g))
    assert back.n == g.n
    assert np.array_equal(back.indptr, g.indptr)
    assert np.array_equal(back.indices, g.indices)


@given(n=st.integers(1, 30), p=st.sampled_from([0.1, 0.5, 0.9]),
       seed=st.integers(0, 999))
def test_round_trip_random(n, p, seed):
    g = random_gnp(n, p, seed)
    back = parse_dimacs(write_dimacs(g))
    assert np.array_equal(back.indptr, g.indptr)
    assert np.array_equal(back.indices, g.indices)
    # and text -> graph -> text is the identity on canonical text
    text = write_dimacs(g)
    assert write_dimacs(parse_dimacs(text)) == text
