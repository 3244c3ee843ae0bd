import pytest

import oracles
from conftest import random_graph
from edgeideal.constructions import fig1, fig5, fig7
from edgeideal.graph import (
    Graph,
    Graph6ByteError,
    Graph6Error,
    Graph6HeaderError,
    Graph6LengthError,
    Graph6SizeError,
    GraphError,
    closed_neighborhood,
    complement,
    complete_graph,
    components,
    cycle_graph,
    delete_vertices,
    disjoint_union,
    empty_graph,
    has_isolated_vertex,
    independence_number,
    induced_matching_number,
    induced_subgraph,
    is_chordal,
    is_connected,
    is_disjoint_union_of_stars,
    is_independent,
    is_minimal_vertex_cover,
    is_vertex_cover,
    iter_graph6_lines,
    lex_bfs,
    neighborhood,
    parse_graph6,
    path_graph,
    star_graph,
    to_mask,
    vertex_cover_number,
    write_graph6,
)

K2 = complete_graph(2)
C4 = cycle_graph(4)


def test_graph_rejects_bad_adjacency():
    with pytest.raises(GraphError):
        Graph(2, (0b10, 0))  # not symmetric
    with pytest.raises(GraphError):
        Graph(1, (1,))  # loop
    with pytest.raises(GraphError):
        Graph(0, ())
    with pytest.raises(GraphError):
        empty_graph(65)


def test_graph6_known_codes():
    g = parse_graph6("A_")
    assert g.n == 2 and g.edges() == [(0, 1)]
    assert write_graph6(K2) == "A_"
    assert write_graph6(empty_graph(3)) == "B?"
    assert parse_graph6(">>graph6<<A_") == K2


def test_graph6_long_form_round_trip():
    g = path_graph(64)
    code = write_graph6(g)
    assert code.startswith("~")
    assert parse_graph6(code) == g
    g63 = cycle_graph(63)
    assert parse_graph6(write_graph6(g63)) == g63


@pytest.mark.parametrize(
    "code, error",
    [
        ("", Graph6HeaderError),
        ("~?@@", Graph6SizeError),  # 65 vertices
        ("A\x01", Graph6ByteError),
        ("C", Graph6LengthError),  # 4 vertices need one body byte
        ("A__", Graph6LengthError),
    ],
)
def test_graph6_distinct_errors(code, error):
    with pytest.raises(error):
        parse_graph6(code)
    assert issubclass(error, Graph6Error)


def test_graph6_round_trip_random(rng):
    for _ in range(300):
        g = random_graph(rng, rng.randint(1, 20), rng.random())
        assert parse_graph6(write_graph6(g)) == g


def test_iter_graph6_lines_skips_headers_and_blanks():
    lines = [">>graph6<<A_\n", "\n", "B?\n", "  \n"]
    assert list(iter_graph6_lines(lines)) == ["A_", "B?"]


def test_induced_subgraph_and_delete():
    assert induced_subgraph(C4, 0b0011) == K2
    assert induced_subgraph(C4, C4.full) == C4
    with pytest.raises(GraphError):
        induced_subgraph(C4, 0)
    rest = delete_vertices(fig1(), to_mask(range(5)))
    assert rest.n == 6 and independence_number(rest) == 2


def test_neighborhoods():
    assert neighborhood(K2, 0b1) == 0b10
    assert neighborhood(star_graph(3), 0b1) == 0b1110
    assert neighborhood(C4, 0b1) == 0b1010
    assert closed_neighborhood(C4, 0b1) == 0b1011


def test_independence_and_covers():
    assert not is_independent(K2, 0b11)
    assert is_independent(C4, 0b0101)
    assert is_independent(C4, 0)
    assert is_vertex_cover(K2, 0b01)
    assert is_vertex_cover(C4, 0b0101) and is_minimal_vertex_cover(C4, 0b0101)
    assert not is_vertex_cover(K2, 0)
    assert not is_minimal_vertex_cover(C4, 0b0111)


def test_independence_number_examples():
    assert independence_number(fig1()) == 3
    assert independence_number(complete_graph(7)) == 1
    assert independence_number(cycle_graph(5)) == 2


def test_independence_number_against_brute_force(rng):
    for _ in range(150):
        g = random_graph(rng, rng.randint(1, 9), rng.random())
        assert independence_number(g) == oracles.alpha(g)
        assert vertex_cover_number(g) == oracles.beta(g)


def test_induced_matching_examples():
    assert induced_matching_number(fig5()) == 3
    assert induced_matching_number(path_graph(5)) == 2
    assert induced_matching_number(K2) == 1


def test_induced_matching_against_brute_force(rng):
    for _ in range(100):
        g = random_graph(rng, rng.randint(1, 8), rng.random())
        assert induced_matching_number(g) == oracles.induced_matching_number(g)


def test_chordality_examples():
    assert not is_chordal(C4)
    assert is_chordal(star_graph(3))
    assert is_chordal(fig7())
    order = lex_bfs(fig7())
    assert sorted(order) == list(range(fig7().n))


def test_chordality_against_induced_cycle_oracle(rng):
    for _ in range(300):
        g = random_graph(rng, rng.randint(1, 7), rng.random())
        assert is_chordal(g) == oracles.is_chordal(g)


def test_connectivity_and_stars():
    assert is_connected(K2)
    assert not is_connected(disjoint_union(K2, K2))
    assert is_connected(fig1())
    assert is_disjoint_union_of_stars(star_graph(3))
    assert not is_disjoint_union_of_stars(C4)
    assert is_disjoint_union_of_stars(disjoint_union(K2, path_graph(3)))
    assert not is_disjoint_union_of_stars(disjoint_union(K2, empty_graph(1)))
    assert has_isolated_vertex(disjoint_union(K2, empty_graph(1)))
    assert len(components(disjoint_union(K2, C4))) == 2


def test_disjoint_union_and_complement():
    g = disjoint_union(K2, K2)
    assert (g.n, g.m) == (4, 2)
    with pytest.raises(GraphError):
        disjoint_union(empty_graph(40), empty_graph(40))
    assert complement(complete_graph(5)) == empty_graph(5)
    assert complement(complement(C4)) == C4
