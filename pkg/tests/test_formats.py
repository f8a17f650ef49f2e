import random

import pytest

from qgeom import (
    Graph,
    decode_graph6,
    design_from_json,
    design_to_json,
    encode_dimacs,
    encode_graph6,
    graph_from_json,
    graph_to_json,
    incidence_csv,
    pg_design,
    field_new,
)


def random_graph(n, p, rng):
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


def test_graph6_base_cases():
    assert encode_graph6(Graph.from_edges(1, [])) == "@"
    assert encode_graph6(Graph.from_edges(2, [(0, 1)])) == "A_"
    k4 = Graph.from_edges(4, [(i, j) for i in range(4) for j in range(i + 1, 4)])
    assert encode_graph6(k4) == "C~"
    c5 = Graph.from_edges(5, [(i, (i + 1) % 5) for i in range(5)])
    assert encode_graph6(c5) == "Dhc"


def test_graph6_decode_base_cases():
    g = decode_graph6("Dhc")
    assert g.n == 5
    assert sorted(g.edges()) == [(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)]
    assert decode_graph6("@").n == 1
    assert decode_graph6("A_").is_adjacent(0, 1)


def test_graph6_round_trip_small():
    rng = random.Random(1)
    for n in (1, 2, 3, 5, 8, 13, 30, 62, 63, 100):
        g = random_graph(n, 0.3, rng)
        g2 = decode_graph6(encode_graph6(g))
        assert g2.n == g.n
        assert g2.adj == g.adj


def test_graph6_large_n_header():
    g = Graph.from_edges(63, [(0, 62)])
    text = encode_graph6(g)
    assert text.startswith("~")
    back = decode_graph6(text)
    assert back.n == 63
    assert back.is_adjacent(0, 62)


def test_graph6_rejects_malformed():
    with pytest.raises(ValueError):
        decode_graph6("")
    with pytest.raises(ValueError):
        decode_graph6("D")  # truncated body
    with pytest.raises(ValueError):
        decode_graph6("D" + chr(30))  # byte below printable range


def test_dimacs_exact():
    g = Graph.from_edges(2, [(0, 1)])
    assert encode_dimacs(g) == "p edge 2 1\ne 1 2\n"
    c4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    lines = encode_dimacs(c4).splitlines()
    assert lines[0] == "p edge 4 4"
    assert "e 1 2" in lines and "e 1 4" in lines


def test_graph_json_round_trip(tg22):
    data = graph_to_json(tg22)
    assert data["n"] == 155
    g2 = graph_from_json(data)
    assert g2.adj == tg22.adj


def test_design_json_round_trip(jt22):
    data = design_to_json(jt22)
    assert data["v"] == 31
    d2 = design_from_json(data)
    assert d2.blocks == jt22.blocks


def test_incidence_csv_shape(jt22):
    text = incidence_csv(jt22)
    rows = text.strip().split("\n")
    assert len(rows) == 155
    for row in rows:
        cells = row.split(",")
        assert len(cells) == 31
        assert sum(int(c) for c in cells) == 7


def test_incidence_csv_fano():
    fano = pg_design(field_new(2), 1)
    text = incidence_csv(fano)
    rows = text.strip().split("\n")
    assert len(rows) == 7
    assert all(sum(int(c) for c in r.split(",")) == 3 for r in rows)
