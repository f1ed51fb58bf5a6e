import io
import random

import networkx as nx
import pytest

from sombor import graph6
from sombor.enumeration import enumerate_trees, enumerate_unicyclic
from sombor.extremal import construct_T_D
from sombor.graph import Graph, cycle_graph


def _nx_edges(data: bytes) -> set[tuple[int, int]]:
    h = nx.from_graph6_bytes(data)
    return {tuple(sorted(e)) for e in h.edges()}


def test_c5_bytes():
    assert graph6.encode(cycle_graph(5)) == b"Dhc"
    assert _nx_edges(b"Dhc") == set(cycle_graph(5).edges)


def test_round_trip_t73_degrees():
    t = construct_T_D(7, 3)
    back = graph6.decode(graph6.encode(t))
    assert sorted(back.degrees, reverse=True) == [3, 2, 2, 2, 1, 1, 1]


def test_round_trip_enumerated():
    for n in range(1, 13):
        for g in enumerate_trees(n):
            assert graph6.decode(graph6.encode(g)).edges == g.edges
    for n in range(3, 11):
        for g in enumerate_unicyclic(n):
            assert graph6.decode(graph6.encode(g)).edges == g.edges


def test_matches_networkx_random():
    rng = random.Random(11)
    for _ in range(300):
        n = rng.randint(1, 64)
        g = Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.2])
        data = graph6.encode(g)
        h = nx.Graph()
        h.add_nodes_from(range(n))
        h.add_edges_from(g.edges)
        assert data == nx.to_graph6_bytes(h, header=False).strip()
        assert _nx_edges(data) == set(g.edges)


def test_header_tolerated():
    assert graph6.decode(b">>graph6<<Dhc") == cycle_graph(5)
    assert not graph6.encode(cycle_graph(5)).startswith(b">>")


@pytest.mark.parametrize(
    "data, offset",
    [
        (b"", 0),
        (b"D\x20c", 1),
        (b"Dh", 2),
        (b"Dhcc", 3),
        (b"Dhd", 2),
        (b"?", 0),
    ],
)
def test_decode_errors_carry_offset(data, offset):
    with pytest.raises(graph6.Graph6Error) as info:
        graph6.decode(data)
    assert info.value.offset == offset
    assert f"byte offset {offset}" in str(info.value)


def test_large_size_prefix_rejected():
    with pytest.raises(graph6.Graph6Error):
        graph6.decode(b"~??A" + b"?" * 10)


def test_read_lines_names_line():
    stream = io.BytesIO(b"Dhc\n\nA_\nbad!\n")
    it = graph6.read_lines(stream)
    assert next(it)[0] == 1
    assert next(it)[0] == 3
    with pytest.raises(graph6.Graph6Error, match="line 4"):
        next(it)


def test_write_lines():
    out = io.BytesIO()
    assert graph6.write_lines(out, [cycle_graph(5), Graph(2, [(0, 1)])]) == 2
    assert out.getvalue() == b"Dhc\nA_\n"
