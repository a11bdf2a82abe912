import networkx as nx
import pytest

from app.errors import Graph6ParseError
from app.models.graph import Graph
from app.utils import constructions
from app.utils.graph6 import graph6_decode, graph6_encode, read_graphs
from tests.helpers import random_graph, to_networkx


def test_encode_known_strings(c5):
    assert graph6_encode(c5) == 'Dhc'
    assert graph6_encode(Graph.empty(1)) == '@'
    assert graph6_encode(constructions.complete_graph(4)) == 'C~'


def test_encode_matches_networkx(rng):
    for n in (2, 7, 12, 40, 63, 64):
        graph = random_graph(n, 0.3, rng)
        expected = nx.to_graph6_bytes(to_networkx(graph), header=False).strip().decode('ascii')
        assert graph6_encode(graph) == expected


def test_decode_inverts_encode(rng):
    for n in (1, 5, 13, 64):
        graph = random_graph(n, 0.5, rng)
        assert graph6_decode(graph6_encode(graph)) == graph


def test_decode_accepts_header_and_newline(c5):
    assert graph6_decode('>>graph6<<Dhc\n') == c5
    assert graph6_decode(b'Dhc') == c5


@pytest.mark.parametrize('text, offset', [
    ('', 0),
    ('D', 1),
    ('D h', 1),
    ('Dhd', 2),
    ('Dhc?', 3),
    ('~~??????', 0),
])
def test_decode_errors_carry_offsets(text, offset):
    with pytest.raises(Graph6ParseError) as info:
        graph6_decode(text)
    assert info.value.offset == offset


def test_decode_rejects_more_than_64_vertices():
    with pytest.raises(Graph6ParseError):
        graph6_decode('~?@@' + '?' * 400)


def test_read_graphs_reports_stream_offsets(c5):
    assert read_graphs('Dhc\n\nC~\n') == [c5, constructions.complete_graph(4)]
    with pytest.raises(Graph6ParseError) as info:
        read_graphs('Dhc\nC~x\n')
    assert info.value.offset == 6
