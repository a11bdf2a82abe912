import networkx as nx
import pytest

from app.errors import ConstructionError, DomainError, PreconditionError, UnsupportedSizeError
from app.models.graph import Graph
from app.models.part_sizes import PartSizes
from app.utils import constructions, graph_engine
from tests.helpers import all_graphs, graph_classes, random_graph, to_networkx


def test_graph_rejects_bad_input():
    with pytest.raises(ConstructionError):
        Graph.from_edges(3, [(0, 0)])
    with pytest.raises(ConstructionError):
        Graph.from_edges(3, [(0, 3)])
    with pytest.raises(ConstructionError):
        Graph(65, (0,) * 65)
    with pytest.raises(ConstructionError):
        Graph(2, (0b10, 0)).validate()


def test_derived_graphs(c5):
    assert c5.edge_count == 5
    assert c5.degrees() == [2] * 5
    assert c5.neighbors(0) == [1, 4]
    assert c5.delete_vertex(0).edge_count == 3
    assert c5.complement().edge_count == 5
    assert graph_engine.canonical_form(c5.complement()) == graph_engine.canonical_form(c5)
    relabeled = c5.relabel([2, 0, 4, 1, 3])
    assert relabeled.edge_count == 5
    assert nx.is_isomorphic(to_networkx(relabeled), to_networkx(c5))
    assert Graph.from_dict(c5.to_dict()) == c5


def test_named_invariants(c5, petersen, k4):
    assert graph_engine.clique_number(c5) == 2
    assert graph_engine.chromatic_number(c5) == 3
    assert graph_engine.clique_number(petersen) == 2
    assert graph_engine.chromatic_number(petersen) == 3
    assert graph_engine.clique_number(k4) == 4
    assert graph_engine.chromatic_number(k4) == 4
    assert graph_engine.chromatic_number(Graph.empty(4)) == 1
    assert graph_engine.clique_number(Graph.empty(4)) == 1


def test_clique_number_matches_networkx(rng):
    for _ in range(60):
        n = int(rng.integers(4, 13))
        graph = random_graph(n, float(rng.uniform(0.2, 0.8)), rng)
        expected = max(len(clique) for clique in nx.find_cliques(to_networkx(graph)))
        assert graph_engine.clique_number(graph) == expected


@pytest.mark.parametrize('n', [4, 5, pytest.param(6, marks=pytest.mark.slow)])
def test_has_clique_agrees_with_clique_number(n):
    for graph in all_graphs(n):
        omega = graph_engine.clique_number(graph)
        for k in range(1, 7):
            assert graph_engine.has_clique(graph, k) == (omega >= k)


def test_has_clique_rejects_nonpositive_size(c5):
    with pytest.raises(DomainError):
        graph_engine.has_clique(c5, 0)


def test_partiteness_and_chromatic_number(rng):
    for _ in range(40):
        graph = random_graph(int(rng.integers(4, 9)), 0.45, rng)
        chi = graph_engine.chromatic_number(graph)
        assert chi >= graph_engine.clique_number(graph)
        assert graph_engine.is_r_partite(graph, chi)
        if chi > 1:
            assert not graph_engine.is_r_partite(graph, chi - 1)
        assert graph_engine.is_r_partite(graph, 2) == nx.is_bipartite(to_networkx(graph))


@pytest.mark.parametrize('n', [2, 3, 4, 5, pytest.param(6, marks=pytest.mark.slow)])
def test_invariants_match_networkx_on_every_class(n):
    for graph in graph_classes(n):
        other = to_networkx(graph)
        omega = max(len(clique) for clique in nx.find_cliques(other))
        greedy = max(nx.greedy_color(other, strategy='largest_first').values(), default=-1) + 1
        chi = graph_engine.chromatic_number(graph)
        assert graph_engine.clique_number(graph) == omega
        assert graph_engine.has_clique(graph, omega) and not graph_engine.has_clique(graph, omega + 1)
        assert omega <= chi <= max(greedy, 1)
        assert chi == 1 or not graph_engine.is_r_partite(graph, chi - 1)
        assert graph_engine.is_r_partite(graph, 2) == nx.is_bipartite(other)


def test_components_and_connectivity():
    graph = Graph.from_edges(6, [(0, 3), (3, 5), (1, 2)])
    assert graph_engine.components(graph) == [[0, 3, 5], [1, 2], [4]]
    assert not graph_engine.is_connected(graph)
    assert graph_engine.is_connected(constructions.path_graph(6))


def test_complete_multipartite_parts():
    graph = constructions.complete_multipartite(PartSizes((3, 1, 2)))
    assert graph_engine.complete_multipartite_parts(graph).sizes == (1, 2, 3)
    assert graph_engine.complete_multipartite_parts(constructions.complete_graph(4)).sizes == (1, 1, 1, 1)
    assert graph_engine.complete_multipartite_parts(constructions.path_graph(4)) is None
    assert graph_engine.complete_multipartite_parts(Graph.empty(3)) is None


def test_complete_bipartite_plus_isolated():
    star_and_point = Graph.from_edges(5, [(0, 1), (0, 2), (0, 3)])
    assert graph_engine.is_complete_bipartite_plus_isolated(star_and_point)
    assert not graph_engine.is_complete_bipartite_plus_isolated(constructions.path_graph(4))
    assert not graph_engine.is_complete_bipartite_plus_isolated(Graph.empty(3))


def test_canonical_form_is_an_isomorphism_invariant(rng):
    for _ in range(30):
        n = int(rng.integers(3, 9))
        graph = random_graph(n, 0.5, rng)
        perm = [int(v) for v in rng.permutation(n)]
        assert graph_engine.canonical_form(graph.relabel(perm)) == graph_engine.canonical_form(graph)
        assert graph_engine.canonical_graph(graph_engine.canonical_form(graph)).edge_count == graph.edge_count


def test_canonical_form_separates_classes():
    forms = {}
    for graph in all_graphs(5):
        forms.setdefault(graph_engine.canonical_form(graph), graph)
    # 34 unlabeled graphs on five vertices
    assert len(forms) == 34
    representatives = list(forms.values())
    for i, a in enumerate(representatives):
        for b in representatives[i + 1:]:
            assert not nx.is_isomorphic(to_networkx(a), to_networkx(b))


def test_canonical_form_size_cap():
    with pytest.raises(UnsupportedSizeError):
        graph_engine.canonical_form(constructions.cycle_graph(11))


def test_require_non_adjacent(c5):
    graph_engine.require_non_adjacent(c5, 0, 2)
    with pytest.raises(PreconditionError):
        graph_engine.require_non_adjacent(c5, 0, 1)
    with pytest.raises(PreconditionError):
        graph_engine.require_non_adjacent(c5, 3, 3)
