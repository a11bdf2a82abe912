import math

import numpy as np
import pytest

from app.errors import DomainError, EmptyClassError, UnsupportedSizeError
from app.models.graph import Graph
from app.models.search import Objective, Predicate, SearchResult
from app.utils import constructions, extremal_search
from app.utils.graph_engine import canonical_form, canonical_graph, is_complete_bipartite_plus_isolated
from app.utils.spectral_engine import nosal_bound


def _form(graph):
    return canonical_form(graph)


@pytest.mark.parametrize('n, pred, expected', [
    (3, Predicate(), 8),
    (4, Predicate(), 64),
    (4, Predicate.clique_free(2), 41),
    (5, Predicate.clique_free(2), 388),
    (4, Predicate(connected_only=True), 38),
    (5, Predicate(connected_only=True), 728),
    (4, Predicate(clique_free_k=4), 63),
    (4, Predicate.partite(2), 41),
    (5, Predicate.clique_free(2, non_partite=True), 12),
])
def test_labeled_counts(n, pred, expected):
    assert extremal_search.count(n, pred) == expected


def test_enumeration_order_and_membership():
    graphs = list(extremal_search.enumerate_graphs(4, Predicate.clique_free(2)))
    assert graphs[0] == Graph.empty(4)
    assert len(set(graphs)) == len(graphs)
    assert all(Predicate.clique_free(2).accepts(graph) for graph in graphs)


def test_saturated_enumeration():
    saturated = list(extremal_search.enumerate_graphs(4, Predicate.clique_free(2), saturated_only=True))
    # the labeled complete bipartite graphs K_{1,3} and K_{2,2}
    assert len(saturated) == 7
    assert all(is_complete_bipartite_plus_isolated(graph) for graph in saturated)


def test_enumeration_size_limits():
    with pytest.raises(UnsupportedSizeError):
        list(extremal_search.enumerate_graphs(9))
    with pytest.raises(UnsupportedSizeError):
        extremal_search.count(2)


def test_edge_argmax_is_turan():
    result = extremal_search.argmax(5, Predicate.clique_free(2), Objective.edges())
    assert result.value == 6
    assert result.witnesses == [_form(constructions.turan_graph(5, 2))]
    assert result.unique


def test_radius_argmax_is_turan():
    result = extremal_search.argmax(6, Predicate.clique_free(3), Objective.adjacency())
    turan = constructions.turan_graph(6, 3)
    assert result.witnesses == [_form(turan)]
    assert result.value == pytest.approx(4.0, abs=1e-9)


def test_saturation_does_not_change_the_argmax():
    pred = Predicate.clique_free(2)
    full = extremal_search.argmax(6, pred, Objective.adjacency(), saturated_only=False)
    reduced = extremal_search.argmax(6, pred, Objective.adjacency(), saturated_only=True)
    assert full.value == pytest.approx(reduced.value, abs=1e-12)
    assert full.witnesses == reduced.witnesses
    assert reduced.examined < full.examined


def test_parallel_shards_agree_with_serial():
    pred = Predicate.clique_free(2, non_partite=True)
    serial = extremal_search.argmax(6, pred, Objective.adjacency(), jobs=1)
    parallel = extremal_search.argmax(6, pred, Objective.adjacency(), jobs=2)
    assert serial.to_dict() == parallel.to_dict()
    assert extremal_search.count(6, pred, jobs=2) == extremal_search.count(6, pred, jobs=1)


def test_signless_argmax_has_every_complete_bipartite_witness():
    result = extremal_search.argmax(5, Predicate.clique_free(2), Objective.signless())
    assert result.value == pytest.approx(5.0, abs=1e-9)
    assert result.witnesses == sorted([_form(constructions.complete_bipartite(1, 4)),
                                       _form(constructions.complete_bipartite(2, 3))])


def test_partite_class_argmax():
    result = extremal_search.argmax(5, Predicate.partite(2), Objective.adjacency())
    assert result.witnesses == [_form(constructions.turan_graph(5, 2))]
    assert result.value == pytest.approx(math.sqrt(6), abs=1e-9)


def test_p_spectral_argmax():
    result = extremal_search.argmax(5, Predicate.clique_free(2), Objective.p_spectral(3.0))
    assert result.witnesses == [_form(constructions.turan_graph(5, 2))]
    restored = SearchResult.from_dict(result.to_dict())
    assert restored.witnesses == result.witnesses


def test_empty_class_raises():
    with pytest.raises(EmptyClassError) as info:
        extremal_search.argmax(4, Predicate.clique_free(2, non_partite=True), Objective.adjacency())
    assert info.value.exit_code == 1


def test_dense_values_match_iterative_solvers():
    n = 6
    batch = [g.rows for g in extremal_search.enumerate_graphs(n, Predicate.clique_free(3))][:: 97][:40]
    for objective in (Objective.edges(), Objective.adjacency(), Objective.signless(), Objective.a_alpha(0.25)):
        values = extremal_search.dense_values(batch, n, objective)
        expected = [extremal_search.solve_objective(Graph(n, rows), objective) for rows in batch]
        assert np.allclose(values, expected, atol=1e-8)


def test_nosal_sweep():
    def check(graph, value):
        bound = nosal_bound(graph.edge_count)
        return value - bound, abs(value - bound) <= 1e-9 and graph.edge_count > 0

    result = extremal_search.bound_sweep(5, Predicate.clique_free(2), check)
    assert result.holds
    assert result.examined == 388
    assert result.equality
    assert all(is_complete_bipartite_plus_isolated(canonical_graph(form)) for form in result.equality)


def test_sweep_rejects_p_objective():
    with pytest.raises(DomainError):
        extremal_search.bound_sweep(5, Predicate.clique_free(2), lambda g, v: (0.0, False),
                                    Objective.p_spectral(2.0))


def test_predicate_algebra():
    combined = Predicate.clique_free(3) & Predicate(min_chromatic=4, connected_only=True)
    assert combined == Predicate(clique_free_k=4, min_chromatic=4, connected_only=True)
    assert Predicate().is_empty
    assert not Predicate.partite(2).closed_under_edge_addition
    assert Predicate.from_dict(combined.to_dict()) == combined
    assert combined.describe() == 'K_4-free, chi>=4, connected'
    with pytest.raises(DomainError):
        Predicate(clique_free_k=1)
    with pytest.raises(DomainError):
        Objective.a_alpha(1.5)
    assert Objective.from_dict(Objective.p_spectral(3.0).to_dict()) == Objective.p_spectral(3.0)


def test_degree_weight_one_searches_every_graph():
    assert Objective.a_alpha(0.5).monotone
    assert not Objective.a_alpha(1.0).monotone
    # A_1 = D: every cone over a triangle-free graph on four vertices has radius 4
    result = extremal_search.argmax(5, Predicate.clique_free(3), Objective.a_alpha(1.0))
    assert result.value == pytest.approx(4.0, abs=1e-9)
    assert len(result.witnesses) == 7
    reduced = extremal_search.argmax(5, Predicate.clique_free(3), Objective.a_alpha(1.0), saturated_only=True)
    assert len(reduced.witnesses) < len(result.witnesses)
