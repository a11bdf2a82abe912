import itertools

import networkx as nx
import numpy as np

from app.models.graph import Graph
from app.utils.graph_engine import canonical_form, canonical_graph, is_connected


def to_networkx(graph: Graph) -> nx.Graph:
    result = nx.Graph()
    result.add_nodes_from(range(graph.n))
    result.add_edges_from(graph.edges())
    return result


def random_graph(n: int, density: float, rng: np.random.Generator) -> Graph:
    edges = [(i, j) for i, j in itertools.combinations(range(n), 2) if rng.random() < density]
    return Graph.from_edges(n, edges)


def all_graphs(n: int):
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph.from_edges(n, [pair for bit, pair in enumerate(pairs) if mask >> bit & 1])


def graph_classes(n: int, connected: bool = False):
    """One graph per isomorphism class on n vertices"""
    forms = {canonical_form(graph) for graph in all_graphs(n) if not connected or is_connected(graph)}
    return [canonical_graph(form) for form in sorted(forms)]
