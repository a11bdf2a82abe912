import click

from app.errors import DomainError
from app.models.spectral_result import PSpectralOptions
from app.utils.graph6 import graph6_encode
from app.utils.spectral_engine import (a_alpha_radius, adjacency_radius, p_spectral_radius,
                                       signless_laplacian_radius)
from app.views import echo_json, graph_file_option, read_input_graphs
from config import Config

OBJECTIVES = ('lambda', 'q', 'a_alpha', 'p')


def solve(graph, objective, alpha=None, p=None):
    if objective == 'lambda':
        return adjacency_radius(graph, Config.SOLVER_TOLERANCE)
    if objective == 'q':
        return signless_laplacian_radius(graph, Config.SOLVER_TOLERANCE)
    if objective == 'a_alpha':
        if alpha is None:
            raise DomainError('--alpha is required for the a_alpha objective')
        return a_alpha_radius(graph, alpha, Config.SOLVER_TOLERANCE)
    if p is None:
        raise DomainError('--p is required for the p objective')
    options = PSpectralOptions(p=p, restarts=Config.P_RESTARTS, max_iterations=Config.P_MAX_ITERATIONS,
                               tolerance=Config.P_TOLERANCE, seed=Config.RANDOM_SEED)
    return p_spectral_radius(graph, options)


@click.command()
@graph_file_option
@click.option('--objective', type=click.Choice(OBJECTIVES), default='lambda', show_default=True)
@click.option('--alpha', type=float, default=None, help='Weight for A_alpha = alpha D + (1 - alpha) A.')
@click.option('--p', type=float, default=None, help='Exponent of the p-spectral radius, p > 1.')
def spectrum(source, objective, alpha, p):
    """Spectral radius and optimal vector of each input graph, one JSON line per graph"""
    for graph in read_input_graphs(source):
        result = solve(graph, objective, alpha=alpha, p=p)
        data = result.to_dict()
        data['graph'] = graph6_encode(graph)
        data['objective'] = objective
        echo_json(data)
