import logging

import click

from app.models.graph import Graph
from app.utils import constructions
from app.utils.graph6 import graph6_encode
from app.utils.graph_engine import chromatic_number, clique_number
from app.utils.spectral_engine import adjacency_radius, signless_laplacian_radius
from app.views import PARTS, echo_json

logger = logging.getLogger(__name__)


def summary(graph: Graph) -> dict:
    return {
        'n': graph.n,
        'm': graph.edge_count,
        'omega': clique_number(graph),
        'chi': chromatic_number(graph),
        'lambda': adjacency_radius(graph).value,
        'q': signless_laplacian_radius(graph).value,
    }


def emit(graph: Graph):
    """graph6 line, then the JSON summary line"""
    logger.info("Built %r", graph)
    data = summary(graph)
    click.echo(graph6_encode(graph))
    echo_json(data)


@click.group()
def construct():
    """Build a named extremal graph and print it as graph6"""


@construct.command('turan')
@click.option('--n', type=int, required=True)
@click.option('--r', type=int, required=True)
def turan(n, r):
    """Turan graph T_r(n)"""
    emit(constructions.turan_graph(n, r))


@construct.command('multipartite')
@click.option('--parts', type=PARTS, required=True)
def multipartite(parts):
    """Complete multipartite graph with the given part sizes"""
    emit(constructions.complete_multipartite(parts))


@construct.command('sk')
@click.option('--a', type=int, required=True)
@click.option('--b', type=int, required=True)
def sk(a, b):
    """SK_{a,b}: K_{a,b} with one edge subdivided"""
    emit(constructions.sk_graph(a, b))


@construct.command('y')
@click.option('--n', type=int, required=True)
@click.option('--r', type=int, required=True)
def y(n, r):
    """Y_r(n), the non-r-partite spectral extremal graph"""
    emit(constructions.y_graph(n, r))


@construct.command('lemma42')
@click.option('--parts', type=PARTS, required=True)
def lemma42(parts):
    """Near-Turan graph on parts b_1, ..., b_r plus one extra vertex"""
    emit(constructions.lemma42_graph(parts))


@construct.command('erdos_family')
@click.option('--n', type=int, required=True)
@click.option('--x1', type=int, required=True, help='Size of the first split of X.')
def erdos_family(n, x1):
    emit(constructions.erdos_family_graph(n, x1))


@construct.command('split')
@click.option('--n', type=int, required=True)
@click.option('--k', type=int, required=True)
def split(n, k):
    """S_{n,k} = K_k joined to an independent set of size n-k"""
    emit(constructions.split_graph(n, k))


@construct.command('complete')
@click.option('--n', type=int, required=True)
def complete(n):
    emit(constructions.complete_graph(n))


@construct.command('cycle')
@click.option('--n', type=int, required=True)
def cycle(n):
    emit(constructions.cycle_graph(n))


@construct.command('path')
@click.option('--n', type=int, required=True)
def path(n):
    emit(constructions.path_graph(n))
