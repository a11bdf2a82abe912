import click

from app.utils import symmetrize as engine
from app.utils.graph6 import graph6_encode
from app.views import echo_json, graph_file_option, read_input_graphs


@click.command()
@graph_file_option
@click.option('--method', type=click.Choice(engine.METHODS), default='zykov', show_default=True)
@click.option('--max-steps', type=int, default=None, help='Step budget (default n^2).')
def symmetrize(source, method, max_steps):
    """
    Drive each connected input graph to a complete multipartite graph.

    Prints one JSON line per step, a JSON summary line and the final graph6.
    """
    for graph in read_input_graphs(source):
        trace = engine.symmetrize(graph, method=method, max_steps=max_steps)
        for index, step in enumerate(trace.steps, start=1):
            echo_json(dict(step.to_dict(), step=index))
        echo_json({
            'initial': graph6_encode(trace.initial_graph),
            'steps': len(trace.steps),
            'final_parts': list(trace.final_parts.sizes) if trace.final_parts else None,
            'monotone': trace.is_monotone(),
            'repeated_graph': trace.repeated_graph,
        })
        click.echo(graph6_encode(trace.final_graph))
