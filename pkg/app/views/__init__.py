"""Helpers shared by the command modules"""

import json
from typing import Any, List

import click

from app.errors import ConstructionError
from app.models.graph import Graph
from app.models.part_sizes import PartSizes
from app.utils.formatting import rounded
from app.utils.graph6 import read_graphs

graph_file_option = click.option(
    '--file', 'source', type=click.File('r'), default='-',
    help='graph6 input, one graph per line (default: stdin).')


class PartSizesParam(click.ParamType):
    """Comma-separated part sizes such as ``2,2,3``"""
    name = 'parts'

    def convert(self, value, param, ctx):
        if isinstance(value, PartSizes):
            return value
        try:
            return PartSizes.parse(value)
        except ConstructionError as e:
            self.fail(str(e), param, ctx)


PARTS = PartSizesParam()


def read_input_graphs(source) -> List[Graph]:
    graphs = read_graphs(source.read())
    if not graphs:
        raise click.UsageError('No graph6 input given')
    return graphs


def echo_json(data: Any):
    """One JSON document per line, floats at the configured precision"""
    click.echo(json.dumps(rounded(data), sort_keys=True))


def output_format(ctx: click.Context) -> str:
    return (ctx.obj or {}).get('format', 'text')
