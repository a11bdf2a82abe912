import logging

import click
import pandas as pd

from app.errors import DomainError
from app.models.polynomial import Polynomial
from app.utils import charpoly_engine
from app.utils.formatting import format_number
from app.utils.graph6 import graph6_encode
from app.utils.report_writer import emit_rows
from app.views import PARTS, echo_json, graph_file_option, output_format, read_input_graphs

logger = logging.getLogger(__name__)

STRICT_CASES = ('case1', 'case2')


def _emit_polynomial(ctx, poly: Polynomial, label: str):
    root = charpoly_engine.largest_root(poly) if poly.degree >= 1 else None
    if output_format(ctx) == 'json':
        data = poly.to_dict()
        data.update({'source': label, 'largest_root': root})
        echo_json(data)
        return
    click.echo(f"{label}")
    click.echo('coefficients: ' + ' '.join(str(c) for c in poly.coefficients))
    click.echo(f"largest root: {format_number(root)}")


def _family_polynomial(family, a, b, parts):
    if family in ('f', 'r'):
        if a is None or b is None:
            raise click.UsageError(f"--family {family} needs --a and --b")
        if family == 'f':
            return charpoly_engine.f_quintic(a, b), f"F_{{{a},{b}}}"
        return charpoly_engine.r_quintic(a, b), f"R_{{{a},{b}}}"
    if parts is None:
        raise click.UsageError('--family parts needs --parts')
    return charpoly_engine.f_parts(parts), f"F_{{{parts}}}"


def _summary(rows, key, flag):
    frame = pd.DataFrame.from_records(rows)
    grouped = frame.groupby(key, sort=False)[flag]
    return [{key: name, 'checked': int(values.size), 'holds': int(values.sum()),
             'fails': int(values.size - values.sum())} for name, values in grouped]


@click.command()
@graph_file_option
@click.option('--matrix', type=click.Choice(['adjacency', 'signless']), default='adjacency', show_default=True,
              help='Matrix whose characteristic polynomial is taken for graph input.')
@click.option('--family', type=click.Choice(['f', 'r', 'parts']), default=None,
              help='Quintic F_{a,b}, quintic R_{a,b} or the near-Turan recurrence on --parts.')
@click.option('--a', type=int, default=None)
@click.option('--b', type=int, default=None)
@click.option('--parts', type=PARTS, default=None)
@click.option('--closed-form', type=click.Choice(['adjacency', 'signless']), default=None,
              help='Closed-form polynomial of the complete multipartite graph on --parts.')
@click.option('--check-identities', is_flag=True, help='Run the exact identity grid.')
@click.option('--max', 'max_value', type=int, default=7, show_default=True)
@click.option('--check-rebalancing', is_flag=True, help='Compare radii before and after part moves.')
@click.option('--max-total', type=int, default=10, show_default=True)
@click.option('--max-r', type=int, default=4, show_default=True)
@click.pass_context
def charpoly(ctx, source, matrix, family, a, b, parts, closed_form, check_identities, max_value,
             check_rebalancing, max_total, max_r):
    """Exact characteristic polynomials, their largest roots and identity checks"""
    fmt = output_format(ctx)

    if check_identities:
        rows = charpoly_engine.check_identities(max_value)
        passed = all(row['holds'] for row in rows)
        click.echo(emit_rows(rows if fmt != 'text' else _summary(rows, 'identity', 'holds'), fmt), nl=False)
        if fmt == 'text':
            for row in rows:
                if not row['holds']:
                    click.echo(f"failed: {row['identity']} at {row['params']}")
            click.echo(f"identities: {'PASS' if passed else 'FAIL'} ({len(rows)} checks)")
        ctx.exit(0 if passed else 1)

    if check_rebalancing:
        if max_r < 2:
            raise DomainError(f"--max-r must be at least 2, got {max_r}")
        rows = charpoly_engine.check_rebalancing(max_total, max_r=max_r)
        passed = all(row['increased'] for row in rows if row['case'] in STRICT_CASES)
        if fmt != 'text':
            click.echo(emit_rows(rows, fmt), nl=False)
        else:
            if rows:
                click.echo(emit_rows(_summary(rows, 'case', 'increased'), fmt), nl=False)
            for row in rows:
                if not row['increased']:
                    click.echo(f"no increase: {row['case']} {row['before']} -> {row['after']} "
                               f"({format_number(row['radius_before'])} -> {format_number(row['radius_after'])})")
            click.echo(f"rebalancing: {'PASS' if passed else 'FAIL'} ({len(rows)} moves)")
        ctx.exit(0 if passed else 1)

    if closed_form:
        if parts is None:
            raise click.UsageError('--closed-form needs --parts')
        if closed_form == 'adjacency':
            poly = charpoly_engine.charpoly_multipartite_adjacency(parts)
        else:
            poly = charpoly_engine.charpoly_multipartite_signless(parts)
        _emit_polynomial(ctx, poly, f"K_{{{parts}}} {closed_form}")
        return

    if family:
        poly, label = _family_polynomial(family, a, b, parts)
        _emit_polynomial(ctx, poly, label)
        return

    for graph in read_input_graphs(source):
        if matrix == 'adjacency':
            poly = charpoly_engine.charpoly_exact(graph)
        else:
            poly = charpoly_engine.charpoly_signless_exact(graph)
        _emit_polynomial(ctx, poly, graph6_encode(graph))
