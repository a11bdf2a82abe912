import click
import pandas as pd

from app.utils.catalog import CATALOG, get_entry, verify_theorem
from app.utils.report_writer import emit_report
from app.views import echo_json, output_format


class IntRangeList(click.ParamType):
    """Integers given as ``6``, ``6-8`` or ``4,6-7``"""
    name = 'range'

    def convert(self, value, param, ctx):
        if isinstance(value, list):
            return value
        result = []
        try:
            for item in value.replace(' ', '').split(','):
                if not item:
                    continue
                if '-' in item[1:]:
                    lo, hi = item.split('-', 1)
                    lo, hi = int(lo), int(hi)
                    if lo > hi:
                        self.fail(f"Empty range {item!r}", param, ctx)
                    result.extend(range(lo, hi + 1))
                else:
                    result.append(int(item))
        except ValueError:
            self.fail(f"Cannot parse {value!r} as an integer range", param, ctx)
        if not result:
            self.fail('Empty range', param, ctx)
        return sorted(set(result))


class FloatList(click.ParamType):
    name = 'list'

    def convert(self, value, param, ctx):
        if isinstance(value, list):
            return value
        try:
            return [float(item) for item in value.replace(' ', '').split(',') if item]
        except ValueError:
            self.fail(f"Cannot parse {value!r} as a list of numbers", param, ctx)


def _list_catalog(fmt: str):
    entries = [{'id': entry.id, 'summary': entry.summary, **entry.defaults()} for entry in CATALOG.values()]
    if fmt == 'json':
        for entry in entries:
            echo_json(entry)
        return
    frame = pd.DataFrame.from_records([
        {'id': e['id'],
         'n': ','.join(str(n) for n in e['n']),
         'r': ','.join(str(r) for r in e.get('r', [])),
         'param': ','.join(f"{k}={','.join(str(v) for v in e[k])}" for k in ('p', 'alpha') if k in e),
         'summary': e['summary']}
        for e in entries])
    if fmt == 'csv':
        click.echo(frame.to_csv(index=False, lineterminator='\n'), nl=False)
    else:
        click.echo(frame.to_string(index=False))


@click.command()
@click.option('--theorem', 'theorem_id', default=None, help='Catalog id, see --list.')
@click.option('--n', 'n_values', type=IntRangeList(), default=None, help='Vertex counts, e.g. 6-7.')
@click.option('--r', 'r_values', type=IntRangeList(), default=None, help='Clique parameters, e.g. 2,3.')
@click.option('--p', 'p_values', type=FloatList(), default=None, help='p values for p-spectral entries.')
@click.option('--alpha', 'alpha_values', type=FloatList(), default=None, help='alpha values for A_alpha entries.')
@click.option('--list', 'list_only', is_flag=True, help='List catalog entries and their default ranges.')
@click.pass_context
def verify(ctx, theorem_id, n_values, r_values, p_values, alpha_values, list_only):
    """Check a catalog theorem by exhaustive search; exit 0 iff it passes"""
    fmt = output_format(ctx)
    if list_only:
        _list_catalog(fmt)
        return
    if not theorem_id:
        raise click.UsageError('--theorem is required unless --list is given')

    entry = get_entry(theorem_id)
    params = {'p': p_values, 'alpha': alpha_values}.get(entry.param)
    report = verify_theorem(theorem_id, n_values=n_values, r_values=r_values, params=params,
                            jobs=ctx.obj.get('jobs'))
    click.echo(emit_report(report, fmt), nl=False)
    ctx.exit(0 if report.passed else 1)
