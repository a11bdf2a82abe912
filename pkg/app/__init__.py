import json
import logging

import click

from app.errors import BudgetError, ConvergenceError, SpectralToolkitError
from app.utils.formatting import rounded
from config import Config

OVERRIDABLE = {
    'seed': 'RANDOM_SEED',
    'tol': 'SOLVER_TOLERANCE',
    'output_format': 'OUTPUT_FORMAT',
    'jobs': 'JOBS',
    'log_level': 'LOG_LEVEL',
}


def load_config(config_class):
    """Copy the upper-case settings of ``config_class`` onto the shared Config"""
    if config_class is Config:
        return
    for name in dir(config_class):
        if name.isupper():
            setattr(Config, name, getattr(config_class, name))


def apply_overrides(**values):
    for option, attribute in OVERRIDABLE.items():
        value = values.get(option)
        if value is not None:
            setattr(Config, attribute, value)


class ToolkitGroup(click.Group):
    """Click group that turns toolkit errors into their exit codes"""

    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except SpectralToolkitError as e:
            report_error(e)
            ctx.exit(e.exit_code)


def report_error(error: SpectralToolkitError):
    click.echo(f"error: {error}", err=True)
    if isinstance(error, (ConvergenceError, BudgetError)):
        click.echo(json.dumps(rounded(error.to_dict()), sort_keys=True), err=True)


def create_cli(config_class=Config):
    load_config(config_class)

    @click.group(cls=ToolkitGroup)
    @click.option('--seed', type=int, default=None, help='Random seed for p-spectral restarts.')
    @click.option('--tol', type=float, default=None, help='Power-iteration residual tolerance.')
    @click.option('--format', 'output_format', type=click.Choice(['json', 'csv', 'text']), default=None,
                  help='Output format.')
    @click.option('--jobs', type=click.IntRange(min=1), default=None, help='Worker processes for searches.')
    @click.option('--log-level', type=click.Choice(['DEBUG', 'INFO', 'WARNING', 'ERROR'], case_sensitive=False),
                  default=None)
    @click.pass_context
    def cli(ctx, **options):
        """Extremal spectral graph theory toolkit"""
        if options.get('log_level'):
            options['log_level'] = options['log_level'].upper()
        apply_overrides(**options)
        logging.basicConfig(level=Config.LOG_LEVEL, format=Config.LOG_FORMAT, force=True)
        ctx.ensure_object(dict)
        ctx.obj['format'] = Config.OUTPUT_FORMAT
        ctx.obj['jobs'] = Config.JOBS

    # Import command modules here so the config above is loaded first
    from app.views.construct import construct
    from app.views.spectrum import spectrum
    from app.views.charpoly import charpoly
    from app.views.symmetrize import symmetrize
    from app.views.verify import verify

    cli.add_command(construct)
    cli.add_command(spectrum)
    cli.add_command(charpoly)
    cli.add_command(symmetrize)
    cli.add_command(verify)

    return cli
