import logging
import sys

import click
from dotenv import load_dotenv

from . import __version__
from .commands import COMMANDS
from .commands.common import AppContext, emit_error
from .config import configure_logging, get_settings, override_settings
from .errors import EXIT_PARAMETER, HedetError
from .ledger import get_ledger

# Load environment variables
load_dotenv()

logger = logging.getLogger(__name__)


class HedetGroup(click.Group):
    """Maps engine errors and usage errors onto the exit-status contract"""

    def invoke(self, ctx: click.Context):
        try:
            return super().invoke(ctx)
        except HedetError as e:
            logger.error(f"{e.label}: {e.message}")
            emit_error(ctx.obj if isinstance(ctx.obj, AppContext) else None, e)
            ctx.exit(e.exit_code)

    def main(self, args=None, prog_name=None, complete_var=None, standalone_mode=True, **extra):
        try:
            code = super().main(args, prog_name, complete_var, standalone_mode=False, **extra)
        except click.exceptions.Abort:
            click.echo("Aborted!", err=True)
            code = 1
        except click.ClickException as e:
            e.show()
            code = EXIT_PARAMETER
        code = code if isinstance(code, int) else 0
        if standalone_mode:
            sys.exit(code)
        return code


@click.group(cls=HedetGroup)
@click.version_option(__version__, prog_name="hedet")
@click.option("--format", "output_format", type=click.Choice(["text", "json"]), default=None, help="Output format")
@click.option("--ledger", "ledger_path", default=None, help="JSONL ledger path")
@click.option("--no-ledger", is_flag=True, help="Do not append records to the ledger")
@click.option("--timeout", "timeout_seconds", type=float, default=None, help="Groebner timeout in seconds")
@click.option("--max-terms", type=int, default=None, help="Cap on stored plus pending terms")
@click.option("--max-degree", type=int, default=None, help="Cap on intermediate total degree")
@click.option("--threads", type=int, default=None, help="Suite worker processes")
@click.option("--seed", type=int, default=None, help="Seed for sampled pair sets")
@click.option("--strategy", "selection_strategy", type=click.Choice(["normal", "sugar"]), default=None)
@click.option("--log-level", default=None, help="DEBUG, INFO, WARNING or ERROR")
@click.pass_context
def cli(ctx: click.Context, no_ledger: bool, **overrides):
    """Groebner-basis and graph-oracle checks of Hedetniemi-conjecture instances"""
    config = override_settings(get_settings(), **overrides)
    configure_logging(config.log_level, config.log_file)
    ledger = None if no_ledger else next(get_ledger(config.ledger_path))
    ctx.obj = AppContext(config=config, ledger=ledger)


for module in COMMANDS:
    cli.add_command(module.command)


if __name__ == "__main__":
    cli()
