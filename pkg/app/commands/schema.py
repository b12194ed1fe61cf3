import json

import click

from ..schemas.report import REPORTS, json_schema


@click.command("schema")
@click.option("--name", type=click.Choice(list(REPORTS)), default=None, help="One schema; all when omitted")
def command(name):
    """Print the published JSON schemas"""
    if name is not None:
        click.echo(json.dumps(json_schema(REPORTS[name]), indent=2, sort_keys=True))
        return
    click.echo(json.dumps({key: json_schema(model) for key, model in REPORTS.items()}, indent=2, sort_keys=True))
