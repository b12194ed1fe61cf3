"""Shared command plumbing: invocation context, output and verdict records."""
import json
import logging
from dataclasses import dataclass
from typing import Optional

import click
from pydantic import BaseModel

from ..config import Settings, get_settings, is_json_output
from ..errors import EXIT_ABORTED, EXIT_ORACLE_MISMATCH, HedetError
from ..ledger import Ledger
from ..models import ProductEdges, Verdict
from ..schemas.experiment import ExperimentRecord
from ..schemas.report import ErrorReport, VerdictReport, to_payload

logger = logging.getLogger(__name__)


@dataclass
class AppContext:
    config: Settings
    ledger: Optional[Ledger] = None


pass_app = click.make_pass_decorator(AppContext)


def product_edges_option(default: ProductEdges):
    return click.option(
        "--product-edges",
        type=click.Choice([mode.value for mode in ProductEdges]),
        default=default.value,
        show_default=True,
        help="Product edges encoded by J: the displayed monotone half or the full tensor product",
    )


def verdict_text(verdict: Verdict) -> str:
    return {Verdict.TRUE: "True", Verdict.FALSE: "False", Verdict.ABORTED: "Aborted"}[Verdict(verdict)]


def emit(app: AppContext, report: BaseModel, text: str) -> None:
    """Print the JSON payload or the text rendering, never both"""
    if is_json_output(app.config):
        click.echo(json.dumps(to_payload(report), sort_keys=True))
    else:
        click.echo(text)


def emit_error(app: Optional[AppContext], error: HedetError) -> None:
    config = app.config if app is not None else get_settings()
    if is_json_output(config):
        click.echo(json.dumps(to_payload(ErrorReport(**error.to_dict())), sort_keys=True))
    else:
        click.echo(f"Error ({error.label}): {error.message}", err=True)


def finish_verdict(app: AppContext, command: str, record: ExperimentRecord) -> None:
    """Ledger the record, print it, and exit with the status its verdict calls for"""
    if app.ledger is not None:
        app.ledger.append(record)
    report = VerdictReport(
        command=command,
        parameters=record.parameters,
        verdict=record.verdict,
        abort_cap=record.abort_cap,
        stats=record.stats,
        oracle=record.oracle,
        notes=record.notes,
        elapsed_ms=record.elapsed_ms,
    )
    lines = [verdict_text(record.verdict)]
    if record.abort_cap:
        lines.append(f"aborted: {record.abort_cap} cap reached")
    for name, stats in record.stats.items():
        summary = ", ".join(f"{key}={value}" for key, value in stats.items()) if isinstance(stats, dict) else stats
        lines.append(f"{name}: {summary}")
    if record.oracle is not None and "agrees" in record.oracle:
        lines.append(f"oracle: {'agrees' if record.oracle['agrees'] else 'MISMATCH'}")
    lines.extend(f"note: {note}" for note in record.notes)
    lines.append(f"elapsed: {record.elapsed_ms} ms")
    emit(app, report, "\n".join(lines))

    ctx = click.get_current_context()
    if record.oracle is not None and record.oracle.get("agrees") is False:
        ctx.exit(EXIT_ORACLE_MISMATCH)
    if record.verdict == Verdict.ABORTED:
        ctx.exit(EXIT_ABORTED)
