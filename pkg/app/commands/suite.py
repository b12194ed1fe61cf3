import click

from ..conjecture.suites import SUITES, is_mismatch, run_experiment_suite
from ..errors import EXIT_ORACLE_MISMATCH
from ..models import Verdict
from ..schemas.report import SuiteReport
from .common import AppContext, emit, pass_app, verdict_text


@click.command("suite")
@click.option("--name", "name", type=click.Choice(list(SUITES)), required=True, help="Battery to run")
@pass_app
def command(app: AppContext, name: str):
    """Run a named battery of tasks and append every record to the ledger"""
    records = run_experiment_suite(name, ledger=app.ledger, config=app.config)
    mismatches = sum(is_mismatch(r) for r in records)
    report = SuiteReport(
        suite=name,
        records=records,
        aborted=sum(r.verdict == Verdict.ABORTED for r in records),
        mismatches=mismatches,
    )
    lines = [f"{r.task} {r.parameters}: {verdict_text(r.verdict)} ({r.elapsed_ms} ms)" for r in records]
    lines.append(f"{len(records)} records, {report.aborted} aborted, {mismatches} oracle mismatches")
    emit(app, report, "\n".join(lines))
    if mismatches:
        click.get_current_context().exit(EXIT_ORACLE_MISMATCH)
