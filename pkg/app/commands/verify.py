import click

from ..conjecture.structure import StructuralOutcome, verify_A4, verify_prop43, verify_small_critical
from ..schemas.report import StructuralReport
from .common import AppContext, emit, pass_app


def _text(outcome: StructuralOutcome) -> str:
    details = outcome.details
    if outcome.target == "a4":
        head = f"{details['count']} classes; H0 {'identified' if details['h0_identified'] else 'not identified'}"
    elif "orders" in details:
        head = "\n".join(
            (
                f"order {entry['order']}: {len(entry['found'])} classes {' '.join(entry['found'])}".rstrip()
                + (" (definitional)" if entry.get("definitional") else "")
            )
            for entry in details["orders"]
        )
    elif "spot_checks" in details:
        head = "\n".join(
            f"{check['graph']}: {'critical' if check['critical'] else 'NOT critical'}"
            for check in details["spot_checks"]
        )
    else:
        head = f"identity {details['identity']}; s(x1,x1) = {details['diagonal']}; e forced to 0: {details['e_forced_zero']}"
    lines = [head] + outcome.discrepancies
    lines.append("passed" if outcome.passed else "FAILED")
    return "\n".join(lines)


@click.command("verify")
@click.option("--target", type=click.Choice(["a4", "small-critical", "prop43"]), required=True)
@click.option("--k", "k", type=int, default=4, show_default=True, help="Criticality or root-of-unity order")
@click.option("--max-n", type=int, default=7, show_default=True, help="Largest order enumerated")
@pass_app
def command(app: AppContext, target: str, k: int, max_n: int):
    """Check the small critical-graph catalogs or the root-of-unity identity"""
    if target == "a4":
        outcome = verify_A4()
    elif target == "small-critical":
        outcome = verify_small_critical(k, max_n)
    else:
        outcome = verify_prop43(k)
    report = StructuralReport(
        target=outcome.target,
        passed=outcome.passed,
        details=outcome.details,
        discrepancies=outcome.discrepancies,
    )
    emit(app, report, _text(outcome))
