from typing import Optional, Tuple

import click

from ..algebra.groebner import Ideal, buchberger
from ..algebra.polyring import Variable, order_from_name
from ..algebra.polytext import format_polynomial, parse_generators
from ..config import get_caps
from ..errors import ParameterError
from ..schemas.report import BasisReport
from .common import AppContext, emit, pass_app


@click.command("gb")
@click.option("--order", "order_name", type=click.Choice(["lex", "grevlex", "elim"]), default="grevlex", show_default=True)
@click.option("--keep", multiple=True, help="Variable kept by --order elim (repeatable)")
@click.option("--file", "path", type=click.Path(exists=True, dir_okay=False), default=None, help="One generator per line")
@click.option("--poly", "polys", multiple=True, help="Generator in the text syntax (repeatable)")
@click.option("--strategy", type=click.Choice(["normal", "sugar"]), default=None)
@pass_app
def command(app: AppContext, order_name: str, keep: Tuple[str, ...], path: Optional[str], polys, strategy):
    """Reduced Groebner basis of generators given as text"""
    lines = list(polys)
    if path is not None:
        with open(path, encoding="utf-8") as handle:
            lines.append(handle.read())
    if not lines:
        raise ParameterError("give generators with --poly or --file")
    generators = parse_generators("\n".join(lines), exponent_bits=app.config.exponent_bits)
    if not generators:
        raise ParameterError("no generators found")
    ideal = Ideal(generators)
    order = order_from_name(ideal.ring, order_name, [Variable.parse(name) for name in keep] if keep else None)
    gb = buchberger(ideal, order, caps=get_caps(app.config), strategy=strategy or app.config.selection_strategy)
    basis = [format_polynomial(p, order) for p in gb.basis]
    report = BasisReport(
        order=order.describe(),
        ring=[v.name for v in ideal.ring.variables],
        basis=basis,
        is_unit=gb.is_unit(),
        stats=gb.stats.model_dump(),
    )
    emit(app, report, "\n".join(basis))
