"""Algebraic verdicts, each cross-checked against a combinatorial oracle where one exists."""
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from ..algebra.groebner import Ideal, ResourceCaps, buchberger, ideal_subset
from ..algebra.polyring import Variable
from ..encode.assemble import assemble_Jcal, assemble_L, tilde_I, tilde_J
from ..encode.families import check_parameters
from ..errors import OracleMismatch
from ..graphs.coloring import is_k_colorable
from ..graphs.graph import Graph, tensor_product
from ..models import ProductEdges, Verdict
from .pairsets import in_W, product_graph

logger = logging.getLogger(__name__)

PRODUCT_DISCREPANCY = "product-encoding-discrepancy"


@dataclass
class CheckOutcome:
    verdict: Verdict
    stats: Dict[str, Dict[str, Any]] = field(default_factory=dict)
    oracle: Optional[Dict[str, Any]] = None
    notes: List[str] = field(default_factory=list)


def check_theorem44(
    k: int,
    n: int,
    nprime: int,
    *,
    caps: Optional[ResourceCaps] = None,
    strategy: str = "normal",
    product_edges: ProductEdges = ProductEdges.MONOTONE,
    compute_both: bool = False,
) -> CheckOutcome:
    """tilde J inside tilde I; a unit tilde I settles it without computing tilde J"""
    check_parameters(k, n, nprime)
    outcome = CheckOutcome(Verdict.TRUE)
    ti = tilde_I(k, n, nprime, caps=caps, strategy=strategy, product_edges=product_edges)
    outcome.stats["tilde_I"] = ti.basis.stats.model_dump()
    unit = ti.basis.is_unit()
    if unit:
        outcome.notes.append("tilde-I-unit")
        if not compute_both:
            logger.info(f"tilde I({k},{n},{nprime}) is the unit ideal, inclusion holds")
            return outcome
    tj = tilde_J(k, n, nprime, caps=caps, strategy=strategy, product_edges=product_edges)
    outcome.stats["tilde_J"] = tj.basis.stats.model_dump()
    outcome.verdict = Verdict.of(ideal_subset(tj, ti, caps=caps, strategy=strategy))
    logger.info(f"tilde J({k},{n},{nprime}) inside tilde I: {outcome.verdict.value}")
    return outcome


def check_fixed_pair(
    g: Graph,
    h: Graph,
    k: int,
    *,
    caps: Optional[ResourceCaps] = None,
    strategy: str = "normal",
    product_edges: ProductEdges = ProductEdges.FULL,
) -> CheckOutcome:
    """True when the fixed-pair ideal is the unit ideal: no (k-1)-colouring of the encoded product"""
    ideal = assemble_L(g, h, k, product_edges)
    gb = buchberger(ideal, caps=caps, strategy=strategy)
    unit = gb.is_unit()
    outcome = CheckOutcome(Verdict.of(unit), stats={"L": gb.stats.model_dump()})

    encoded_colorable = is_k_colorable(product_graph(g, h, product_edges), k - 1)
    outcome.oracle = {
        "name": "colorability",
        "product": ProductEdges(product_edges).value,
        "verdict": Verdict.of(not encoded_colorable).value,
        "agrees": unit != encoded_colorable,
    }
    if unit == encoded_colorable:
        logger.error(f"Fixed-pair verdict {unit} disagrees with the colorability oracle (k={k})")
        raise OracleMismatch(
            f"fixed-pair ideal says unit={unit} but the encoded product is "
            f"{'' if encoded_colorable else 'not '}{k - 1}-colorable",
            details={"k": k, "n": g.n, "nprime": h.n, "algebraic": unit, "oracle_colorable": encoded_colorable},
        )

    if ProductEdges(product_edges) == ProductEdges.MONOTONE:
        tensor_verdict = not is_k_colorable(tensor_product(g, h), k - 1)
        outcome.oracle["tensor_verdict"] = Verdict.of(tensor_verdict).value
        if tensor_verdict != unit:
            logger.warning(f"Monotone and tensor product verdicts differ for k={k}")
            outcome.notes.append(PRODUCT_DISCREPANCY)
    return outcome


def substitution_verdict(
    g: Graph,
    h: Graph,
    k: int,
    *,
    caps: Optional[ResourceCaps] = None,
    strategy: str = "normal",
    product_edges: ProductEdges = ProductEdges.MONOTONE,
) -> bool:
    """Whether the W-ring system with G and H substituted is solvable, i.e. (G, H) lies in W"""
    jcal = assemble_Jcal(k, g.n, h.n, product_edges)
    values = {Variable.e(i, j): g.adjacency(i, j) for i in g.vertices for j in g.vertices if i < j}
    values.update({Variable.f(i, j): h.adjacency(i, j) for i in h.vertices for j in h.vertices if i < j})
    substituted = Ideal([p.substitute(values) for p in jcal], jcal.ring, f"{jcal.provenance}[G,H]")
    solvable = True
    if substituted.generators:
        solvable = not buchberger(substituted, caps=caps, strategy=strategy).is_unit()
    expected = in_W(g, h, k, product_edges)
    if solvable != expected:
        raise OracleMismatch(
            f"substituted system solvable={solvable} but W membership is {expected}",
            details={"k": k, "n": g.n, "nprime": h.n},
        )
    return solvable
