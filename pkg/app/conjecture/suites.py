"""Named batteries of verification tasks and the single-task runner behind every ledger record.

Tasks run in worker processes through joblib; records come back to the caller,
which is the only writer of the ledger.
"""
import logging
import random
import time
from itertools import product
from typing import Any, Callable, Dict, List, Optional, Tuple

from joblib import Parallel, delayed
from pydantic import BaseModel, Field

from ..config import Settings, configure_logging, get_caps, get_settings
from ..errors import ComputationAborted, OracleMismatch, ParameterError
from ..graphs.coloring import find_coloring, is_k_colorable, is_proper_coloring
from ..graphs.graph import Graph, complete, cycle, join, product_index, tensor_product
from ..graphs.named import h0, load_graph
from ..ledger import Ledger
from ..models import ProductEdges, V3Mode, Verdict
from ..schemas.experiment import ExperimentRecord
from .checks import CheckOutcome, check_fixed_pair, check_theorem44
from .pairsets import check_prop41, edge_bits, labeled_graphs, random_graph
from .structure import StructuralOutcome, verify_A4, verify_prop43, verify_small_critical

logger = logging.getLogger(__name__)

ORACLE_MISMATCH = "oracle-mismatch"


class TaskSpec(BaseModel):
    task: str
    parameters: Dict[str, Any] = Field(default_factory=dict)

    def label(self) -> str:
        args = ", ".join(f"{key}={value}" for key, value in self.parameters.items())
        return f"{self.task}({args})"


def _pair(g: str, h: str, k: int) -> TaskSpec:
    return TaskSpec(task="pair", parameters={"graph_g": g, "graph_h": h, "k": k})


SUITES: Dict[str, List[TaskSpec]] = {
    "thm44-desk": [
        TaskSpec(task="thm44", parameters={"k": 3, "n": 4, "nprime": 4}),
        TaskSpec(task="thm44", parameters={"k": 3, "n": 4, "nprime": 5}),
    ],
    "pairs-desk": [_pair("H0", "H0", 4), _pair("H0", "Grotzsch", 4)],
    "cycles-desk": [_pair("C5", "C5", 3), _pair("C5", "C7", 3), _pair("C7", "C7", 3)],
    "structural": [
        TaskSpec(task="a4"),
        TaskSpec(task="small-critical", parameters={"k": 3, "max_n": 7}),
        TaskSpec(task="small-critical", parameters={"k": 4, "max_n": 7}),
        TaskSpec(task="small-critical", parameters={"k": 5, "max_n": 8}),
    ]
    + [TaskSpec(task="prop43", parameters={"k": k}) for k in range(2, 11)],
    "section43": [_pair("K1+H0", "Hstar", 5)],
    "thm37": [TaskSpec(task="thm37", parameters={"k": 6})],
    "cross-oracle": [
        TaskSpec(task="cross-oracle", parameters={"k": k, "n": n, "nprime": nprime})
        for k, n, nprime in product((3, 4), (1, 2, 3), (1, 2, 3))
    ]
    + [
        TaskSpec(task="cross-oracle", parameters={"k": k, "n": 4, "nprime": 4, "random": 100})
        for k in (3, 4)
    ],
}


# =============================================================================
# TASK HANDLERS
# =============================================================================


def _product_edges(parameters: Dict[str, Any]) -> ProductEdges:
    return ProductEdges(parameters.get("product_edges", ProductEdges.MONOTONE))


def _thm44(parameters: Dict[str, Any], config: Settings) -> CheckOutcome:
    k, n, nprime = parameters["k"], parameters["n"], parameters["nprime"]
    product_edges = _product_edges(parameters)
    outcome = check_theorem44(
        k,
        n,
        nprime,
        caps=get_caps(config),
        strategy=config.selection_strategy,
        product_edges=product_edges,
        compute_both=parameters.get("compute_both", False),
    )
    if parameters.get("cross_check") and edge_bits(n, nprime) <= config.max_exhaustive_bits:
        # Q fixes vertex 1, so the combinatorial side reads (V3) the same way
        report = check_prop41(
            k,
            n,
            nprime,
            v3_mode=V3Mode.VERTEX1,
            product_edges=product_edges,
            max_exhaustive_bits=config.max_exhaustive_bits,
            seed=config.seed,
        )
        agrees = report.holds == (outcome.verdict == Verdict.TRUE)
        outcome.oracle = {
            "name": "pair-set-inclusion",
            "verdict": Verdict.of(report.holds).value,
            "v_size": report.v_size,
            "agrees": agrees,
        }
        outcome.notes.extend(report.notes)
        if not agrees:
            raise OracleMismatch(
                f"algebraic verdict {outcome.verdict.value} but V inside W is {report.holds}",
                details={"k": k, "n": n, "nprime": nprime, "algebraic": outcome.verdict == Verdict.TRUE},
            )
    return outcome


def _pair_task(parameters: Dict[str, Any], config: Settings) -> CheckOutcome:
    return check_fixed_pair(
        load_graph(parameters["graph_g"]),
        load_graph(parameters["graph_h"]),
        parameters["k"],
        caps=get_caps(config),
        strategy=config.selection_strategy,
        product_edges=ProductEdges(parameters.get("product_edges", ProductEdges.FULL)),
    )


def _cross_oracle(parameters: Dict[str, Any], config: Settings) -> CheckOutcome:
    """Fixed-pair ideal against product colourability over a batch of labelled pairs"""
    k, n, nprime = parameters["k"], parameters["n"], parameters["nprime"]
    if "random" in parameters:
        rng = random.Random(parameters.get("seed", config.seed))
        pairs = [(random_graph(n, rng), random_graph(nprime, rng)) for _ in range(parameters["random"])]
    else:
        pairs = list(product(labeled_graphs(n), labeled_graphs(nprime)))
    product_edges = ProductEdges(parameters.get("product_edges", ProductEdges.FULL))
    mismatches, unit = 0, 0
    for g, h in pairs:
        try:
            result = check_fixed_pair(
                g, h, k, caps=get_caps(config), strategy=config.selection_strategy, product_edges=product_edges
            )
        except OracleMismatch as e:
            mismatches += 1
            logger.error(f"Cross-oracle mismatch at k={k}: {e.message}")
            continue
        unit += result.verdict == Verdict.TRUE
    outcome = CheckOutcome(Verdict.of(mismatches == 0))
    outcome.oracle = {"name": "colorability", "pairs": len(pairs), "unit": unit, "mismatches": mismatches, "agrees": mismatches == 0}
    return outcome


def _structural(outcome: StructuralOutcome) -> CheckOutcome:
    result = CheckOutcome(Verdict.of(outcome.passed), notes=list(outcome.discrepancies))
    result.oracle = {"name": outcome.target, "details": outcome.details}
    return result


def product_chromatic_bounds(g: Graph, h: Graph, k: int) -> Tuple[bool, bool]:
    """(chi(G x H) >= k, chi(G x H) <= k) on the materialized product

    The upper bound lifts a k-colouring of either factor through its projection.
    """
    prod = tensor_product(g, h)
    lower = not is_k_colorable(prod, k - 1)
    upper = False
    for factor, project in ((g, lambda i, ip: i), (h, lambda i, ip: ip)):
        coloring = find_coloring(factor, k)
        if coloring is None:
            continue
        lifted = {
            product_index(i, ip, h.n): coloring[project(i, ip)] for i in g.vertices for ip in h.vertices
        }
        if is_proper_coloring(prod, lifted):
            upper = True
            break
    return lower, upper


def _thm37(parameters: Dict[str, Any], config: Settings) -> CheckOutcome:
    """chi((K_{k-4}+H0) x (K_{k-6}+C5+C5)) = k, both bounds decided by the colouring oracle"""
    k = parameters.get("k", 6)
    if k < 6:
        raise ParameterError(f"this product needs k >= 6, got {k}")
    g = join(complete(k - 4), h0())
    h = join(complete(k - 6), join(cycle(5), cycle(5)))
    lower, upper = product_chromatic_bounds(g, h, k)
    notes = [f"product order {g.n * h.n}"]
    if not lower:
        notes.append(f"product is {k - 1}-colourable")
    if not upper:
        notes.append(f"no lifted {k}-colouring")
    return CheckOutcome(Verdict.of(lower and upper), notes=notes)


HANDLERS: Dict[str, Callable[[Dict[str, Any], Settings], CheckOutcome]] = {
    "thm44": _thm44,
    "pair": _pair_task,
    "cross-oracle": _cross_oracle,
    "a4": lambda parameters, config: _structural(verify_A4()),
    "small-critical": lambda parameters, config: _structural(
        verify_small_critical(parameters["k"], parameters["max_n"])
    ),
    "prop43": lambda parameters, config: _structural(verify_prop43(parameters["k"])),
    "thm37": _thm37,
}


# =============================================================================
# RUNNER
# =============================================================================


def run_task(spec: TaskSpec, config: Optional[Settings] = None) -> ExperimentRecord:
    """Run one task; caps and oracle disagreements become records, parameter errors propagate"""
    config = config or get_settings()
    try:
        handler = HANDLERS[spec.task]
    except KeyError:
        raise ParameterError(f"unknown task {spec.task!r}")
    start = time.perf_counter()
    fields: Dict[str, Any] = {"task": spec.task, "parameters": spec.parameters}
    try:
        outcome = handler(spec.parameters, config)
        fields.update(verdict=outcome.verdict, stats=outcome.stats, oracle=outcome.oracle, notes=outcome.notes)
    except ComputationAborted as e:
        logger.warning(f"{spec.label()} aborted: {e.message}")
        fields.update(verdict=Verdict.ABORTED, abort_cap=e.cap, stats={"partial": e.stats})
    except OracleMismatch as e:
        fields.update(
            verdict=Verdict.of(bool(e.details.get("algebraic", False))),
            oracle={"agrees": False, "details": e.details},
            notes=[f"{ORACLE_MISMATCH}: {e.message}"],
        )
    fields["elapsed_ms"] = round((time.perf_counter() - start) * 1000, 3)
    record = ExperimentRecord(**fields)
    logger.info(f"{spec.label()}: {record.verdict.value} in {record.elapsed_ms} ms")
    return record


def is_mismatch(record: ExperimentRecord) -> bool:
    return record.oracle is not None and record.oracle.get("agrees") is False


def _worker_task(spec: TaskSpec, config: Settings) -> ExperimentRecord:
    # loky workers start with an unconfigured root logger
    configure_logging(config.log_level, config.log_file)
    return run_task(spec, config)


def run_experiment_suite(
    name: str,
    *,
    ledger: Optional[Ledger] = None,
    config: Optional[Settings] = None,
) -> List[ExperimentRecord]:
    """Run a named battery and append every record to the ledger in task order"""
    config = config or get_settings()
    if name not in SUITES:
        raise ParameterError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    tasks = SUITES[name]
    logger.info(f"Running suite {name}: {len(tasks)} tasks on {config.threads} workers")
    n_jobs = min(config.threads, len(tasks))
    if n_jobs > 1:
        records: List[ExperimentRecord] = Parallel(n_jobs=n_jobs, backend="loky")(
            delayed(_worker_task)(spec, config) for spec in tasks
        )
    else:
        records = [run_task(spec, config) for spec in tasks]
    if ledger is not None:
        for record in records:
            ledger.append(record)
    aborted = sum(r.verdict == Verdict.ABORTED for r in records)
    mismatches = sum(is_mismatch(r) for r in records)
    logger.info(f"Suite {name} finished: {len(records)} records, {aborted} aborted, {mismatches} mismatches")
    return records
