from .checks import CheckOutcome, check_fixed_pair, check_theorem44, substitution_verdict
from .pairsets import (
    GraphPairSet,
    InclusionReport,
    build_pair_set,
    build_V_set,
    build_Vprime_set,
    build_W_set,
    check_prop41,
    in_V,
    in_Vprime,
    in_W,
)
from .structure import StructuralOutcome, catalog, verify_A4, verify_prop43, verify_small_critical
from .suites import SUITES, TaskSpec, is_mismatch, run_experiment_suite, run_task
