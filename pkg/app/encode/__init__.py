from .assemble import (
    FAMILIES,
    assemble_Ical,
    assemble_Jcal,
    assemble_L,
    build_family,
    edge_variables,
    tilde_I,
    tilde_J,
)
from .families import (
    coloring_ideal,
    complete_sum,
    fixed_graph_ideal,
    ideal_E,
    ideal_I,
    ideal_Iprime,
    ideal_J,
    ideal_J_mirror,
    ideal_P,
    ideal_Pprime,
    ideal_product,
    ideal_Q,
    ideal_Qprime,
    ideal_R,
    ideal_Rprime,
    ideal_S,
    ideal_Sprime,
    ideal_X,
    ideal_Z,
    triangle_free_ideal,
)
