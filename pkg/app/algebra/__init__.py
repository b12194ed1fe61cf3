from .groebner import (
    GBStats,
    GroebnerBasis,
    Ideal,
    ResourceCaps,
    buchberger,
    contains_one,
    elimination_ideal,
    ideal_membership,
    ideal_subset,
    normal_form,
    s_polynomial,
)
from .polyring import (
    BlockElim,
    GRevLex,
    Lex,
    MonomialOrder,
    Polynomial,
    Ring,
    Variable,
    compare,
    elimination_order,
    make_ring,
    order_from_name,
    var_universe,
)
from .polytext import format_polynomial, parse_generators, parse_polynomial
