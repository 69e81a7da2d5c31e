"""Exact-arithmetic tools for binary (k,k)-designs.

A (k,k)-design is a binary code whose even moments ``M_2, ..., M_2k`` vanish.
Submodules: `algebra` (Krawtchouk and adjacent polynomials), `codes`
(moments and design checks), `bounds` (LP bounds, tightness, screens),
`simplex`, `constructions`, `search` and `cli`.
"""

from .algebra import (
    RationalPoly,
    adjacent_10,
    adjacent_11,
    adjacent_11_explicit,
    domain_tn,
    expand_in_krawtchouk,
    krawtchouk_t,
    krawtchouk_z,
)
from .bounds import (
    bound_from_polynomial,
    class_membership,
    lp_identity_check,
    lp_optimize,
    rao_bound,
    screen_tight,
    tightness_certificate,
    universal_bound,
    universal_certificate,
)
from .codes import (
    BinaryCode,
    antipodal_double,
    antipodal_halve,
    design_strength,
    distance_distribution,
    divisibility_check,
    is_antipodal,
    is_t_design,
    kk_level,
    moments,
    read_code,
    write_code,
)
from .constructions import construct_tight_kk, even_weight_code, golay24, paley_hadamard, sylvester_hadamard
from .search import build_graph, find_clique, search_tight

__version__ = "0.1.0"
