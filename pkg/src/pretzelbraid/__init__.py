"""
Braid indices of Type 1 and Type 2 pretzel links.

The package computes HOMFLY-PT polynomials of pretzel links exactly, reads
off the Morton-Franks-Williams lower bound on the braid index, builds
Seifert-circle reduction schedules that give matching upper bounds, and
checks both against closed-form braid-index formulas.

>>> from pretzelbraid import parse_notation, verify_consistency
>>> r = verify_consistency(parse_notation("P2(4,4,2;-4)"))
>>> r.braid_index, r.mfw_lower, r.upper
(7, 7, 7)
"""

from .braid_index import (
    BraidIndexReport,
    braid_index_type1,
    braid_index_type2,
    dispatch,
    enumerate_params,
    verify_consistency,
)
from .homfly import (
    NotCoveredError,
    TWO_UNLINK,
    UNKNOT,
    homfly_connected_sum,
    homfly_pretzel,
    homfly_torus_antiparallel,
    homfly_torus_parallel,
    mfw_bound,
    torus_connected_extremes,
    type1_extremes,
    type2_extremes,
)
from .laurent import ExtremePowers, LaurentPoly, SignClass, ZPoly, extract_extremes, fib_poly, substitute_mirror
from .pretzel import (
    LinkClass,
    LinkType,
    PretzelParams,
    classify,
    diagram_stats,
    mirror_params,
    normalize,
    params_from_strips,
    parse_notation,
)
from .seifert import build_seifert_graph, construction_upper_bound, mp_chain_reduce, verify_upper

__version__ = "0.1.0"
