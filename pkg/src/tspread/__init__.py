"""Combinatorics of t-spread strongly stable ideals.

Enumeration and ranking of t-spread monomials, shadows and strongly stable
closures, graded Betti tables with their extremal corners, and a constructive
solver that decides whether prescribed corner positions and values are
realizable and builds a realizing ideal when they are.
"""

from .monomial import (
    Ambient,
    DomainError,
    Monomial,
    as_monomial,
    borel_move,
    degree,
    format_monomial,
    gap_profile,
    is_tspread,
    m2_monomial,
    max_index,
    min_index,
    parse_monomial,
    slex_cmp,
    slex_sorted,
    support,
)
from .enumeration import (
    SlexSegment,
    binom,
    card_A,
    card_M,
    decompose_by_min,
    enumerate_A,
    enumerate_M,
    iter_A_ascending,
    iter_M,
    max_A,
    min_A,
    predecessor_in_A,
    rank_in_A,
    segment_card,
    segment_ending_at,
    successor_in_A,
    take_smallest_segment,
    top_index,
)
from .borel import (
    TMonomialSet,
    borel_closure_degree,
    bshad,
    is_strongly_stable,
    min_bshad_set,
    min_bshad_single,
    shadow,
    shadow_power,
)
from .betti import (
    BettiTable,
    CornerData,
    TIdeal,
    betti_table,
    corner_sequence,
    extremal_value,
    graded_betti,
    ideal_from_borel_generators,
    is_extremal,
    m2_generator_list,
    minimalize,
    render_betti_table,
)
from .solver import (
    CornerAudit,
    CornerSpec,
    CornerTarget,
    SolveReport,
    construct_ideal,
    decompose_n,
    feasibility_chain,
    max_corners,
    validate_spec,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
