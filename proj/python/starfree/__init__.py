"""Star-free and local colorings of Kneser graphs."""

from ._starfree import (
    Coloring,
    Graph,
    KneserGraph,
    Mode,
    StarfreeError,
    binomial,
    bounds_report,
    colex_rank,
    colex_unrank,
    decide,
    double_coloring,
    export_cnf,
    extend_coloring,
    fan_census,
    fan_validate,
    format_kneser_coloring,
    hm_bound,
    ineq1_holds,
    ineq2_holds,
    kneser_bracket,
    ladder_coloring,
    max_nonstar_intersecting,
    maximal_chain_count,
    coloring_labeling,
    parse_coloring_file,
    parse_mode,
    recursion_threshold,
    reduce_coloring,
    smallest_qualifying_class,
    solve,
    verify,
)

__version__ = "0.1.0"


def solve_kneser(n, k, mode="star-free", **options):
    """Exact value for KG(n,k) searched over the usual bracket."""
    m = parse_mode(mode) if isinstance(mode, str) else mode
    lower, upper = kneser_bracket(n, k, m)
    return solve(KneserGraph(n, k).graph, m, lower, upper, **options)
