"""Warping degree and maximal independent region number of knot projections."""

from .codec import canonical, emit_gauss, emit_pd, parse_gauss, parse_pd, parse_pd_file, realize
from .region_opt import (
    IRReport,
    RegionChoiceMatrix,
    emit_dimacs,
    independent_sets_for_base,
    ir,
    ir_base,
    max_independent_regions,
    region_choice_matrix,
    solve_01_system,
    verify_bounds,
)
from .shadow import Region, Shadow, build_shadow, is_reduced, quadrants, strands, trace_regions
from .warping import (
    Diagram,
    OrientedBasedDiagram,
    WarpReport,
    alternating_assignments,
    warping_degree_diagram,
    warping_degree_shadow,
    warping_set,
)

__version__ = "0.1.0"
