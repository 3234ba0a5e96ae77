"""
Scrolls package: chain partitions of exponent sets and scroll intersection arithmetic
"""

from src.scrolls.scrollfit import (
    APFit,
    ScrollFitter,
    ScrollMatrix,
    all_minimizers,
    best_fit,
    brute_force_min_cover,
    fit_with_difference,
    fits_for,
    format_scroll,
    gonality,
    scroll_matrix,
)
from src.scrolls.scrollcalc import (
    F,
    H,
    ChowClass,
    ClosedFormCount,
    CompleteIntersection,
    DivisorClass,
    Scroll,
    ScrollBounds,
    VanishingClass,
    canonical_class,
    canonical_curve_on_scroll_invariants,
    chow_product,
    ci_invariants,
    d2_genus_poly,
    ell_range_ok,
    h0_closed,
    h0_enum,
    h1_count,
    hi_vanishes,
    pencil_scroll_stats,
    scroll_bounds,
)

__all__ = [
    'APFit',
    'ScrollFitter',
    'ScrollMatrix',
    'all_minimizers',
    'best_fit',
    'brute_force_min_cover',
    'fit_with_difference',
    'fits_for',
    'format_scroll',
    'gonality',
    'scroll_matrix',
    'F',
    'H',
    'ChowClass',
    'ClosedFormCount',
    'CompleteIntersection',
    'DivisorClass',
    'Scroll',
    'ScrollBounds',
    'VanishingClass',
    'canonical_class',
    'canonical_curve_on_scroll_invariants',
    'chow_product',
    'ci_invariants',
    'd2_genus_poly',
    'ell_range_ok',
    'h0_closed',
    'h0_enum',
    'h1_count',
    'hi_vanishes',
    'pencil_scroll_stats',
    'scroll_bounds',
]
