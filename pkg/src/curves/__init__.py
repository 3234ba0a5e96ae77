"""
Curves package - rational monomial curves, canonical models and classification
"""

from src.curves.monomial_curve import (
    MonomialCurve,
    new_curve,
    parse_exponents,
    pencil_degree,
    pencil_degrees,
    pencil_search_range,
    gonality_via_pencils,
    sections_with_pole_at_infinity,
    scroll_dim_via_pencil,
)
from src.curves.canonical import (
    CanonicalExponents,
    Classification,
    DegreeOracle,
    PointInvariants,
    canonical_curve,
    canonical_degree_oracle,
    canonical_model,
    classify,
)

__all__ = [
    'MonomialCurve',
    'new_curve',
    'parse_exponents',
    'pencil_degree',
    'pencil_degrees',
    'pencil_search_range',
    'gonality_via_pencils',
    'sections_with_pole_at_infinity',
    'scroll_dim_via_pencil',
    'CanonicalExponents',
    'Classification',
    'DegreeOracle',
    'PointInvariants',
    'canonical_curve',
    'canonical_degree_oracle',
    'canonical_model',
    'classify',
]
