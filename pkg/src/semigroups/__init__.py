"""
Semigroups package - numerical semigroups and relative ideals
"""

from src.semigroups.semigroup import (
    IntSet,
    NumericalSemigroup,
    ShiftDirection,
    blowup_values,
    canonical_ideal,
    eta,
    from_generators,
    mu,
    shift_degree,
)

__all__ = [
    'IntSet',
    'NumericalSemigroup',
    'ShiftDirection',
    'blowup_values',
    'canonical_ideal',
    'eta',
    'from_generators',
    'mu',
    'shift_degree',
]
