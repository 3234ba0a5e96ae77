"""
Monomial scrolls - semigroups, canonical models and scroll fits of monomial curves
"""

__version__ = "0.1.0"
