"""
Canonical model, degree oracle and singularity classification of monomial curves
"""

import math
from dataclasses import dataclass
from functools import reduce
from typing import Tuple

from src.curves.monomial_curve import MonomialCurve
from src.semigroups.semigroup import IntSet, NumericalSemigroup, canonical_ideal, eta, mu
from src.utils.error_handler import PreconditionError
from src.utils.logger import setup_logger

logger = setup_logger(name="canonical")


@dataclass(frozen=True)
class CanonicalExponents:
    """
    Exponent set A of the canonical model C' = (t^a : a in A) in P^(g-1).

    from_p holds frobenius_P - G_P, from_q holds frobenius_P + G_Q; they are disjoint.
    """
    exponents: Tuple[int, ...]
    from_p: Tuple[int, ...]
    from_q: Tuple[int, ...]

    def __len__(self) -> int:
        return len(self.exponents)

    @property
    def gcd(self) -> int:
        return reduce(math.gcd, self.exponents, 0)


def _require_genus_two(curve: MonomialCurve) -> None:
    if curve.genus <= 1:
        raise PreconditionError(
            f"canonical model undefined at this genus (g={curve.genus}) for curve {curve.label()}"
        )


def canonical_model(curve: MonomialCurve) -> CanonicalExponents:
    """
    A = (frobenius_P - G_P) union (frobenius_P + G_Q).

    Raises:
        PreconditionError: genus <= 1
    """
    _require_genus_two(curve)
    gamma_p = curve.semigroup_p.frobenius
    from_p = tuple(sorted(gamma_p - gap for gap in curve.semigroup_p.gaps))
    from_q = tuple(sorted(gamma_p + gap for gap in curve.semigroup_q.gaps))
    exponents = tuple(sorted(set(from_p) | set(from_q)))
    return CanonicalExponents(exponents=exponents, from_p=from_p, from_q=from_q)


def is_arithmetic_progression(exponents: Tuple[int, ...]) -> bool:
    """A single progression, i.e. C' lies on a 1-fold scroll and C is 2-gonal."""
    return len({b - a for a, b in zip(exponents, exponents[1:])}) <= 1


def canonical_curve(curve: MonomialCurve) -> MonomialCurve:
    """The canonical model reparametrized by t -> t^(1/gcd(A)) as a monomial curve."""
    canonical = canonical_model(curve)
    divisor = canonical.gcd
    return MonomialCurve.new(a // divisor for a in canonical.exponents if a > 0)


@dataclass(frozen=True)
class DegreeOracle:
    """Value-set dimensions of the dualizing sheaf recomputed from A."""
    dim_p: int
    dim_q: int
    h0: int
    p_values_equal_canonical_ideal: bool

    @property
    def total(self) -> int:
        return self.dim_p + self.dim_q


def _union_of_translates(semigroup: NumericalSemigroup, offsets) -> IntSet:
    base = semigroup.as_intset()
    return reduce(IntSet.union, (base.shift(k) for k in offsets))


def canonical_degree_oracle(curve: MonomialCurve) -> DegreeOracle:
    """
    Recompute #(v_P(V_P) \\ S_P) and #(v_Q(V_Q) \\ S_Q) directly from A.

    Expected: dim_p = 2 delta_P - beta_P, dim_q = 2 delta_Q + beta_P - 2, and
    their sum is 2g - 2.
    """
    canonical = canonical_model(curve)
    values_p = _union_of_translates(curve.semigroup_p, canonical.exponents)
    values_q = _union_of_translates(curve.semigroup_q, (-a for a in canonical.exponents))
    return DegreeOracle(
        dim_p=values_p.count_not_in(curve.semigroup_p.as_intset()),
        dim_q=values_q.count_not_in(curve.semigroup_q.as_intset()),
        h0=len(canonical),
        p_values_equal_canonical_ideal=values_p == canonical_ideal(curve.semigroup_p),
    )


@dataclass(frozen=True)
class PointInvariants:
    """Local invariants of one special point."""
    delta: int
    conductor: int
    frobenius: int
    eta: int
    mu: int

    @property
    def singular(self) -> bool:
        return self.delta > 0

    @property
    def gorenstein(self) -> bool:
        return self.eta == 0

    @property
    def kunz(self) -> bool:
        return self.eta == 1

    @property
    def almost_gorenstein(self) -> bool:
        return self.mu <= 1

    @property
    def colength_in_normalization(self) -> int:
        """dim(O_P / C_P) = #(S cap [0, beta)) = beta - delta."""
        return self.conductor - self.delta

    @classmethod
    def of(cls, semigroup: NumericalSemigroup) -> 'PointInvariants':
        return cls(
            delta=semigroup.delta,
            conductor=semigroup.conductor,
            frobenius=semigroup.frobenius,
            eta=eta(semigroup),
            mu=mu(semigroup),
        )

    def to_dict(self) -> dict:
        return {
            'delta': self.delta,
            'conductor': self.conductor,
            'frobenius': self.frobenius,
            'eta': self.eta,
            'mu': self.mu,
            'gorenstein': self.gorenstein,
        }


@dataclass(frozen=True)
class Classification:
    """Singularity classification of a monomial curve."""
    genus: int
    point_p: PointInvariants
    point_q: PointInvariants
    g_prime: int
    hyperelliptic: bool = False

    @property
    def gorenstein_p(self) -> bool:
        return self.point_p.gorenstein

    @property
    def gorenstein_q(self) -> bool:
        return self.point_q.gorenstein

    @property
    def gorenstein(self) -> bool:
        return self.gorenstein_p and self.gorenstein_q

    @property
    def eta(self) -> int:
        return self.point_p.eta + self.point_q.eta

    @property
    def mu(self) -> int:
        return self.point_p.mu + self.point_q.mu

    @property
    def non_gorenstein_points(self) -> int:
        return sum(1 for point in (self.point_p, self.point_q) if not point.gorenstein)

    @property
    def kunz(self) -> bool:
        """Non-Gorenstein, and every non-Gorenstein point has eta = 1."""
        bad = [point for point in (self.point_p, self.point_q) if not point.gorenstein]
        return bool(bad) and all(point.kunz for point in bad)

    @property
    def almost_gorenstein(self) -> bool:
        return self.point_p.almost_gorenstein and self.point_q.almost_gorenstein

    @property
    def nearly_gorenstein(self) -> bool:
        return self.mu == 1

    @property
    def nearly_normal(self) -> bool:
        colength = sum(point.colength_in_normalization
                       for point in (self.point_p, self.point_q) if point.singular)
        return colength == 1

    @property
    def identity_applies(self) -> bool:
        """
        g = g' + eta + mu is only claimed for nonhyperelliptic curves; on a
        hyperelliptic Gorenstein curve C' is a rational normal curve with g' = 0.
        """
        return not self.hyperelliptic

    @property
    def identity_holds(self) -> bool:
        """g = g' + eta + mu."""
        return self.genus == self.g_prime + self.eta + self.mu

    def label(self) -> str:
        """Table label: 'K' for Kunz, 'NG' for nearly Gorenstein, '' otherwise."""
        if self.gorenstein:
            return ''
        if self.kunz:
            return 'K'
        if self.nearly_gorenstein:
            return 'NG'
        return ''

    def to_dict(self) -> dict:
        return {
            'gorensteinP': self.gorenstein_p,
            'gorensteinQ': self.gorenstein_q,
            'gorenstein': self.gorenstein,
            'eta': self.eta,
            'mu': self.mu,
            'kunz': self.kunz,
            'almost_gorenstein': self.almost_gorenstein,
            'nearly_gorenstein': self.nearly_gorenstein,
            'nearly_normal': self.nearly_normal,
            'g_prime': self.g_prime,
        }


def classify(curve: MonomialCurve) -> Classification:
    """
    Local invariants at P and Q, Gorenstein/Kunz/nearly Gorenstein/nearly normal
    flags, and the genus g' of the canonical model.

    Below genus 2 every singular point is the cusp <2,3>, hence Gorenstein, and
    g' is taken to be g.
    """
    point_p = PointInvariants.of(curve.semigroup_p)
    point_q = PointInvariants.of(curve.semigroup_q)
    hyperelliptic = False
    if curve.genus >= 2:
        g_prime = canonical_curve(curve).genus
        hyperelliptic = is_arithmetic_progression(canonical_model(curve).exponents)
    else:
        g_prime = curve.genus

    result = Classification(
        genus=curve.genus,
        point_p=point_p,
        point_q=point_q,
        g_prime=g_prime,
        hyperelliptic=hyperelliptic,
    )
    if result.identity_applies and not result.identity_holds:
        logger.warning(
            f"g = g' + eta + mu fails for {curve.label()}: "
            f"{curve.genus} != {g_prime} + {result.eta} + {result.mu}"
        )
    return result
