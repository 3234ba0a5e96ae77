"""
Intersection arithmetic on rational normal scrolls S_{m1..md}

The Chow ring is generated by the hyperplane class H and the fiber class F
with F^2 = 0, H^d = e and H^(d-1) F = 1. A class of codimension c is kept in
the normal form h H^c + hf H^(c-1) F. Everything is exact except the real
root inside the lower bound for m_1.
"""

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from src.utils.error_handler import InvalidScrollError, PreconditionError
from src.utils.logger import setup_logger

logger = setup_logger(name="scrollcalc")

NU_TOLERANCE = 1e-9


@dataclass(frozen=True)
class Scroll:
    """
    Rational normal scroll of type m1 <= ... <= md.

    Attributes:
        m: sorted nonnegative integers
    """
    m: Tuple[int, ...]

    @classmethod
    def of(cls, m: Iterable[int]) -> 'Scroll':
        """
        Raises:
            InvalidScrollError: empty type or a negative entry
        """
        values = tuple(sorted(int(x) for x in m))
        if not values:
            raise InvalidScrollError("scroll type is empty")
        if values[0] < 0:
            raise InvalidScrollError(f"scroll type entries must be nonnegative: {list(values)}")
        return cls(m=values)

    @classmethod
    def parse(cls, text: str) -> 'Scroll':
        """Parse "1,3" into S_{1,3}."""
        try:
            return cls.of(int(p) for p in text.split(',') if p.strip())
        except ValueError as e:
            if isinstance(e, InvalidScrollError):
                raise
            raise InvalidScrollError(f"malformed scroll type: {text!r}")

    @property
    def d(self) -> int:
        return len(self.m)

    @property
    def e(self) -> int:
        return sum(self.m)

    @property
    def N(self) -> int:
        return self.e + self.d - 1

    @property
    def ambient_dimension(self) -> int:
        return self.N

    @property
    def degree(self) -> int:
        return self.e

    @property
    def smooth(self) -> bool:
        return self.m[0] >= 1

    def label(self) -> str:
        return "S_{" + ",".join(str(x) for x in self.m) + "}"


@dataclass(frozen=True)
class ChowClass:
    """The class h H^codim + hf H^(codim-1) F."""
    codim: int
    h: int
    hf: int

    def __mul__(self, other: 'ChowClass') -> 'ChowClass':
        # F^2 = 0 kills the hf * hf term
        return ChowClass(
            codim=self.codim + other.codim,
            h=self.h * other.h,
            hf=self.h * other.hf + self.hf * other.h,
        )

    def __add__(self, other: 'ChowClass') -> 'ChowClass':
        if self.codim != other.codim:
            raise PreconditionError(
                f"cannot add classes of codimension {self.codim} and {other.codim}"
            )
        return ChowClass(codim=self.codim, h=self.h + other.h, hf=self.hf + other.hf)


ONE = ChowClass(codim=0, h=1, hf=0)
H = ChowClass(codim=1, h=1, hf=0)
F = ChowClass(codim=1, h=0, hf=1)


@dataclass(frozen=True)
class VanishingClass:
    """Product whose codimension exceeds the dimension of the scroll."""
    codim: int


@dataclass(frozen=True)
class DivisorClass:
    """a H + b F."""
    a: int
    b: int

    def __add__(self, other: 'DivisorClass') -> 'DivisorClass':
        return DivisorClass(self.a + other.a, self.b + other.b)

    def __sub__(self, other: 'DivisorClass') -> 'DivisorClass':
        return DivisorClass(self.a - other.a, self.b - other.b)

    def __neg__(self) -> 'DivisorClass':
        return DivisorClass(-self.a, -self.b)

    def __mul__(self, k: int) -> 'DivisorClass':
        return DivisorClass(k * self.a, k * self.b)

    __rmul__ = __mul__

    def to_chow(self) -> ChowClass:
        return ChowClass(codim=1, h=self.a, hf=self.b)

    @classmethod
    def parse_list(cls, text: str) -> List['DivisorClass']:
        """Parse "a1,b1;a2,b2" into divisor classes."""
        classes = []
        for chunk in (c for c in text.split(';') if c.strip()):
            pieces = [p.strip() for p in chunk.split(',')]
            try:
                a, b = (int(p) for p in pieces)
            except ValueError:
                raise InvalidScrollError(f"malformed divisor class {chunk!r}; expected a,b")
            classes.append(cls(a, b))
        return classes


def _as_chow(item: Union[ChowClass, DivisorClass]) -> ChowClass:
    return item.to_chow() if isinstance(item, DivisorClass) else item


def chow_product(scroll: Scroll,
                 classes: Sequence[Union[ChowClass, DivisorClass]]) -> Union[ChowClass, int, VanishingClass]:
    """
    Product of classes in the Chow ring of the scroll.

    Returns a ChowClass below top codimension, the integer degree at
    codimension d, and a VanishingClass above it.
    """
    product = reduce(ChowClass.__mul__, (_as_chow(c) for c in classes), ONE)
    if product.codim > scroll.d:
        return VanishingClass(codim=product.codim)
    if product.codim == scroll.d:
        return product.h * scroll.e + product.hf
    return product


def canonical_class(scroll: Scroll) -> DivisorClass:
    """K_S = -d H + (e - 2) F."""
    return DivisorClass(-scroll.d, scroll.e - 2)


def first_chern_class(scroll: Scroll) -> DivisorClass:
    """c_1(T_S) = d H + (2 - e) F."""
    return -canonical_class(scroll)


def _genus_from(two_p_minus_two: int) -> Fraction:
    return Fraction(two_p_minus_two + 2, 2)


@dataclass(frozen=True)
class CompleteIntersection:
    """
    Invariants of the curve cut out by d - 1 divisors a_i H + b_i F.

    genus_closed comes from the closed formula in a and b; genus_koszul from
    the Chow product D_1 ... D_(d-1) (D_1 + ... + D_(d-1) - c_1).
    """
    ell: int
    degree: int
    genus_closed: Fraction
    genus_koszul: Fraction
    effective: bool

    @property
    def consistent(self) -> bool:
        return self.genus_closed == self.genus_koszul

    def to_dict(self) -> dict:
        return {
            'ell': self.ell,
            'degree': self.degree,
            'genus_closed': _plain(self.genus_closed),
            'genus_koszul': _plain(self.genus_koszul),
            'effective': self.effective,
        }


def _plain(value: Fraction) -> Union[int, str]:
    return value.numerator if value.denominator == 1 else str(value)


def ci_invariants(scroll: Scroll, classes: Sequence[DivisorClass]) -> CompleteIntersection:
    """
    Fiber degree, degree and arithmetic genus of a complete intersection curve.

    Raises:
        PreconditionError: number of classes differs from d - 1
    """
    if len(classes) != scroll.d - 1:
        raise PreconditionError(
            f"{scroll.label()} needs exactly {scroll.d - 1} divisor classes, got {len(classes)}"
        )
    a_values = [c.a for c in classes]
    ell = math.prod(a_values)
    degree = scroll.e * ell + sum(
        c.b * math.prod(a_values[:i] + a_values[i + 1:]) for i, c in enumerate(classes)
    )
    a = sum(a_values)
    b = sum(c.b for c in classes)
    closed = degree * (a - scroll.d) + ell * (b + scroll.e - 2)

    total = reduce(DivisorClass.__add__, classes, DivisorClass(0, 0))
    koszul = chow_product(scroll, list(classes) + [total - first_chern_class(scroll)])

    effective = all(c.a >= 0 and h0_enum(scroll, c.a, c.b) > 0 for c in classes)
    if not effective:
        logger.debug(f"Non-effective classes {classes} on {scroll.label()}")
    return CompleteIntersection(
        ell=ell,
        degree=degree,
        genus_closed=_genus_from(closed),
        genus_koszul=_genus_from(koszul),
        effective=effective,
    )


def compositions(total: int, parts: int) -> Iterator[Tuple[int, ...]]:
    """Tuples of `parts` nonnegative integers summing to `total`."""
    for bars in itertools.combinations(range(total + parts - 1), parts - 1):
        cuts = (-1,) + bars + (total + parts - 1,)
        yield tuple(cuts[i + 1] - cuts[i] - 1 for i in range(parts))


@dataclass(frozen=True)
class ClosedFormCount:
    """Closed-form h^0 together with whether (a, b) lies in its regime."""
    value: int
    in_regime: bool


def h0_closed(scroll: Scroll, a: int, b: int) -> ClosedFormCount:
    """
    (b + 1) C(a+d-1, d-1) + e C(a+d-1, d) for a >= 0 and b >= -a m_1; 0 outside.
    """
    if a < 0 or b < -a * scroll.m[0]:
        return ClosedFormCount(value=0, in_regime=False)
    d = scroll.d
    value = (b + 1) * math.comb(a + d - 1, d - 1) + scroll.e * math.comb(a + d - 1, d)
    return ClosedFormCount(value=value, in_regime=True)


def h0_enum(scroll: Scroll, a: int, b: int) -> int:
    """Sum over compositions alpha of a of max(0, b + alpha . m + 1)."""
    if a < 0:
        return 0
    return sum(
        max(0, b + sum(x * m for x, m in zip(alpha, scroll.m)) + 1)
        for alpha in compositions(a, scroll.d)
    )


def h1_count(scroll: Scroll, a: int, b: int) -> int:
    """Sum over compositions alpha of a of max(0, -(b + alpha . m) - 1)."""
    if a < 0:
        raise PreconditionError(f"first cohomology count needs a >= 0, got {a}")
    return sum(
        max(0, -(b + sum(x * m for x, m in zip(alpha, scroll.m))) - 1)
        for alpha in compositions(a, scroll.d)
    )


def hi_vanishes(scroll: Scroll, i: int, a: int, b: int) -> bool:
    """Higher cohomology vanishes for i >= 1, a >= 0, b >= -(a m_1 + 1)."""
    return i >= 1 and a >= 0 and b >= -(a * scroll.m[0] + 1)


@dataclass(frozen=True)
class ScrollBounds:
    """
    Consistency relations for a canonical curve cut out on a scroll.

    ell_from_formula is None when d + 2 - b - g = 0, the branch b = d + 2 - g.
    """
    g: int
    eta: int
    mu: int
    d: int
    ell: int
    pacan_residual: int
    ell_from_formula: Optional[Fraction]
    gonality_upper: int
    m1_lower: Union[Fraction, float]
    md_upper: Fraction

    @property
    def special_b_branch(self) -> bool:
        return self.ell_from_formula is None

    @property
    def consistent(self) -> bool:
        return self.pacan_residual == 0

    def tau_range(self) -> range:
        if self.ell == self.d:
            return range(-1, self.d - 2)
        if self.ell == self.d + 1:
            return range(0, self.d - 1)
        return range(0)

    def b_candidate(self, tau: int) -> Fraction:
        """
        b = -(g - (d+2)) - (eta + 2 mu + tau (2g - 2 - eta)) / ell for ell in {d, d+1}.

        Raises:
            PreconditionError: ell outside {d, d+1} or tau outside its range
        """
        if tau not in self.tau_range():
            raise PreconditionError(
                f"tau={tau} not admissible for ell={self.ell}, d={self.d}"
            )
        numerator = self.eta + 2 * self.mu + tau * (2 * self.g - 2 - self.eta)
        return -(self.g - (self.d + 2)) - Fraction(numerator, self.ell)

    def b_candidates(self) -> Dict[int, Fraction]:
        return {tau: self.b_candidate(tau) for tau in self.tau_range()}

    def admits_m1(self, m1: int) -> bool:
        if isinstance(self.m1_lower, Fraction):
            return m1 >= self.m1_lower
        return m1 >= self.m1_lower - NU_TOLERANCE

    def admits_md(self, md: int) -> bool:
        return md <= self.md_upper

    def to_dict(self) -> dict:
        return {
            'pacan_residual': self.pacan_residual,
            'ell_from_formula': None if self.ell_from_formula is None else _plain(self.ell_from_formula),
            'gonality_upper': self.gonality_upper,
            'm1_lower': _plain(self.m1_lower) if isinstance(self.m1_lower, Fraction) else self.m1_lower,
            'md_upper': _plain(self.md_upper),
            'b_candidates': {str(t): _plain(v) for t, v in self.b_candidates().items()},
        }


def gonality_upper_bound(ell: int, g: int, g_prime: int) -> int:
    """gon(C) <= ell + g - g'."""
    return ell + g - g_prime


def md_upper_bound(g: int, eta: int, ell: int) -> Fraction:
    """m_d <= (2g - 2 - eta) / ell."""
    return Fraction(2 * g - 2 - eta, ell)


def m1_lower_bound(g: int, d: int, ell: int, a: int) -> Union[Fraction, float]:
    """
    Lower bound for m_1; exact (g-d-1)/(d+1) when a = d + 1, otherwise it
    involves the real root nu = (d-1) ell^(1/(d-1)) - d - 1.
    """
    if a == d + 1:
        return Fraction(g - d - 1, d + 1)
    nu = (d - 1) * ell ** (1.0 / (d - 1)) - d - 1
    return (g - d - 1) / (ell + d - 2) + (nu * (g - 1) + 3 - ell) / (ell * (d + ell - 2))


def scroll_bounds(g: int, eta: int, mu: int, d: int, ell: int, a: int, b: int,
                  g_prime: int) -> ScrollBounds:
    """
    Evaluate the residual of
        (a - d - 1)(2g - 2 - eta) + eta + 2 mu - ell (d + 2 - b - g) = 0
    together with the bounds derived from it.

    Raises:
        PreconditionError: g < 2, d < 2 or ell < 1
    """
    if g < 2 or d < 2 or ell < 1:
        raise PreconditionError(f"bounds need g >= 2, d >= 2, ell >= 1; got g={g}, d={d}, ell={ell}")
    canonical_degree = 2 * g - 2 - eta
    numerator = (a - d - 1) * canonical_degree + eta + 2 * mu
    denominator = d + 2 - b - g
    return ScrollBounds(
        g=g,
        eta=eta,
        mu=mu,
        d=d,
        ell=ell,
        pacan_residual=numerator - ell * denominator,
        ell_from_formula=Fraction(numerator, denominator) if denominator else None,
        gonality_upper=gonality_upper_bound(ell, g, g_prime),
        m1_lower=m1_lower_bound(g, d, ell, a),
        md_upper=md_upper_bound(g, eta, ell),
    )


def d2_genus_poly(g: int, d_prime: int, ell: int) -> int:
    """2g' = -(g-2) ell^2 + (2d' + g - 4) ell - 2(d' - 1) on a surface scroll."""
    return -(g - 2) * ell ** 2 + (2 * d_prime + g - 4) * ell - 2 * (d_prime - 1)


def ell_range_ok(d: int, ell: int) -> bool:
    """d <= ell <= d + 1."""
    return d <= ell <= d + 1


@dataclass(frozen=True)
class PencilScrollStats:
    scroll_dim: int
    sing_dim_strict_bound: Fraction


def pencil_scroll_stats(deg: int, h0: int, deg_intersection: int, d: int) -> PencilScrollStats:
    """Dimension of the scroll swept by a pencil and the strict bound on its singular locus."""
    return PencilScrollStats(
        scroll_dim=deg - (h0 - 1),
        sing_dim_strict_bound=d - 2 * h0 + 1 + Fraction(deg_intersection, 2),
    )


@dataclass(frozen=True)
class CanonicalOnScroll:
    """Scroll degree, degree and arithmetic genus of a canonical model on a d-fold scroll."""
    e: int
    degree: int
    arithmetic_genus: int


def canonical_curve_on_scroll_invariants(g: int, eta: int, mu: int, d: int) -> CanonicalOnScroll:
    return CanonicalOnScroll(e=g - d, degree=2 * g - 2 - eta, arithmetic_genus=g - eta - mu)
