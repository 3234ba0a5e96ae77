"""
Rational monomial curves (1 : t^a1 : ... : t^an) and their pencils

The curve has at most two singular points: P at the origin and Q at infinity.
Their value semigroups are generated by the exponents and by the differences
an - ai respectively.
"""

import math
from dataclasses import dataclass
from typing import Dict, Iterable, List, Tuple

from src.semigroups.semigroup import NumericalSemigroup, ShiftDirection, shift_degree
from src.utils.error_handler import InvalidCurveError, PreconditionError
from src.utils.logger import setup_logger

logger = setup_logger(name="monomial_curve")


@dataclass(frozen=True)
class MonomialCurve:
    """
    Rational monomial curve given by its nonzero exponents.

    The coordinate 1 (exponent 0) is implicit and never listed.
    """
    exponents: Tuple[int, ...]
    semigroup_p: NumericalSemigroup
    semigroup_q: NumericalSemigroup

    @property
    def genus(self) -> int:
        return self.semigroup_p.delta + self.semigroup_q.delta

    @property
    def delta_p(self) -> int:
        return self.semigroup_p.delta

    @property
    def delta_q(self) -> int:
        return self.semigroup_q.delta

    @property
    def p_singular(self) -> bool:
        return self.delta_p > 0

    @property
    def q_singular(self) -> bool:
        return self.delta_q > 0

    @property
    def degree(self) -> int:
        return self.exponents[-1]

    def label(self) -> str:
        """Comma separated exponents, the form the CLI accepts."""
        return ",".join(str(a) for a in self.exponents)

    @classmethod
    def new(cls, exponents: Iterable[int]) -> 'MonomialCurve':
        """
        Validate exponents and build both value semigroups.

        Raises:
            InvalidCurveError: empty, non-positive, non-increasing, or gcd != 1
        """
        exps = tuple(int(a) for a in exponents)
        if not exps:
            raise InvalidCurveError("exponent list is empty")
        if exps[0] <= 0:
            raise InvalidCurveError(f"exponents must be positive (0 is implicit): {list(exps)}")
        if any(b <= a for a, b in zip(exps, exps[1:])):
            raise InvalidCurveError(f"exponents must be strictly increasing: {list(exps)}")
        if math.gcd(*exps) != 1:
            raise InvalidCurveError(f"gcd of exponents {list(exps)} is not 1")

        top = exps[-1]
        at_infinity = [top - a for a in exps[:-1]] + [top]
        curve = cls(
            exponents=exps,
            semigroup_p=NumericalSemigroup.from_generators(exps),
            semigroup_q=NumericalSemigroup.from_generators(at_infinity),
        )
        logger.debug(
            f"Curve {curve.label()}: S_P={curve.semigroup_p.describe()} "
            f"S_Q={curve.semigroup_q.describe()} genus={curve.genus}"
        )
        return curve


def new_curve(exponents: Iterable[int]) -> MonomialCurve:
    return MonomialCurve.new(exponents)


def parse_exponents(text: str) -> List[int]:
    """
    Parse "3,6,9" into [3, 6, 9].

    Raises:
        InvalidCurveError: if any entry is not an integer
    """
    parts = [p.strip() for p in text.split(',') if p.strip()]
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise InvalidCurveError(f"malformed exponent list: {text!r}")


def pencil_degree(curve: MonomialCurve, r: int) -> int:
    """Degree of the pencil spanned by 1 and t^r: #(S_P + r \\ S_P) + #(S_Q - r \\ S_Q)."""
    if r < 1:
        raise PreconditionError(f"pencil exponent must be positive, got {r}")
    return (shift_degree(curve.semigroup_p, r, ShiftDirection.UP)
            + shift_degree(curve.semigroup_q, r, ShiftDirection.DOWN))


def pencil_search_range(curve: MonomialCurve) -> range:
    """r in [1, frobenius_P + frobenius_Q + 2]."""
    upper = curve.semigroup_p.frobenius + curve.semigroup_q.frobenius + 2
    return range(1, max(upper, 1) + 1)


def pencil_degrees(curve: MonomialCurve) -> Dict[int, int]:
    """Pencil degree for every r in the search range."""
    return {r: pencil_degree(curve, r) for r in pencil_search_range(curve)}


def gonality_via_pencils(curve: MonomialCurve) -> int:
    """Least pencil degree over the search range."""
    return min(pencil_degrees(curve).values())


def _require_smooth_infinity(curve: MonomialCurve) -> None:
    if curve.q_singular:
        raise PreconditionError(
            f"curve {curve.label()} is singular at infinity; "
            "section counts are only defined for divisors supported at a smooth Q"
        )


def sections_with_pole_at_infinity(curve: MonomialCurve, m: int) -> List[int]:
    """Exponents s of the sections of O_C(mQ): members of S_P not exceeding m."""
    _require_smooth_infinity(curve)
    if m < 0:
        raise PreconditionError(f"pole order must be nonnegative, got {m}")
    return [s for s in range(m + 1) if curve.semigroup_p.contains(s)]


def scroll_dim_via_pencil(curve: MonomialCurve, r: int) -> int:
    """h0(O_C(H)) - h0(O_C(H - rQ)) with H = an * Q."""
    _require_smooth_infinity(curve)
    if r < 1:
        raise PreconditionError(f"pencil exponent must be positive, got {r}")
    top = curve.degree
    reduced = top - r
    h0_reduced = len(sections_with_pole_at_infinity(curve, reduced)) if reduced >= 0 else 0
    return len(sections_with_pole_at_infinity(curve, top)) - h0_reduced
