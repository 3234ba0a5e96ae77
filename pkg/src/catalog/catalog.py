"""
Batch curve reports over enumerated semigroups and sampled two-point curves
"""

import math
import os
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from src.catalog.enumeration import SemigroupEnumerator
from src.curves.canonical import canonical_degree_oracle, canonical_model, classify
from src.curves.monomial_curve import MonomialCurve, pencil_degrees
from src.scrolls.scrollcalc import gonality_upper_bound, md_upper_bound
from src.scrolls.scrollfit import all_minimizers, best_fit
from src.semigroups.semigroup import NumericalSemigroup
from src.utils.error_handler import (
    ErrorHandler,
    ErrorType,
    MonomialScrollsError,
    PreconditionError,
)
from src.utils.logger import setup_logger

DEFAULT_SEED = 20240607


@dataclass(frozen=True)
class CurveReport:
    """
    Everything computed for one curve. Field order is the serialization order.

    fit, ell and canonical_exponents are empty below genus 2 where the
    canonical model is not defined.
    """
    exponents: Tuple[int, ...]
    genus: int
    semigroup_p: Dict
    semigroup_q: Dict
    classification: Dict
    canonical_exponents: Tuple[int, ...]
    g_prime: int
    gonality: int
    minimizers: Tuple[int, ...]
    fit: Optional[Dict]
    ell: Optional[int]
    pencil_degrees: Tuple[Tuple[int, int], ...]

    @property
    def label(self) -> str:
        return ",".join(str(a) for a in self.exponents)

    @property
    def one_point(self) -> bool:
        return (self.semigroup_p["delta"] > 0) != (self.semigroup_q["delta"] > 0)

    @property
    def scroll_type(self) -> Tuple[int, ...]:
        return tuple(self.fit['scroll_type']) if self.fit else ()

    @property
    def smooth_fit(self) -> bool:
        return bool(self.fit) and self.fit['smooth']

    def to_dict(self) -> Dict:
        return {
            'exponents': list(self.exponents),
            'genus': self.genus,
            'semigroup_p': self.semigroup_p,
            'semigroup_q': self.semigroup_q,
            'classification': self.classification,
            'canonical_exponents': list(self.canonical_exponents),
            'g_prime': self.g_prime,
            'gonality': self.gonality,
            'minimizers': list(self.minimizers),
            'fit': self.fit,
            'ell': self.ell,
            'pencil_degrees': [list(pair) for pair in self.pencil_degrees],
        }

    @classmethod
    def from_dict(cls, data: Dict) -> 'CurveReport':
        return cls(
            exponents=tuple(data['exponents']),
            genus=data['genus'],
            semigroup_p=data['semigroup_p'],
            semigroup_q=data['semigroup_q'],
            classification=data['classification'],
            canonical_exponents=tuple(data['canonical_exponents']),
            g_prime=data['g_prime'],
            gonality=data['gonality'],
            minimizers=tuple(data['minimizers']),
            fit=data['fit'],
            ell=data['ell'],
            pencil_degrees=tuple(tuple(pair) for pair in data['pencil_degrees']),
        )


def build_report(curve: MonomialCurve) -> CurveReport:
    """Classification, canonical model, fits and pencil table for one curve."""
    classification = classify(curve)
    pencils = pencil_degrees(curve)

    canonical: Tuple[int, ...] = ()
    minimizers: Tuple[int, ...] = ()
    fit = None
    if curve.genus >= 2:
        canonical = canonical_model(curve).exponents
        minimizers = tuple(all_minimizers(canonical))
        fit = best_fit(canonical)

    return CurveReport(
        exponents=curve.exponents,
        genus=curve.genus,
        semigroup_p=curve.semigroup_p.summary(),
        semigroup_q=curve.semigroup_q.summary(),
        classification={**classification.to_dict(), 'label': classification.label()},
        canonical_exponents=canonical,
        g_prime=classification.g_prime,
        gonality=min(pencils.values()),
        minimizers=minimizers,
        fit=fit.to_dict() if fit else None,
        ell=fit.r if fit else None,
        pencil_degrees=tuple(sorted(pencils.items())),
    )


def report_violations(curve: MonomialCurve, report: CurveReport) -> List[str]:
    """Names of the identities the report breaks; empty when consistent."""
    violations = []
    c = report.classification
    # not claimed for hyperelliptic curves
    nonhyperelliptic = report.genus < 2 or report.gonality > 2
    if nonhyperelliptic and report.genus != report.g_prime + c['eta'] + c['mu']:
        violations.append('genus_identity')
    if report.genus >= 2:
        if len(report.canonical_exponents) != report.genus:
            violations.append('canonical_size')
        if len(report.fit['parts']) + 1 != report.gonality:
            violations.append('gonality')
        if canonical_degree_oracle(curve).total != 2 * report.genus - 2:
            violations.append('canonical_degree')
    return violations


def one_point_curve(semigroup: NumericalSemigroup) -> MonomialCurve:
    """
    Curve singular only at P with S_P = S.

    Exponents are the minimal generators, followed by beta + k and
    beta + k + 1 for the least k beyond the largest generator unless the two
    largest generators are already consecutive. A consecutive pair at the top
    puts 1 in S_Q.

    Raises:
        PreconditionError: S is N
    """
    if semigroup.delta == 0:
        raise PreconditionError("the semigroup N has no singular point to model")
    gens = list(semigroup.generators)
    if semigroup.embedding_dimension < 2 or gens[-1] - gens[-2] != 1:
        start = max(semigroup.conductor, gens[-1] + 1)
        gens += [start, start + 1]
    return MonomialCurve.new(gens)


FILTER_NAMES = ('non-gorenstein', 'gorenstein', 'kunz', 'nearly-gorenstein',
                'nearly-normal', 'almost-gorenstein', 'gonality=N')


def parse_filter(text: str) -> Callable[[CurveReport], bool]:
    """
    Turn a filter name into a predicate on reports.

    Raises:
        MonomialScrollsError: unknown filter (usage error)
    """
    name = text.strip().lower()
    flags = {
        'non-gorenstein': lambda r: not r.classification['gorenstein'],
        'gorenstein': lambda r: r.classification['gorenstein'],
        'kunz': lambda r: r.classification['kunz'],
        'nearly-gorenstein': lambda r: r.classification['nearly_gorenstein'],
        'nearly-normal': lambda r: r.classification['nearly_normal'],
        'almost-gorenstein': lambda r: r.classification['almost_gorenstein'],
    }
    if name in flags:
        return flags[name]
    if name.startswith('gonality='):
        try:
            target = int(name.split('=', 1)[1])
        except ValueError:
            raise MonomialScrollsError(f"malformed gonality filter: {text!r}", ErrorType.USAGE_ERROR)
        return lambda r: r.gonality == target
    raise MonomialScrollsError(
        f"unknown filter {text!r}; expected one of {', '.join(FILTER_NAMES)}",
        ErrorType.USAGE_ERROR,
    )


class CatalogBuilder:
    """
    Builds curve reports for enumerated semigroups.

    Reports are computed on a thread pool when max_workers > 1; order follows
    the enumeration, so output does not depend on the worker count. Curves
    whose computation fails are recorded in the error ledger and skipped.
    """

    def __init__(
        self,
        max_genus_cap: Optional[int] = None,
        max_workers: Optional[int] = None,
        errors_csv_path: Optional[Path] = None,
    ):
        """
        Args:
            max_genus_cap: Enumeration cap (default: CATALOG_MAX_GENUS env var or 12)
            max_workers: Thread count (default: CATALOG_WORKERS env var or 1)
            errors_csv_path: Error ledger path (default: ERRORS_CSV_PATH env var)
        """
        if max_workers is None:
            max_workers = int(os.getenv('CATALOG_WORKERS', '1'))
        self.max_workers = max(1, max_workers)
        self.enumerator = SemigroupEnumerator(max_genus=max_genus_cap, max_workers=self.max_workers)
        self.errors_csv_path = errors_csv_path
        self._error_handler: Optional[ErrorHandler] = None
        self.logger = setup_logger(name="catalog_builder")

    @property
    def error_handler(self) -> ErrorHandler:
        if self._error_handler is None:
            self._error_handler = ErrorHandler(errors_csv_path=self.errors_csv_path)
        return self._error_handler

    def _safe_report(self, curve: MonomialCurve) -> Optional[CurveReport]:
        try:
            report = build_report(curve)
        except MonomialScrollsError as e:
            if e.error_type is ErrorType.VALIDATION_ERROR:
                self.error_handler.record_validation_error(curve.label(), str(e), type(e).__name__)
            else:
                self.error_handler.record_exception(curve.label(), e, {'operation': 'build_report'})
            return None
        except Exception as e:
            self.error_handler.record_error(
                curve.label(), ErrorType.UNKNOWN_ERROR, f"{type(e).__name__}: {e}",
                {'operation': 'build_report'},
            )
            return None
        violations = report_violations(curve, report)
        if violations:
            self.error_handler.record_precondition_error(
                curve.label(),
                f"identities failed: {', '.join(violations)} (genus {report.genus})",
                operation='report_violations',
            )
        return report

    def build_reports(self, curves: Sequence[MonomialCurve]) -> List[CurveReport]:
        if self.max_workers == 1:
            reports = [self._safe_report(c) for c in curves]
        else:
            with ThreadPoolExecutor(max_workers=self.max_workers) as executor:
                reports = list(executor.map(self._safe_report, curves))
        return [r for r in reports if r is not None]

    def build_catalog(
        self,
        max_genus: int,
        filters: Iterable[str] = (),
        min_genus: int = 1,
    ) -> List[CurveReport]:
        """
        One-point curve reports for every semigroup with min_genus <= genus <= max_genus.

        Raises:
            GenusCapError: max_genus above the cap
            MonomialScrollsError: unknown filter
        """
        predicates = [parse_filter(f) for f in filters]
        semigroups = self.enumerator.enumerate_range(max(min_genus, 1), max_genus)
        curves = [one_point_curve(s) for s in semigroups]
        self.logger.info(f"Building reports for {len(curves)} curves (genus {min_genus}..{max_genus})")
        reports = self.build_reports(curves)
        selected = [r for r in reports if all(p(r) for p in predicates)]
        self.logger.info(f"Catalog built: {len(selected)} of {len(reports)} reports selected")
        return selected


def build_catalog(max_genus: int, filters: Iterable[str] = (), min_genus: int = 1,
                  max_workers: Optional[int] = None) -> List[CurveReport]:
    return CatalogBuilder(max_workers=max_workers).build_catalog(max_genus, filters, min_genus)


def sample_two_point_curves(count: int, seed: Optional[int] = None,
                            max_exponent: int = 16, max_genus: int = 12) -> List[MonomialCurve]:
    """
    Distinct curves singular at both P and Q, drawn with a seeded generator.

    Exponent lists have two to five entries below max_exponent; genus is kept
    at most max_genus. Deterministic for a given seed.
    """
    if max_exponent < 3:
        raise PreconditionError(f"two-point curves need exponents up to at least 3, got {max_exponent}")
    if seed is None:
        seed = int(os.getenv('CATALOG_SEED', str(DEFAULT_SEED)))
    rng = random.Random(seed)
    largest_size = min(5, max_exponent - 1)
    seen = set()
    curves: List[MonomialCurve] = []
    attempts = 0
    while len(curves) < count:
        attempts += 1
        if attempts > 200 * count + 1000:
            raise PreconditionError(
                f"could only sample {len(curves)} of {count} two-point curves "
                f"with exponents below {max_exponent} and genus <= {max_genus}"
            )
        size = rng.randint(2, largest_size)
        exps = tuple(sorted(rng.sample(range(2, max_exponent + 1), size)))
        if exps in seen or math.gcd(*exps) != 1:
            continue
        if exps[-1] - exps[-2] == 1:
            continue
        seen.add(exps)
        curve = MonomialCurve.new(exps)
        if curve.p_singular and curve.q_singular and curve.genus <= max_genus:
            curves.append(curve)
    return curves


@dataclass(frozen=True)
class NearlyGorensteinCensus:
    """Fitted ell of nearly Gorenstein tetragonal one-point reports."""
    total: int
    by_ell: Dict[int, int] = field(default_factory=dict)
    smooth_by_ell: Dict[int, int] = field(default_factory=dict)

    def to_dict(self) -> Dict:
        return {
            'total': self.total,
            'by_ell': {str(k): v for k, v in sorted(self.by_ell.items())},
            'smooth_by_ell': {str(k): v for k, v in sorted(self.smooth_by_ell.items())},
        }


def nearly_gorenstein_census(reports: Iterable[CurveReport]) -> NearlyGorensteinCensus:
    selected = [
        r for r in reports
        if r.one_point and r.gonality == 4 and r.classification['nearly_gorenstein'] and r.fit
    ]
    by_ell: Dict[int, int] = {}
    smooth_by_ell: Dict[int, int] = {}
    for report in selected:
        by_ell[report.ell] = by_ell.get(report.ell, 0) + 1
        if report.smooth_fit:
            smooth_by_ell[report.ell] = smooth_by_ell.get(report.ell, 0) + 1
    return NearlyGorensteinCensus(total=len(selected), by_ell=by_ell, smooth_by_ell=smooth_by_ell)


@dataclass(frozen=True)
class BoundsCheck:
    """Gonality and m_d upper bounds evaluated on one report."""
    exponents: Tuple[int, ...]
    gonality: int
    gonality_upper: int
    md: int
    md_upper: Fraction

    @property
    def passed(self) -> bool:
        return self.gonality <= self.gonality_upper and self.md <= self.md_upper


def bounds_spot_checks(reports: Iterable[CurveReport], gonality: int = 4) -> List[BoundsCheck]:
    """
    Check gon <= ell + g - g' and m_d <= (2g - 2 - eta)/ell on reports of the
    given gonality whose fit is smooth and whose genus is at least d + 3.
    """
    checks = []
    for report in reports:
        if report.gonality != gonality or not report.smooth_fit:
            continue
        d = len(report.scroll_type)
        if report.genus < d + 3:
            continue
        eta = report.classification['eta']
        checks.append(BoundsCheck(
            exponents=report.exponents,
            gonality=report.gonality,
            gonality_upper=gonality_upper_bound(report.ell, report.genus, report.g_prime),
            md=report.scroll_type[-1],
            md_upper=md_upper_bound(report.genus, eta, report.ell),
        ))
    return checks
