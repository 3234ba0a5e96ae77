"""
Command-line front end for monomial curve and scroll computations

Verbs:
1. analyze / canonical / gonality: one curve given by its exponents
2. scrollfit: chain partition and determinantal block layout of an exponent set
3. scroll-h0 / scroll-genus-ci / scroll-chow: intersection arithmetic on a scroll
4. enumerate: one-point curve catalog over enumerated semigroups
5. tables: reference rows, exit status 0 iff all match
6. bounds: consistency relations for canonical curves on scrolls
"""

import argparse
import os
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple

from src.catalog.catalog import CatalogBuilder, CurveReport, build_report
from src.catalog.fixtures import reproduce_table_fixtures
from src.curves.canonical import canonical_model
from src.curves.monomial_curve import MonomialCurve, parse_exponents, pencil_degrees
from src.exporters.csv_exporter import CSVExporter
from src.exporters.json_exporter import JSONLinesExporter, canonical_dumps
from src.scrolls.scrollcalc import (
    DivisorClass,
    Scroll,
    VanishingClass,
    canonical_class,
    chow_product,
    ci_invariants,
    h0_closed,
    h0_enum,
    h1_count,
    hi_vanishes,
    scroll_bounds,
)
from src.scrolls.scrollfit import best_fit, fit_with_difference, scroll_matrix
from src.storage.database import DatabaseManager
from src.utils.error_handler import ErrorType, MonomialScrollsError
from src.utils.logger import set_log_level, setup_logger

# (payload, exit code); payload is one JSON object or a list of them
Result = Tuple[Any, int]


class UsageError(MonomialScrollsError):
    error_type = ErrorType.USAGE_ERROR


class CLIArgumentParser(argparse.ArgumentParser):
    """ArgumentParser that raises instead of exiting, so usage errors map to exit 1."""

    def error(self, message):
        raise UsageError(message)


def parse_exponent_set(text: str) -> List[int]:
    """Exponent set A for scrollfit; 0 is allowed here."""
    values = parse_exponents(text)
    if not values:
        raise UsageError("exponent set is empty")
    if any(v < 0 for v in values):
        raise UsageError(f"exponents must be nonnegative: {values}")
    return sorted(set(values))


class MonomialScrollsCLI:
    """
    Dispatches parsed commands to the library and shapes their output.
    """

    def __init__(self, threads: Optional[int] = None):
        self.logger = setup_logger(name="monomial_scrolls")
        self.threads = threads

    def analyze(self, args) -> Result:
        curve = MonomialCurve.new(parse_exponents(args.exponents))
        return build_report(curve).to_dict(), 0

    def canonical(self, args) -> Result:
        curve = MonomialCurve.new(parse_exponents(args.exponents))
        model = canonical_model(curve)
        return {
            'exponents': list(curve.exponents),
            'genus': curve.genus,
            'canonical_exponents': list(model.exponents),
            'from_p': list(model.from_p),
            'from_q': list(model.from_q),
        }, 0

    def gonality(self, args) -> Result:
        curve = MonomialCurve.new(parse_exponents(args.exponents))
        if curve.genus >= 2:
            fit = best_fit(canonical_model(curve).exponents)
            return {
                'exponents': list(curve.exponents),
                'gonality': len(fit.parts) + 1,
                'r': fit.r,
                'parts': [list(p) for p in fit.parts],
            }, 0
        pencils = pencil_degrees(curve)
        witness = min(pencils, key=lambda r: (pencils[r], r))
        return {
            'exponents': list(curve.exponents),
            'gonality': pencils[witness],
            'r': witness,
            'parts': None,
        }, 0

    def scrollfit(self, args) -> Result:
        exponents = parse_exponent_set(args.exponents)
        fit = fit_with_difference(exponents, args.r) if args.r is not None else best_fit(exponents)
        matrix = scroll_matrix(exponents, fit.r)
        return {**fit.to_dict(), 'blocks': matrix.to_dict()['blocks'], 'matrix': matrix.render()}, 0

    def scroll_h0(self, args) -> Result:
        scroll = Scroll.parse(args.type)
        closed = h0_closed(scroll, args.a, args.b)
        return {
            'scroll': scroll.label(),
            'a': args.a,
            'b': args.b,
            'h0_closed': closed.value,
            'in_regime': closed.in_regime,
            'h0_enum': h0_enum(scroll, args.a, args.b),
            'h1_count': h1_count(scroll, args.a, args.b) if args.a >= 0 else 0,
            'hi_vanishes': hi_vanishes(scroll, 1, args.a, args.b),
        }, 0

    def scroll_genus_ci(self, args) -> Result:
        scroll = Scroll.parse(args.type)
        result = ci_invariants(scroll, DivisorClass.parse_list(args.classes))
        return {'scroll': scroll.label(), **result.to_dict()}, 0

    def scroll_chow(self, args) -> Result:
        scroll = Scroll.parse(args.type)
        product = chow_product(scroll, DivisorClass.parse_list(args.classes or ''))
        if isinstance(product, VanishingClass):
            value: Dict[str, Any] = {'codim': product.codim, 'vanishes': True}
        elif isinstance(product, int):
            value = {'codim': scroll.d, 'degree': product}
        else:
            value = {'codim': product.codim, 'h': product.h, 'hf': product.hf}
        k = canonical_class(scroll)
        return {
            'scroll': scroll.label(),
            'd': scroll.d,
            'e': scroll.e,
            'N': scroll.N,
            'smooth': scroll.smooth,
            'canonical_class': [k.a, k.b],
            'product': value,
        }, 0

    def enumerate(self, args) -> Result:
        if args.genus is not None:
            min_genus = max_genus = args.genus
        elif args.max_genus is not None:
            min_genus, max_genus = args.min_genus or 1, args.max_genus
        else:
            raise UsageError("enumerate needs --genus or --max-genus")

        builder = CatalogBuilder(max_workers=self.threads)
        reports = builder.build_catalog(max_genus, filters=args.filter or (), min_genus=min_genus)
        if args.output:
            self._write_reports(reports, args.output)
        if args.save:
            self._save_reports(reports, builder)
        return [r.to_dict() for r in reports], 0

    def _write_reports(self, reports: List[CurveReport], output: Path) -> None:
        if output.suffix == '.csv':
            ok = CSVExporter().export_reports(reports, output)
        else:
            ok = JSONLinesExporter().export_reports(reports, output)
        if not ok:
            raise MonomialScrollsError(f"could not write {output}", ErrorType.STORAGE_ERROR)

    def _save_reports(self, reports: List[CurveReport], builder: CatalogBuilder) -> None:
        db = DatabaseManager()
        try:
            if not db.connect() or not db.create_tables():
                message = "database unavailable"
            else:
                saved = db.save_reports(reports)
                message = None if saved == len(reports) else f"saved {saved} of {len(reports)} reports"
        finally:
            db.disconnect()
        if message:
            builder.error_handler.record_storage_error("catalog", message, operation="save_reports")
            raise MonomialScrollsError(message, ErrorType.STORAGE_ERROR)

    def tables(self, args) -> Result:
        verdicts = reproduce_table_fixtures()
        status = 0 if all(v.matched for v in verdicts) else ErrorType.FIXTURE_MISMATCH.exit_code
        return [v.to_dict() for v in verdicts], status

    def bounds(self, args) -> Result:
        result = scroll_bounds(args.g, args.eta, args.mu, args.d, args.ell, args.a, args.b, args.g_prime)
        return result.to_dict(), 0


def _render_text(payload: Any) -> str:
    if isinstance(payload, list):
        return "\n".join(_render_text(item) for item in payload)
    if isinstance(payload, dict):
        lines = []
        for key, value in payload.items():
            if isinstance(value, str) and "\n" in value:
                lines.append(f"{key}:\n{value}")
            elif isinstance(value, (dict, list)):
                lines.append(f"{key}: {canonical_dumps(value)}")
            else:
                lines.append(f"{key}: {value}")
        return "\n".join(lines) + ("\n" if len(payload) > 1 else "")
    return str(payload)


def render(payload: Any, fmt: str) -> str:
    """JSON: one canonical object per line. Text: key: value lines."""
    if fmt == 'json':
        items = payload if isinstance(payload, list) else [payload]
        return "".join(canonical_dumps(item) + "\n" for item in items)
    text = _render_text(payload)
    return text if text.endswith("\n") else text + "\n"


def build_parser() -> CLIArgumentParser:
    common = CLIArgumentParser(add_help=False)
    common.add_argument('--format', choices=['text', 'json'], default='text',
                        help='Output format (default: text)')
    common.add_argument('--threads', type=int,
                        help='Worker threads for catalog work (default: CATALOG_WORKERS env var or 1)')
    common.add_argument('--log-level', help='Logging level (default: LOG_LEVEL env var or WARNING)')

    parser = CLIArgumentParser(
        description="Monomial curves, their canonical models and the scrolls they lie on"
    )
    verbs = parser.add_subparsers(dest='verb', parser_class=CLIArgumentParser)
    verbs.required = True

    for name, help_text in (('analyze', 'Full report for a curve'),
                            ('canonical', 'Canonical exponent set A'),
                            ('gonality', 'Gonality with witness r and partition')):
        sub = verbs.add_parser(name, parents=[common], help=help_text)
        sub.add_argument('exponents', help='Comma separated exponents, 0 implicit (e.g. 3,6,9,10)')

    sub = verbs.add_parser('scrollfit', parents=[common], help='Chain partition and block matrix')
    sub.add_argument('exponents', help='Exponent set A, e.g. 0,3,4,6,7,9,10')
    sub.add_argument('--r', type=int, help='Common difference (default: best fit)')

    sub = verbs.add_parser('scroll-h0', parents=[common], help='h0 of O(aH + bF)')
    sub.add_argument('--type', required=True, help='Scroll type m1,...,md')
    sub.add_argument('--a', type=int, required=True)
    sub.add_argument('--b', type=int, required=True)

    sub = verbs.add_parser('scroll-genus-ci', parents=[common], help='Complete intersection invariants')
    sub.add_argument('--type', required=True, help='Scroll type m1,...,md')
    sub.add_argument('--classes', required=True, help='Divisor classes "a1,b1;a2,b2;..."')

    sub = verbs.add_parser('scroll-chow', parents=[common], help='Chow product of divisor classes')
    sub.add_argument('--type', required=True, help='Scroll type m1,...,md')
    sub.add_argument('--classes', default='', help='Divisor classes "a1,b1;a2,b2;..." (H is 1,0; F is 0,1)')

    sub = verbs.add_parser('enumerate', parents=[common], help='One-point curve catalog')
    sub.add_argument('--genus', type=int)
    sub.add_argument('--min-genus', type=int)
    sub.add_argument('--max-genus', type=int)
    sub.add_argument('--filter', action='append',
                     help='non-gorenstein, kunz, nearly-gorenstein, nearly-normal, gonality=N (repeatable)')
    sub.add_argument('--output', type=Path, help='Write reports to a .jsonl or .csv file')
    sub.add_argument('--save', action='store_true', help='Store reports in the database (DATABASE_URL)')

    verbs.add_parser('tables', parents=[common], help='Check the reference table rows')

    sub = verbs.add_parser('bounds', parents=[common], help='Bounds for a canonical curve on a scroll')
    for option in ('--g', '--eta', '--mu', '--d', '--ell', '--a', '--b', '--g-prime'):
        sub.add_argument(option, type=int, required=True)

    return parser


DISPATCH = {
    'analyze': MonomialScrollsCLI.analyze,
    'canonical': MonomialScrollsCLI.canonical,
    'gonality': MonomialScrollsCLI.gonality,
    'scrollfit': MonomialScrollsCLI.scrollfit,
    'scroll-h0': MonomialScrollsCLI.scroll_h0,
    'scroll-genus-ci': MonomialScrollsCLI.scroll_genus_ci,
    'scroll-chow': MonomialScrollsCLI.scroll_chow,
    'enumerate': MonomialScrollsCLI.enumerate,
    'tables': MonomialScrollsCLI.tables,
    'bounds': MonomialScrollsCLI.bounds,
}


def run(argv: Sequence[str], stdout=None, stderr=None) -> int:
    """
    Parse argv, dispatch, print the result.

    Returns:
        0 on success, 1 usage error, 2 computational failure, 3 fixture mismatch
    """
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(list(argv))
        set_log_level(args.log_level or os.getenv('LOG_LEVEL', 'WARNING'))
        cli = MonomialScrollsCLI(threads=args.threads)
        payload, status = DISPATCH[args.verb](cli, args)
    except MonomialScrollsError as e:
        stderr.write(f"error: {e.error_type.value}: {e}\n")
        return e.error_type.exit_code
    except Exception as e:
        setup_logger(name="monomial_scrolls").error(f"Unexpected error: {e}", exc_info=True)
        stderr.write(f"error: {ErrorType.UNKNOWN_ERROR.value}: {e}\n")
        return ErrorType.UNKNOWN_ERROR.exit_code

    stdout.write(render(payload, args.format))
    return status


def main():
    """Main entry point."""
    try:
        sys.exit(run(sys.argv[1:]))
    except KeyboardInterrupt:
        sys.exit(130)


if __name__ == "__main__":
    main()
