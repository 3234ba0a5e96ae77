"""
Catalog package: semigroup enumeration, reference table rows and batch curve reports
"""

from src.catalog.enumeration import (
    SemigroupEnumerator,
    brute_force_count,
    brute_force_gap_sets,
    enumerate_semigroups,
)
from src.catalog.fixtures import (
    EXCLUDED_ROWS,
    TABLE_FIXTURES,
    FixtureVerdict,
    TableFixture,
    check_fixture,
    reproduce_table_fixtures,
)
from src.catalog.catalog import (
    BoundsCheck,
    CatalogBuilder,
    CurveReport,
    NearlyGorensteinCensus,
    bounds_spot_checks,
    build_catalog,
    build_report,
    nearly_gorenstein_census,
    one_point_curve,
    parse_filter,
    report_violations,
    sample_two_point_curves,
)

__all__ = [
    'SemigroupEnumerator',
    'brute_force_count',
    'brute_force_gap_sets',
    'enumerate_semigroups',
    'EXCLUDED_ROWS',
    'TABLE_FIXTURES',
    'FixtureVerdict',
    'TableFixture',
    'check_fixture',
    'reproduce_table_fixtures',
    'BoundsCheck',
    'CatalogBuilder',
    'CurveReport',
    'NearlyGorensteinCensus',
    'bounds_spot_checks',
    'build_catalog',
    'build_report',
    'nearly_gorenstein_census',
    'one_point_curve',
    'parse_filter',
    'report_violations',
    'sample_two_point_curves',
]
