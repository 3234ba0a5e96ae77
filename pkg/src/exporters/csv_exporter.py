"""
CSV exporter for curve reports using Pandas
"""

from pathlib import Path
from typing import List

import pandas as pd

from src.catalog.catalog import CurveReport
from src.utils.logger import setup_logger

# Column order of the exported file. Sets are written as space separated
# integers, scroll types as S_{m1,...,md}.
COLUMNS = [
    'exponents',
    'genus',
    'delta_p',
    'delta_q',
    'gorenstein',
    'kunz',
    'nearly_gorenstein',
    'nearly_normal',
    'eta',
    'mu',
    'g_prime',
    'gonality',
    'ell',
    'scroll_type',
    'smooth',
    'canonical_exponents',
    'minimizers',
    'label',
]


def _join(values) -> str:
    return " ".join(str(v) for v in values)


class CSVExporter:
    """
    Flattens curve reports into a DataFrame with a fixed column order.
    """

    def __init__(self):
        """Initialize the CSV exporter."""
        self.logger = setup_logger(name="csv_exporter")

    def to_row(self, report: CurveReport) -> dict:
        c = report.classification
        return {
            'exponents': _join(report.exponents),
            'genus': report.genus,
            'delta_p': report.semigroup_p['delta'],
            'delta_q': report.semigroup_q['delta'],
            'gorenstein': c['gorenstein'],
            'kunz': c['kunz'],
            'nearly_gorenstein': c['nearly_gorenstein'],
            'nearly_normal': c['nearly_normal'],
            'eta': c['eta'],
            'mu': c['mu'],
            'g_prime': report.g_prime,
            'gonality': report.gonality,
            'ell': report.ell if report.ell is not None else '',
            'scroll_type': ("S_{" + ",".join(str(m) for m in report.scroll_type) + "}") if report.fit else '',
            'smooth': report.smooth_fit,
            'canonical_exponents': _join(report.canonical_exponents),
            'minimizers': _join(report.minimizers),
            'label': c.get('label', ''),
        }

    def to_dataframe(self, reports: List[CurveReport]) -> pd.DataFrame:
        return pd.DataFrame([self.to_row(r) for r in reports], columns=COLUMNS)

    def export_reports(self, reports: List[CurveReport], output_path: Path) -> bool:
        """
        Write reports to CSV with a header row.

        Returns:
            True if export successful, False otherwise
        """
        try:
            self.logger.info(f"Exporting {len(reports)} reports to CSV: {output_path}")
            output_path.parent.mkdir(parents=True, exist_ok=True)
            self.to_dataframe(reports).to_csv(output_path, index=False)
            return True
        except OSError as e:
            self.logger.error(f"Error exporting to CSV: {e}")
            return False

    def read_csv(self, csv_path: Path) -> pd.DataFrame:
        """
        Read an exported catalog back.

        Raises:
            FileNotFoundError: If CSV file doesn't exist
            ValueError: If the columns differ from the export layout
        """
        if not csv_path.exists():
            raise FileNotFoundError(f"CSV file not found: {csv_path}")
        df = pd.read_csv(csv_path, dtype={'exponents': str, 'canonical_exponents': str,
                                          'minimizers': str, 'label': str},
                         keep_default_na=False)
        if list(df.columns) != COLUMNS:
            raise ValueError(f"Unexpected CSV columns: {list(df.columns)}")
        self.logger.info(f"Loaded {len(df)} reports from {csv_path}")
        return df
