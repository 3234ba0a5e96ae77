"""
JSON-lines exporter for curve reports
"""

import json
from pathlib import Path
from typing import Any, List, Optional

from src.catalog.catalog import CurveReport
from src.storage.database import DatabaseManager
from src.utils.logger import setup_logger


def canonical_dumps(payload: Any) -> str:
    """
    Serialize with a fixed layout so that loads followed by dumps is byte-identical.

    Key order is the insertion order of the producing to_dict.
    """
    return json.dumps(payload, ensure_ascii=False, separators=(',', ':'))


class JSONLinesExporter:
    """
    Exporter for curve reports, one JSON object per line.
    """

    def __init__(self, database_manager: Optional[DatabaseManager] = None):
        """
        Initialize JSON-lines exporter.

        Args:
            database_manager: DatabaseManager used by export_from_database (optional)
        """
        self.logger = setup_logger(name="json_exporter")
        self.database_manager = database_manager

    def to_line(self, report: CurveReport) -> str:
        return canonical_dumps(report.to_dict())

    def export_to_string(self, reports: List[CurveReport]) -> str:
        return "".join(self.to_line(r) + "\n" for r in reports)

    def export_reports(self, reports: List[CurveReport], output_path: Path) -> bool:
        """
        Write reports to a JSON-lines file.

        Args:
            reports: Reports to write
            output_path: Destination file

        Returns:
            True if export successful, False otherwise
        """
        try:
            self.logger.info(f"Exporting {len(reports)} reports to JSON lines: {output_path}")
            output_path.parent.mkdir(parents=True, exist_ok=True)
            with open(output_path, 'w', encoding='utf-8') as f:
                f.write(self.export_to_string(reports))
            self.logger.info(f"Successfully exported {len(reports)} reports to {output_path}")
            return True
        except OSError as e:
            self.logger.error(f"Error exporting to JSON lines: {e}")
            return False

    def read_reports(self, input_path: Path) -> List[CurveReport]:
        """
        Load reports written by export_reports.

        Raises:
            FileNotFoundError: If the file doesn't exist
        """
        if not input_path.exists():
            raise FileNotFoundError(f"JSON lines file not found: {input_path}")
        with open(input_path, 'r', encoding='utf-8') as f:
            return [CurveReport.from_dict(json.loads(line)) for line in f if line.strip()]

    def export_from_database(self, output_path: Path, min_genus: Optional[int] = None,
                             max_genus: Optional[int] = None) -> bool:
        """
        Export stored reports to a JSON-lines file.

        Returns:
            True if export successful, False otherwise
        """
        if not self.database_manager:
            self.database_manager = DatabaseManager()
            if not self.database_manager.connect():
                self.logger.error("Failed to connect to database")
                return False

        reports = self.database_manager.get_reports(min_genus=min_genus, max_genus=max_genus)
        if not reports:
            self.logger.warning("No reports found in database")
            return False
        return self.export_reports(reports, output_path)
