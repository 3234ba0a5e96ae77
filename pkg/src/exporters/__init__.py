"""
Exporters package - JSON-lines and CSV export of curve reports
"""

from src.exporters.json_exporter import JSONLinesExporter, canonical_dumps
from src.exporters.csv_exporter import CSVExporter

__all__ = ['JSONLinesExporter', 'CSVExporter', 'canonical_dumps']
