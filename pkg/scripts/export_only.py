#!/usr/bin/env python3
"""
Simple script to export stored curve reports to JSON lines and CSV.
No computation required - just exports existing data.
"""

from pathlib import Path

from src.storage.database import DatabaseManager
from src.exporters.csv_exporter import CSVExporter
from src.exporters.json_exporter import JSONLinesExporter


def main():
    """Export stored reports to data/catalog.jsonl and data/catalog.csv."""
    db = DatabaseManager()

    if not db.connect():
        print("Failed to connect to database")
        return

    data_dir = Path(__file__).parent.parent / 'data'

    jsonl_path = data_dir / 'catalog.jsonl'
    if JSONLinesExporter(db).export_from_database(jsonl_path):
        print(f"JSON lines exported to: {jsonl_path}")
    else:
        print("Failed to export JSON lines")

    reports = db.get_reports()
    csv_path = data_dir / 'catalog.csv'
    if reports and CSVExporter().export_reports(reports, csv_path):
        print(f"CSV exported to: {csv_path}")
    else:
        print("Failed to export CSV")

    db.disconnect()


if __name__ == "__main__":
    main()
