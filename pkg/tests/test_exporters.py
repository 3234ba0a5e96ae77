"""
Unit tests for exporters module
"""

import json
from unittest.mock import Mock, patch

import pytest

from src.catalog.catalog import build_report
from src.curves.monomial_curve import MonomialCurve
from src.exporters.csv_exporter import COLUMNS, CSVExporter
from src.exporters.json_exporter import JSONLinesExporter, canonical_dumps


@pytest.fixture
def sample_report():
    """Fixture to create the trigonal example report"""
    return build_report(MonomialCurve.new([3, 6, 9, 10, 12, 13, 14]))


@pytest.fixture
def sample_reports(sample_report):
    """Fixture to create a list of sample reports"""
    return [
        sample_report,
        build_report(MonomialCurve.new([4, 10, 11, 16, 17])),
        build_report(MonomialCurve.new([2, 3])),
    ]


@pytest.fixture
def mock_database_manager():
    """Fixture to create a mock database manager"""
    mock = Mock()
    mock.connect.return_value = True
    mock.get_reports.return_value = []
    return mock


class TestCanonicalDumps:
    """Test cases for the fixed JSON layout"""

    def test_compact_layout(self):
        assert canonical_dumps({'b': [1, 2], 'a': 'é'}) == '{"b":[1,2],"a":"é"}'

    def test_reserialization_is_byte_identical(self, sample_reports):
        for report in sample_reports:
            line = canonical_dumps(report.to_dict())
            assert canonical_dumps(json.loads(line)) == line


class TestJSONLinesExporter:
    """Test cases for JSONLinesExporter class"""

    def test_init(self):
        """Test JSONLinesExporter initialization"""
        exporter = JSONLinesExporter()
        assert exporter.database_manager is None

    def test_init_with_database_manager(self, mock_database_manager):
        """Test JSONLinesExporter initialization with database manager"""
        exporter = JSONLinesExporter(database_manager=mock_database_manager)
        assert exporter.database_manager == mock_database_manager

    def test_to_line(self, sample_report):
        line = JSONLinesExporter().to_line(sample_report)
        data = json.loads(line)
        assert '\n' not in line
        assert data['exponents'] == [3, 6, 9, 10, 12, 13, 14]
        assert data['fit']['scroll_type'] == [2, 3]
        assert data['ell'] == 3

    def test_export_to_string(self, sample_reports):
        text = JSONLinesExporter().export_to_string(sample_reports)
        lines = text.splitlines()
        assert len(lines) == 3
        assert text.endswith('\n')
        assert json.loads(lines[2])['fit'] is None

    def test_export_and_read(self, sample_reports, tmp_path):
        """Test exporting reports to a file and reading them back"""
        exporter = JSONLinesExporter()
        output_path = tmp_path / "out" / "catalog.jsonl"

        assert exporter.export_reports(sample_reports, output_path) is True
        assert output_path.exists()
        assert exporter.read_reports(output_path) == sample_reports

    def test_file_round_trip_is_byte_identical(self, sample_reports, tmp_path):
        exporter = JSONLinesExporter()
        first = tmp_path / "first.jsonl"
        second = tmp_path / "second.jsonl"

        exporter.export_reports(sample_reports, first)
        exporter.export_reports(exporter.read_reports(first), second)

        assert first.read_bytes() == second.read_bytes()

    def test_read_missing_file(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            JSONLinesExporter().read_reports(tmp_path / "missing.jsonl")

    def test_export_error(self, sample_reports, tmp_path):
        """Test export failure is reported, not raised"""
        blocker = tmp_path / "blocker"
        blocker.write_text("not a directory")
        assert JSONLinesExporter().export_reports(sample_reports, blocker / "catalog.jsonl") is False

    def test_export_from_database(self, mock_database_manager, sample_reports, tmp_path):
        mock_database_manager.get_reports.return_value = sample_reports
        exporter = JSONLinesExporter(database_manager=mock_database_manager)
        output_path = tmp_path / "catalog.jsonl"

        assert exporter.export_from_database(output_path, min_genus=2) is True
        mock_database_manager.get_reports.assert_called_once_with(min_genus=2, max_genus=None)
        assert len(output_path.read_text().splitlines()) == 3

    def test_export_from_empty_database(self, mock_database_manager, tmp_path):
        exporter = JSONLinesExporter(database_manager=mock_database_manager)
        assert exporter.export_from_database(tmp_path / "catalog.jsonl") is False

    @patch('src.exporters.json_exporter.DatabaseManager')
    def test_export_from_database_connects(self, mock_db_class, sample_reports, tmp_path):
        """A manager is created and connected when none was given"""
        mock_db = Mock()
        mock_db.connect.return_value = True
        mock_db.get_reports.return_value = sample_reports
        mock_db_class.return_value = mock_db

        exporter = JSONLinesExporter()
        assert exporter.export_from_database(tmp_path / "catalog.jsonl") is True
        mock_db.connect.assert_called_once()

    @patch('src.exporters.json_exporter.DatabaseManager')
    def test_export_from_database_connection_failure(self, mock_db_class, tmp_path):
        mock_db = Mock()
        mock_db.connect.return_value = False
        mock_db_class.return_value = mock_db

        assert JSONLinesExporter().export_from_database(tmp_path / "catalog.jsonl") is False


class TestCSVExporter:
    """Test cases for CSVExporter class"""

    def test_to_row(self, sample_report):
        row = CSVExporter().to_row(sample_report)
        assert list(row) == COLUMNS
        assert row['exponents'] == '3 6 9 10 12 13 14'
        assert row['canonical_exponents'] == '0 3 4 6 7 9 10'
        assert row['scroll_type'] == 'S_{2,3}'
        assert row['minimizers'] == '3'
        assert row['g_prime'] == 3
        assert row['label'] == ''

    def test_to_row_without_fit(self, sample_reports):
        row = CSVExporter().to_row(sample_reports[2])
        assert row['ell'] == ''
        assert row['scroll_type'] == ''
        assert row['smooth'] is False

    def test_to_dataframe(self, sample_reports):
        df = CSVExporter().to_dataframe(sample_reports)
        assert list(df.columns) == COLUMNS
        assert len(df) == 3
        assert list(df['label']) == ['', 'NG', '']

    def test_export_and_read(self, sample_reports, tmp_path):
        exporter = CSVExporter()
        csv_path = tmp_path / "catalog.csv"

        assert exporter.export_reports(sample_reports, csv_path) is True
        df = exporter.read_csv(csv_path)

        assert len(df) == 3
        assert df.iloc[0]['exponents'] == '3 6 9 10 12 13 14'
        assert df.iloc[1]['label'] == 'NG'
        assert df.iloc[2]['scroll_type'] == ''

    def test_read_missing_file(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            CSVExporter().read_csv(tmp_path / "missing.csv")

    def test_read_unexpected_columns(self, tmp_path):
        csv_path = tmp_path / "other.csv"
        csv_path.write_text("exponents,genus\n2 3,1\n")
        with pytest.raises(ValueError):
            CSVExporter().read_csv(csv_path)
