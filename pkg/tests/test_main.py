"""
Unit tests for the command-line front end
"""

import io
import json
from unittest.mock import Mock, patch

import pytest

from src.main import render, run
from src.storage.database import DatabaseManager
from src.utils.error_handler import ErrorHandler, ErrorType


def invoke(*argv):
    """Run the CLI and return (exit code, stdout, stderr)."""
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def json_lines(text):
    return [json.loads(line) for line in text.splitlines() if line]


class TestCurveVerbs:
    """Test cases for analyze, canonical and gonality"""

    def test_canonical(self):
        code, out, err = invoke('canonical', '3,6,9,10,12,13,14', '--format', 'json')
        assert code == 0
        assert err == ''
        data = json_lines(out)[0]
        assert data['canonical_exponents'] == [0, 3, 4, 6, 7, 9, 10]
        assert data['genus'] == 7
        assert data['from_q'] == []

    def test_canonical_text(self):
        code, out, _ = invoke('canonical', '3,6,9,10,12,13,14')
        assert code == 0
        assert 'genus: 7' in out.splitlines()
        assert 'canonical_exponents: [0,3,4,6,7,9,10]' in out.splitlines()

    def test_gonality(self):
        code, out, _ = invoke('gonality', '3,6,9,10,12,13,14', '--format', 'json')
        assert code == 0
        assert json_lines(out)[0] == {
            'exponents': [3, 6, 9, 10, 12, 13, 14],
            'gonality': 3,
            'r': 3,
            'parts': [[0, 3, 6, 9], [4, 7, 10]],
        }

    def test_gonality_low_genus(self):
        code, out, _ = invoke('gonality', '2,3', '--format', 'json')
        assert code == 0
        data = json_lines(out)[0]
        assert data['gonality'] == 2
        assert data['r'] == 1
        assert data['parts'] is None

    def test_analyze(self):
        code, out, _ = invoke('analyze', '4,9,11,15,16', '--format', 'json')
        assert code == 0
        data = json_lines(out)[0]
        assert data['genus'] == 8
        assert data['classification']['label'] == 'K'
        assert data['ell'] == 4

    def test_analyze_output_is_canonical_json(self):
        _, out, _ = invoke('analyze', '3,6,9,10,12,13,14', '--format', 'json')
        line = out.rstrip('\n')
        assert json.dumps(json.loads(line), ensure_ascii=False, separators=(',', ':')) == line


class TestScrollVerbs:
    """Test cases for scrollfit and the scroll arithmetic verbs"""

    def test_scrollfit_best(self):
        code, out, _ = invoke('scrollfit', '0,3,4,6,7,9,10', '--format', 'json')
        assert code == 0
        data = json_lines(out)[0]
        assert data['r'] == 3
        assert data['scroll_type'] == [2, 3]
        assert data['blocks'] == [[[0, 3], [3, 6], [6, 9]], [[4, 7], [7, 10]]]

    def test_scrollfit_text_matrix(self):
        code, out, _ = invoke('scrollfit', '0,3,4,6,7,9,10')
        assert code == 0
        assert "matrix:\n[ t^0 t^3 t^6 | t^4 t^7 ]\n[ t^3 t^6 t^9 | t^7 t^10 ]" in out

    def test_scrollfit_fixed_difference(self):
        code, out, _ = invoke('scrollfit', '0,3,4,6,7,9,10', '--r', '1', '--format', 'json')
        assert code == 0
        data = json_lines(out)[0]
        assert data['scroll_type'] == [0, 1, 1, 1]
        assert data['smooth'] is False

    def test_scrollfit_zero_difference_is_rejected(self):
        code, out, err = invoke('scrollfit', '0,3,4,6,7,9,10', '--r', '0')
        assert code == 2
        assert out == ''
        assert err.startswith('error: precondition_error:')

    def test_scroll_h0(self):
        code, out, _ = invoke('scroll-h0', '--type', '1,3', '--a', '1', '--b', '-2', '--format', 'json')
        assert code == 0
        data = json_lines(out)[0]
        assert data['h0_closed'] == 0
        assert data['in_regime'] is False
        assert data['h0_enum'] == 2
        assert data['hi_vanishes'] is True

    def test_scroll_genus_ci(self):
        code, out, _ = invoke('scroll-genus-ci', '--type', '1,3', '--classes', '3,-2', '--format', 'json')
        assert code == 0
        assert json_lines(out)[0] == {
            'scroll': 'S_{1,3}', 'ell': 3, 'degree': 10,
            'genus_closed': 6, 'genus_koszul': 6, 'effective': True,
        }

    def test_scroll_chow(self):
        code, out, _ = invoke('scroll-chow', '--type', '1,3', '--classes', '1,0;1,0', '--format', 'json')
        assert code == 0
        data = json_lines(out)[0]
        assert data['product'] == {'codim': 2, 'degree': 4}
        assert data['canonical_class'] == [-2, 2]
        assert data['N'] == 5

    def test_scroll_chow_vanishing(self):
        code, out, _ = invoke('scroll-chow', '--type', '1,3', '--classes', '1,0;1,0;0,1', '--format', 'json')
        assert code == 0
        assert json_lines(out)[0]['product'] == {'codim': 3, 'vanishes': True}

    def test_bounds(self):
        code, out, _ = invoke('bounds', '--g', '8', '--eta', '2', '--mu', '1', '--d', '3',
                              '--ell', '4', '--a', '4', '--b', '-4', '--g-prime', '6',
                              '--format', 'json')
        assert code == 0
        data = json_lines(out)[0]
        assert data['pacan_residual'] == 0
        assert data['ell_from_formula'] == 4
        assert data['gonality_upper'] == 6
        assert data['md_upper'] == 3
        assert data['b_candidates']['0'] == -4


class TestCatalogVerbs:
    """Test cases for enumerate and tables"""

    def test_enumerate_genus(self):
        code, out, _ = invoke('enumerate', '--genus', '3', '--format', 'json')
        assert code == 0
        reports = json_lines(out)
        assert len(reports) == 4
        assert {r['genus'] for r in reports} == {3}

    def test_enumerate_range_and_filter(self):
        code, out, _ = invoke('enumerate', '--max-genus', '3', '--filter', 'kunz', '--format', 'json')
        assert code == 0
        assert len(json_lines(out)) == 2

    def test_enumerate_output_file(self, tmp_path):
        jsonl = tmp_path / "catalog.jsonl"
        csv_path = tmp_path / "catalog.csv"
        assert invoke('enumerate', '--max-genus', '3', '--output', str(jsonl))[0] == 0
        assert invoke('enumerate', '--max-genus', '3', '--output', str(csv_path))[0] == 0
        assert len(jsonl.read_text().splitlines()) == 7
        assert len(csv_path.read_text().splitlines()) == 8

    def test_enumerate_save(self, tmp_path):
        url = f"sqlite:///{tmp_path / 'catalog.db'}"
        with patch.dict('os.environ', {'DATABASE_URL': url}):
            code, _, _ = invoke('enumerate', '--genus', '2', '--save')
        assert code == 0
        db = DatabaseManager(url)
        assert db.connect()
        assert db.count_reports() == 2
        db.disconnect()

    @patch('src.main.DatabaseManager')
    def test_enumerate_save_unavailable(self, mock_db_class, tmp_path):
        mock_db = Mock()
        mock_db.connect.return_value = False
        mock_db_class.return_value = mock_db
        errors_csv = tmp_path / "errors.csv"

        with patch.dict('os.environ', {'ERRORS_CSV_PATH': str(errors_csv)}):
            code, _, err = invoke('enumerate', '--genus', '2', '--save')
        assert code == 2
        assert err.startswith('error: storage_error:')
        mock_db.disconnect.assert_called_once()
        errors = ErrorHandler(errors_csv_path=errors_csv).get_errors()
        assert [(e['subject'], e['error_type']) for e in errors] == [('catalog', 'storage_error')]

    @patch('src.main.DatabaseManager')
    def test_enumerate_partial_save(self, mock_db_class, tmp_path):
        mock_db = Mock()
        mock_db.connect.return_value = True
        mock_db.create_tables.return_value = True
        mock_db.save_reports.return_value = 1
        mock_db_class.return_value = mock_db
        errors_csv = tmp_path / "errors.csv"

        with patch.dict('os.environ', {'ERRORS_CSV_PATH': str(errors_csv)}):
            code, _, err = invoke('enumerate', '--genus', '2', '--save')
        assert code == 2
        assert 'saved 1 of 2 reports' in err
        errors = ErrorHandler(errors_csv_path=errors_csv).get_errors(error_type=ErrorType.STORAGE_ERROR)
        assert len(errors) == 1

    def test_enumerate_cap(self):
        with patch.dict('os.environ', {'CATALOG_MAX_GENUS': '4'}):
            code, out, err = invoke('enumerate', '--genus', '5')
        assert code == 2
        assert out == ''
        assert err.startswith('error: genus_cap_error:')

    def test_enumerate_needs_genus(self):
        code, _, err = invoke('enumerate')
        assert code == 1
        assert err.startswith('error: usage_error:')

    def test_enumerate_unknown_filter(self):
        assert invoke('enumerate', '--genus', '2', '--filter', 'bogus')[0] == 1

    def test_tables(self):
        code, out, _ = invoke('tables', '--format', 'json')
        assert code == 0
        assert all(row['matched'] for row in json_lines(out))

    @patch('src.main.reproduce_table_fixtures')
    def test_tables_mismatch(self, mock_reproduce):
        verdict = Mock(matched=False)
        verdict.to_dict.return_value = {'exponents': [5, 7, 8], 'matched': False}
        mock_reproduce.return_value = [verdict]

        code, out, _ = invoke('tables', '--format', 'json')
        assert code == 3
        assert json_lines(out) == [{'exponents': [5, 7, 8], 'matched': False}]


class TestErrors:
    """Exit codes and stderr messages"""

    @pytest.mark.parametrize("argv", [
        ['analyze', '4,6'],
        ['analyze', '3,x'],
        ['analyze', '5,3'],
        ['scroll-h0', '--type', '1,x', '--a', '1', '--b', '0'],
        ['scroll-genus-ci', '--type', '1,3', '--classes', '1'],
    ])
    def test_validation_errors(self, argv):
        code, out, err = invoke(*argv)
        assert code == 2
        assert out == ''
        assert err.startswith('error: validation_error:')

    def test_precondition_error(self):
        code, _, err = invoke('canonical', '2,3')
        assert code == 2
        assert err.startswith('error: precondition_error:')

    @pytest.mark.parametrize("argv", [
        [],
        ['frobnicate'],
        ['scroll-h0', '--type', '1,3'],
        ['canonical', '3,6', '--format', 'xml'],
    ])
    def test_usage_errors(self, argv):
        code, _, err = invoke(*argv)
        assert code == 1
        assert err.startswith('error: usage_error:')

    def test_log_level_option(self):
        code, _, _ = invoke('canonical', '3,6,9,10,12,13,14', '--log-level', 'ERROR')
        assert code == 0


class TestRender:
    """Test cases for render"""

    def test_json_list(self):
        assert render([{'a': 1}, {'b': [1, 2]}], 'json') == '{"a":1}\n{"b":[1,2]}\n'

    def test_text(self):
        assert render({'a': 1, 'b': [1, 2]}, 'text') == 'a: 1\nb: [1,2]\n'

    def test_text_single_key(self):
        assert render({'a': 1}, 'text') == 'a: 1\n'
