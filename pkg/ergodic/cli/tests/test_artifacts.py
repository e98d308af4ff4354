"""
Tests for verdict lines, JSON conversion and the CSV number format.
"""

import json
import math
from pathlib import Path

import numpy as np
import pytest

from ergodic import __version__
from ergodic.cli import RunConfig, Verdict, envelope, to_jsonable
from ergodic.cli.artifacts import csv_text, write_json


class TestVerdict:
	def test_line(self):
		assert Verdict.at_most('passing-time', 0.5, 3.0).line() == 'PASS passing-time: value=0.5 bound=3'

	def test_failing_line(self):
		assert Verdict.at_least('fidelity', 0.25, 0.5).line() == 'FAIL fidelity: value=0.25 bound=0.5'

	def test_line_uses_seventeen_digits(self):
		assert Verdict.at_least('fidelity', 1.0, 0.999).line() == 'PASS fidelity: value=1 bound=0.99899999999999999'

	def test_missing_numbers(self):
		assert Verdict('readout', True).line() == 'PASS readout: value=- bound=-'

	@pytest.mark.parametrize('value, passed', [(1.0, True), (1.0 + 1e-12, False), (0.0, True)])
	def test_at_most_boundary(self, value, passed):
		assert Verdict.at_most('x', value, 1.0).passed is passed

	def test_to_dict_nulls_non_finite_values(self):
		payload = Verdict.at_most('drift', math.inf, 1e-9).to_dict()

		assert payload == {'name': 'drift', 'passed': False, 'value': None, 'bound': 1e-9, 'detail': ''}


class TestToJsonable:
	def test_numpy_values(self):
		assert to_jsonable({'a': np.float64(0.5), 'b': np.arange(3), 'c': np.bool_(True)}) == {
			'a': 0.5,
			'b': [0, 1, 2],
			'c': True,
		}

	def test_complex_and_non_finite(self):
		assert to_jsonable([1 + 2j, float('nan'), -math.inf]) == [{'re': 1.0, 'im': 2.0}, None, None]

	def test_paths_and_tuples(self):
		assert to_jsonable((Path('out'), 3)) == ['out', 3]

	def test_keys_become_strings(self):
		assert to_jsonable({1: 'a'}) == {'1': 'a'}


class TestCsv:
	def test_seventeen_digits_and_empty_fields(self):
		text = csv_text(['t', 'p', 'exact', 'ok'], [(0.1, 2, None, True), (1e-20, 3, math.nan, False)])

		assert text == 't,p,exact,ok\n0.10000000000000001,2,,true\n9.9999999999999995e-21,3,,false\n'

	def test_numpy_rows(self):
		assert csv_text(['x'], [np.array([0.5])]) == 'x\n0.5\n'


class TestEnvelope:
	def test_keys(self):
		config = RunConfig(command='timeavg', m=4)
		payload = envelope(config, [Verdict('readout', True, 0.1, 0.2)], {'m': 4}, {})

		assert list(payload) == ['tool-version', 'format-version', 'config-echo', 'verdicts', 'results', 'trace']
		assert payload['tool-version'] == __version__
		assert payload['config-echo']['command'] == 'timeavg'
		assert payload['verdicts'][0]['name'] == 'readout'

	def test_write_json_nulls_non_finite_values(self, tmp_path):
		path = write_json(tmp_path / 'nested' / 'a.json', {'value': math.nan, 'array': np.ones(2)})

		assert json.loads(path.read_text()) == {'value': None, 'array': [1.0, 1.0]}
