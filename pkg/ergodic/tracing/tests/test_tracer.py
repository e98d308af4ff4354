"""
Tests for the execution tracer.

Covers stage recording, failure capture, summary ordering and the
serialization of numerical values (numpy scalars, arrays, complex numbers).
"""

from dataclasses import dataclass

import numpy as np
import pytest

from ergodic.tracing import ExecutionTrace, StepStatus, Traced, trace
from ergodic.tracing.tracer import _serialize_value


@dataclass
class Outcome:
	value: float
	holds: bool


class SpectrumRun(Traced):
	NAME = 'spectrum-run'

	@trace()
	def diagonalize(self, size: int, scale: float = 1.0) -> np.ndarray:
		return scale * np.arange(size, dtype=float)

	@trace(capture_output=False)
	def quiet(self, size: int) -> int:
		return size

	@trace()
	def check(self, value: float) -> Outcome:
		return Outcome(value=value, holds=value < 1.0)

	@trace()
	def explode(self) -> None:
		raise ValueError('no gap')


class TestTraceDecorator:
	def test_records_started_and_completed(self):
		run = SpectrumRun()
		run.diagonalize(3, scale=2.0)

		statuses = [step.status for step in run._execution_trace.steps]
		assert statuses == [StepStatus.STARTED, StepStatus.COMPLETED]
		assert run._execution_trace.steps[0].input_data == {'size': 3, 'scale': 2.0}
		assert run._execution_trace.steps[1].output_data == [0.0, 2.0, 4.0]

	def test_capture_output_disabled(self):
		run = SpectrumRun()
		run.quiet(5)

		assert run._execution_trace.steps[1].output_data is None

	def test_failure_is_recorded_and_reraised(self):
		run = SpectrumRun()

		with pytest.raises(ValueError, match='no gap'):
			run.explode()

		assert run._execution_trace.status == 'failed'
		assert run._execution_trace.error_summary == 'ValueError: no gap'
		assert run._execution_trace.steps[-1].status == StepStatus.FAILED

	def test_trace_name_defaults_to_class_name(self):
		class Unnamed(Traced):
			@trace()
			def stage(self) -> int:
				return 1

		run = Unnamed()
		run.stage()

		assert isinstance(run._execution_trace, ExecutionTrace)
		assert run._execution_trace.name == 'Unnamed'


class TestTraceSummary:
	def test_summary_orders_stages(self):
		run = SpectrumRun()
		run.diagonalize(2)
		run.check(0.5)

		summary = run.trace_summary()

		assert summary['name'] == 'spectrum-run'
		assert summary['status'] == 'completed'
		assert summary['total_steps'] == 2
		assert [s['method'] for s in summary['steps']] == ['diagonalize', 'check']
		assert [s['order'] for s in summary['steps']] == [1, 2]
		assert summary['steps'][1]['output'] == {'value': 0.5, 'holds': True}

	def test_summary_of_failed_run(self):
		run = SpectrumRun()
		with pytest.raises(ValueError):
			run.explode()

		summary = run.trace_summary()

		assert summary['status'] == 'failed'
		assert summary['steps'][0]['status'] == 'failed'
		assert summary['error_summary'] == 'ValueError: no gap'

	def test_summary_without_trace_is_empty(self):
		assert SpectrumRun().trace_summary() == {}

	def test_reset_starts_a_new_trace(self):
		run = SpectrumRun()
		run.diagonalize(2)
		run.reset_tracer()
		run.quiet(1)

		assert run.trace_summary()['total_steps'] == 1


class TestSerializeValue:
	@pytest.mark.parametrize(
		'value, expected',
		[
			(np.float64(0.25), 0.25),
			(np.int64(7), 7),
			(1 + 2j, {'re': 1.0, 'im': 2.0}),
			(float('inf'), 'inf'),
			(StepStatus.FAILED, 'failed'),
			((1, 2), [1, 2]),
		],
	)
	def test_scalars(self, value, expected):
		assert _serialize_value(value) == expected

	def test_large_array_is_summarized(self):
		assert _serialize_value(np.zeros((20, 20))) == {'shape': [20, 20], 'dtype': 'float64'}

	def test_long_list_is_truncated(self):
		result = _serialize_value(list(range(60)))

		assert len(result) == 51
		assert result[-1] == '<10 more items>'

	def test_depth_limit(self):
		assert _serialize_value([[[1]]], max_depth=2) == [['<max_depth_exceeded>']]
