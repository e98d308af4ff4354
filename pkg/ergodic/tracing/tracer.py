"""
Execution tracer for verification runs.

Every numerical stage of a run (building a sector, diagonalizing, integrating a
loop, checking a bound) is recorded as a step with its inputs, a compact
summary of its output, its duration and any failure. Inherit from Traced and
decorate the stages with @trace.

Usage:
	class Lemma1Command(Traced):

		@trace()
		def single(self, n: int, E: float) -> Lemma1Result:
			...

The summary returned by ``trace_summary()`` is embedded in the JSON artifacts
under the ``trace`` key.
"""

import functools
import inspect
import time
from collections.abc import Mapping
from dataclasses import asdict, dataclass, field, is_dataclass
from datetime import datetime, timezone
from enum import Enum
from typing import Any, Callable, TypeVar

import numpy as np

MAX_ITEMS = 50
MAX_ARRAY_ITEMS = 16


class StepStatus(str, Enum):
	"""Status of a traced stage."""

	STARTED = 'started'
	COMPLETED = 'completed'
	FAILED = 'failed'


@dataclass
class ExecutionStep:
	"""A single traced stage."""

	class_name: str
	method_name: str
	status: StepStatus
	step_index: int = 0
	input_data: dict[str, Any] | None = None
	output_data: Any | None = None
	error: str | None = None
	duration_ms: float | None = None


@dataclass
class ExecutionTrace:
	"""Container for the stages of one run."""

	name: str = ''
	started_at: str = ''
	status: str = 'pending'
	steps: list[ExecutionStep] = field(default_factory=list)
	error_summary: str | None = None


def _utc_now() -> str:
	return datetime.now(timezone.utc).isoformat()


def _serialize_array(value: np.ndarray, max_depth: int) -> Any:
	"""Arrays are listed when small and summarized by shape otherwise."""
	if value.size <= MAX_ARRAY_ITEMS:
		return _serialize_value(value.tolist(), max_depth - 1)
	return {'shape': list(value.shape), 'dtype': str(value.dtype)}


def _serialize_value(value: Any, max_depth: int = 5, max_length: int = 1000) -> Any:
	"""Serialize a value for the trace without ever failing."""
	if max_depth <= 0:
		return '<max_depth_exceeded>'

	if value is None or isinstance(value, (bool, int)):
		return value

	if isinstance(value, float):
		return value if np.isfinite(value) else str(value)

	if isinstance(value, str):
		return f'{value[:max_length]}...<truncated>' if len(value) > max_length else value

	if isinstance(value, complex):
		return {'re': value.real, 'im': value.imag}

	if isinstance(value, np.generic):
		return _serialize_value(value.item(), max_depth, max_length)

	if isinstance(value, np.ndarray):
		return _serialize_array(value, max_depth)

	if isinstance(value, Enum):
		return value.value

	if isinstance(value, (list, tuple)):
		items = [_serialize_value(v, max_depth - 1, max_length) for v in value[:MAX_ITEMS]]
		if len(value) > MAX_ITEMS:
			items.append(f'<{len(value) - MAX_ITEMS} more items>')
		return items

	if isinstance(value, Mapping):
		pairs = list(value.items())
		result = {str(k): _serialize_value(v, max_depth - 1, max_length) for k, v in pairs[:MAX_ITEMS]}
		if len(pairs) > MAX_ITEMS:
			result['<truncated>'] = f'{len(pairs) - MAX_ITEMS} more keys'
		return result

	if is_dataclass(value) and not isinstance(value, type):
		try:
			return _serialize_value(asdict(value), max_depth, max_length)
		except Exception:
			pass

	if hasattr(value, 'model_dump'):
		try:
			return _serialize_value(value.model_dump(), max_depth, max_length)
		except Exception:
			pass

	if hasattr(value, '__dict__'):
		attrs = {k: v for k, v in vars(value).items() if not k.startswith('_')}
		if attrs:
			return {k: _serialize_value(v, max_depth - 1, max_length) for k, v in attrs.items()}
		return f'<{type(value).__name__}>'

	return str(value)[:max_length]


def _extract_args(func: Callable, args: tuple, kwargs: dict) -> dict[str, Any]:
	"""Bind the call arguments to parameter names, skipping ``self``."""
	try:
		bound = inspect.signature(func).bind_partial(*args, **kwargs)
	except TypeError:
		return {'args': _serialize_value(args[1:])}
	return {name: _serialize_value(value) for name, value in bound.arguments.items() if name not in ('self', 'cls')}


F = TypeVar('F', bound=Callable[..., Any])


def trace(capture_input: bool = True, capture_output: bool = True) -> Callable[[F], F]:
	"""
	Decorator recording a method call as a traced stage.

	The owning class must inherit from :class:`Traced`. Failures are recorded
	and re-raised unchanged.

	Args:
		capture_input: Whether to record the call arguments.
		capture_output: Whether to record a summary of the return value.

	Returns:
		The decorated method.
	"""

	def decorator(func: F) -> F:
		@functools.wraps(func)
		def wrapper(self, *args, **kwargs):
			if hasattr(self, '_auto_init_tracer'):
				self._auto_init_tracer()

			if not hasattr(self, '_execution_trace'):
				return func(self, *args, **kwargs)

			class_name = self.__class__.__name__
			step_index = len(self._execution_trace.steps)
			input_data = _extract_args(func, (self,) + args, kwargs) if capture_input else None
			self._execution_trace.steps.append(
				ExecutionStep(
					class_name=class_name,
					method_name=func.__name__,
					status=StepStatus.STARTED,
					step_index=step_index,
					input_data=input_data,
				)
			)

			start = time.perf_counter()
			try:
				result = func(self, *args, **kwargs)
			except Exception as exc:
				error_msg = f'{type(exc).__name__}: {exc}'
				self._execution_trace.steps.append(
					ExecutionStep(
						class_name=class_name,
						method_name=func.__name__,
						status=StepStatus.FAILED,
						step_index=step_index,
						error=error_msg,
						duration_ms=(time.perf_counter() - start) * 1000,
					)
				)
				self._execution_trace.status = 'failed'
				self._execution_trace.error_summary = error_msg
				raise

			self._execution_trace.steps.append(
				ExecutionStep(
					class_name=class_name,
					method_name=func.__name__,
					status=StepStatus.COMPLETED,
					step_index=step_index,
					output_data=_serialize_value(result) if capture_output else None,
					duration_ms=(time.perf_counter() - start) * 1000,
				)
			)
			return result

		return wrapper  # type: ignore

	return decorator


class Traced:
	"""
	Mixin giving a class an execution trace of its @trace stages.

	Attributes:
		NAME: Trace name; defaults to the class name.
	"""

	_execution_trace: ExecutionTrace
	_tracer_initialized: bool = False

	NAME: str = ''

	def _auto_init_tracer(self) -> None:
		"""Start a trace on the first traced call."""
		if not self._tracer_initialized:
			self._execution_trace = ExecutionTrace(
				name=self.NAME or self.__class__.__name__,
				started_at=_utc_now(),
				status='running',
			)
			self._tracer_initialized = True

	def trace_summary(self) -> dict[str, Any]:
		"""Build the ordered summary of finished stages."""
		if not hasattr(self, '_execution_trace'):
			return {}

		steps_by_index: dict[int, dict[str, Any]] = {}
		for step in self._execution_trace.steps:
			entry = steps_by_index.setdefault(step.step_index, {'class': step.class_name, 'method': step.method_name})
			if step.status == StepStatus.STARTED:
				entry['input'] = step.input_data
			elif step.status == StepStatus.COMPLETED:
				entry['output'] = step.output_data
				entry['duration_ms'] = round(step.duration_ms or 0.0, 2)
				entry['status'] = 'ok'
			elif step.status == StepStatus.FAILED:
				entry['error'] = step.error
				entry['duration_ms'] = round(step.duration_ms or 0.0, 2)
				entry['status'] = 'failed'

		summary = []
		for idx in sorted(steps_by_index):
			entry = steps_by_index[idx]
			if 'status' in entry:
				entry['order'] = len(summary) + 1
				summary.append(entry)

		trace_data: dict[str, Any] = {
			'name': self._execution_trace.name,
			'started_at': self._execution_trace.started_at,
			'completed_at': _utc_now(),
			'status': 'completed' if self._execution_trace.status == 'running' else self._execution_trace.status,
			'total_steps': len(summary),
			'steps': summary,
		}
		if self._execution_trace.error_summary:
			trace_data['error_summary'] = self._execution_trace.error_summary
		return trace_data

	def reset_tracer(self) -> None:
		"""Drop the current trace so the next traced call starts a new one."""
		self._tracer_initialized = False
		if hasattr(self, '_execution_trace'):
			del self._execution_trace
