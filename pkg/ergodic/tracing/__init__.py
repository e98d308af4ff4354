"""
Tracing module for the ergodic toolkit.

Records the numerical stages of verification runs so every artifact carries
an account of what was computed, with which inputs, and how long it took.
"""

from .tracer import (
	ExecutionStep,
	ExecutionTrace,
	StepStatus,
	Traced,
	trace,
)

__all__ = [
	'ExecutionStep',
	'ExecutionTrace',
	'StepStatus',
	'Traced',
	'trace',
]
