"""Shared fixtures for the layout test suite."""

from typing import Callable

import pytest

from ergodic.configspace import LatticeSpec
from ergodic.layout import CircuitLayout, GateKind, StripeKind, StripeSpec
from ergodic.layout.circuit import realized_angle


@pytest.fixture
def make_stripe() -> Callable[..., StripeSpec]:
	"""Factory fixture for a gate stripe (x rotation on two rows, controlled phase on three)."""

	def _make_stripe(rows: tuple[int, ...] = (1, 2), c_start: int = 1, l: int = 3, phi: float = 1.0) -> StripeSpec:
		if len(rows) == 2:
			theta = realized_angle(GateKind.ROT_X, phi)
			return StripeSpec(StripeKind.ONE_QUBIT, rows, c_start, l, phi=phi, theta=theta, axis='x')
		theta = realized_angle(GateKind.CPHASE, phi)
		return StripeSpec(StripeKind.TWO_QUBIT, rows, c_start, l, phi=phi, theta=theta)

	return _make_stripe


@pytest.fixture
def make_layout() -> Callable[..., CircuitLayout]:
	def _make_layout(stripes: list[StripeSpec], n: int = 10, k: int = 8, qubits: int = 2) -> CircuitLayout:
		return CircuitLayout(LatticeSpec(n=n, k=k), stripes, qubits, n - qubits)

	return _make_layout
