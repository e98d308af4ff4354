"""Shared fixtures for the holonomy test suite."""

from typing import Callable

import numpy as np
import pytest

from ergodic.holonomy import SIGMA_X, SIGMA_Z, LoopFamily


@pytest.fixture
def make_qubit_loop() -> Callable[..., LoopFamily]:
	"""Factory fixture for the single-spin loop ``G_0 = sz`` rotated about x."""

	def _make_qubit_loop(l: int = 400, tau_step: float = 10.0, **kwargs) -> LoopFamily:
		return LoopFamily(SIGMA_Z, SIGMA_X, l, tau_step, **kwargs)

	return _make_qubit_loop


@pytest.fixture
def random_hermitian() -> Callable[[int, int], np.ndarray]:
	def _random_hermitian(dimension: int, seed: int = 0) -> np.ndarray:
		rng = np.random.default_rng(seed)
		matrix = rng.normal(size=(dimension, dimension)) + 1j * rng.normal(size=(dimension, dimension))
		return (matrix + matrix.conj().T) / 2

	return _random_hermitian
