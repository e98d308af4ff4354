"""Shared fixtures for the fermion walk test suite."""

from typing import Callable

import numpy as np
import pytest

from ergodic.fermion_walk import Propagator, path_spectrum, propagator


@pytest.fixture
def make_propagator() -> Callable[[int, float], Propagator]:
	"""Factory fixture for the one-particle propagator of the 2m-site path."""

	def _make_propagator(m: int, t: float) -> Propagator:
		return propagator(path_spectrum(m), t)

	return _make_propagator


@pytest.fixture
def random_times() -> np.ndarray:
	return np.random.default_rng(7).uniform(0.0, 10.0, size=20)
