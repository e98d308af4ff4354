"""Shared fixtures for the perturbation test suite."""

from typing import Callable

import pytest

from ergodic.perturbation import SplitProblem, split_problem


@pytest.fixture(scope='module')
def problem_n3() -> SplitProblem:
	"""The n = 3 lattice at E = 10^4."""
	return split_problem(3, 1e4)


@pytest.fixture
def make_problem() -> Callable[[int, float], SplitProblem]:
	def _make_problem(n: int, E: float) -> SplitProblem:
		return split_problem(n, E)

	return _make_problem
