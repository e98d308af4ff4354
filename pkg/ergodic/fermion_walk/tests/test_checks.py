"""
Tests for the passing-time and ergodic-readout checks.
"""

import numpy as np
import pytest

from ergodic.exceptions import GridTooShortError, PreconditionError
from ergodic.fermion_walk import (
	PassingTimeResult,
	ergodic_readout_check,
	expectation_left,
	passing_time_check,
	path_spectrum,
	propagator,
)


class TestPassingTime:
	def test_reaches_target(self):
		result = passing_time_check(16, 4)

		assert np.isfinite(result.t_star)
		assert result.expectation == pytest.approx(16 / 3, abs=1e-5)
		assert result.theorem_bound == 3.0
		assert result.failure_bound <= result.theorem_bound
		assert result.holds
		assert result.exact_outside_probability is None

	def test_refined_time_is_a_crossing(self):
		result = passing_time_check(8, 2)
		spectrum = path_spectrum(8)

		assert expectation_left(propagator(spectrum, result.t_star - 1e-3), 8) < 8 / 3
		assert expectation_left(propagator(spectrum, result.t_star + 1e-3), 8) > 8 / 3

	def test_exact_probability_respects_chebyshev(self):
		result = passing_time_check(4, 1)

		assert result.exact_outside_probability is not None
		assert result.exact_outside_probability >= 1 - result.failure_bound - 1e-9
		assert result.to_dict()['holds'] is True

	def test_exact_probability_at_small_region(self):
		result = passing_time_check(8, 2)

		assert result.exact_outside_probability is not None
		assert result.exact_outside_probability >= 0.5

	def test_grid_too_short(self):
		with pytest.raises(GridTooShortError) as error:
			passing_time_check(4, 1, times=np.array([0.0, 0.1, 0.2]))

		assert error.value.target == pytest.approx(4 / 3)
		assert error.value.reached < 4 / 3

	def test_rejects_invalid_k(self):
		with pytest.raises(PreconditionError):
			passing_time_check(4, 5)


class TestPassingTimeOnLongWord:
	@pytest.fixture(scope='class')
	def results(self) -> dict[int, PassingTimeResult]:
		return {k: passing_time_check(64, k) for k in (4, 8, 16)}

	@pytest.mark.parametrize('k', [4, 8, 16])
	def test_bounds(self, results, k):
		result = results[k]

		assert result.t_star <= 8 * k
		assert result.theorem_bound == pytest.approx(12 / k)
		assert result.failure_bound <= 12 / k
		assert result.holds

	def test_passing_time_grows_linearly(self, results):
		ratios = [results[8].t_star / results[4].t_star, results[16].t_star / results[8].t_star]

		assert all(1.5 <= ratio <= 3.0 for ratio in ratios)


class TestErgodicReadout:
	@pytest.mark.parametrize('m', [0, 6])
	def test_requires_multiple_of_four(self, m):
		with pytest.raises(PreconditionError, match='multiple of 4'):
			ergodic_readout_check(m)

	def test_small_sector_has_exact_probability(self):
		check = ergodic_readout_check(4)

		assert check.exact_probability is not None
		assert check.exact_probability <= check.bound
		assert check.holds

	def test_bound_decays_like_inverse_m(self):
		small, large = ergodic_readout_check(8), ergodic_readout_check(64)

		assert small.exact_probability is None
		assert small.bound > 0
		assert large.bound / small.bound <= 0.25
		assert large.bound <= large.bound_from_upper + 1e-12
