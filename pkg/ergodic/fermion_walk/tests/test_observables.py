"""
Tests for the counting statistics of the left-half fermion number and the many-body oracles.
"""

import numpy as np
import pytest

from ergodic.exceptions import PreconditionError, SizeCapError
from ergodic.fermion_walk import (
	chebyshev_lower_bound,
	correlation_matrix,
	default_time_grid,
	evolve_initial_state,
	expectation_left,
	left_counts,
	left_occupations,
	occupation_moments,
	outside_probability_exact,
	pair_occupation,
	path_spectrum,
	propagator,
	slater_probabilities,
	variance_left,
	walk_observables,
)


class TestCountingStatistics:
	def test_initial_state_is_deterministic(self, make_propagator):
		prop = make_propagator(4, 0.0)

		assert expectation_left(prop, 4) == pytest.approx(0.0, abs=1e-12)
		assert variance_left(prop, 4) == pytest.approx(0.0, abs=1e-12)

	def test_matches_many_body_moments(self, make_propagator, random_times):
		counts = left_counts(2)

		for t in random_times:
			probabilities = np.abs(evolve_initial_state(2, t)) ** 2
			mean = probabilities @ counts
			variance = probabilities @ counts**2 - mean**2
			prop = make_propagator(2, t)

			assert expectation_left(prop, 2) == pytest.approx(mean, abs=1e-9)
			assert variance_left(prop, 2) == pytest.approx(variance, abs=1e-9)

	@pytest.mark.parametrize('m', [2, 3])
	def test_jordan_wigner_consistency(self, make_propagator, random_times, m):
		for t in random_times:
			occupations, pairs = occupation_moments(evolve_initial_state(m, t), m)
			prop = make_propagator(m, t)

			assert np.allclose(left_occupations(prop, m), occupations, atol=1e-9)
			for i in range(1, 2 * m + 1):
				for j in range(1, 2 * m + 1):
					assert pair_occupation(prop, m, i, j) == pytest.approx(pairs[i - 1, j - 1], abs=1e-9)

	def test_wick_inequality_and_conservation(self, make_propagator, random_times):
		m = 5
		for t in random_times:
			prop = make_propagator(m, t)
			occupations = left_occupations(prop, m)

			assert occupations.sum() == pytest.approx(m, abs=1e-9)
			for i in range(1, m + 1):
				for j in range(i + 1, m + 1):
					assert pair_occupation(prop, m, i, j) <= occupations[i - 1] * occupations[j - 1] + 1e-12

	def test_correlation_matrix_is_a_projector(self, make_propagator):
		correlation = correlation_matrix(make_propagator(4, 2.5), 4)

		assert np.allclose(correlation @ correlation, correlation, atol=1e-10)
		assert np.trace(correlation).real == pytest.approx(4.0)

	def test_variance_never_exceeds_expectation(self):
		m = 16
		spectrum = path_spectrum(m)
		for t in default_time_grid(m, points=128):
			prop = propagator(spectrum, float(t))
			expectation = expectation_left(prop, m)

			assert -1e-12 <= variance_left(prop, m) <= expectation + 1e-12
			assert 0.0 <= expectation <= m

	def test_rejects_foreign_propagator(self, make_propagator):
		with pytest.raises(PreconditionError):
			expectation_left(make_propagator(3, 1.0), 2)

	def test_expectation_takes_no_region_side(self, make_propagator):
		with pytest.raises(TypeError):
			expectation_left(make_propagator(2, 1.0), 2, 1)  # type: ignore[call-arg]


class TestChebyshevLowerBound:
	@pytest.mark.parametrize(
		'expectation, variance, k, expected',
		[(4.0, 1.0, 2, 0.75), (2.0, 1.0, 2, 0.0), (3.0, 5.0, 2, 0.0), (1.0, 0.0, 2, 0.0)],
	)
	def test_cases(self, expectation, variance, k, expected):
		assert chebyshev_lower_bound(expectation, variance, k) == pytest.approx(expected)


class TestTimeGrid:
	def test_default_shape(self):
		grid = default_time_grid(4)

		assert len(grid) == 512
		assert grid[0] == 0.0
		assert grid[1] == pytest.approx(1e-3)
		assert grid[-1] == pytest.approx(32.0)
		assert np.all(np.diff(grid) > 0)

	def test_rejects_too_few_points(self):
		with pytest.raises(PreconditionError):
			default_time_grid(4, points=10)


class TestManyBodyOracles:
	def test_outside_probability_at_time_zero(self):
		assert outside_probability_exact(3, 1, 0.0) == pytest.approx(0.0, abs=1e-12)

	def test_evolution_is_normalized(self):
		assert np.linalg.norm(evolve_initial_state(3, 4.2)) == pytest.approx(1.0, abs=1e-10)

	def test_slater_determinants_match_evolution(self, make_propagator):
		amplitudes = evolve_initial_state(3, 1.7)

		assert np.allclose(slater_probabilities(make_propagator(3, 1.7), 3), np.abs(amplitudes) ** 2, atol=1e-9)

	def test_size_cap(self):
		with pytest.raises(SizeCapError):
			outside_probability_exact(9, 2, 1.0)

	@pytest.mark.parametrize('k', [0, 4])
	def test_rejects_invalid_k(self, k):
		with pytest.raises(PreconditionError):
			outside_probability_exact(3, k, 1.0)


class TestWalkObservables:
	def test_exact_probability_respects_chebyshev(self):
		times = np.linspace(0.0, 12.0, 40)
		observables = walk_observables(3, 1, times)

		assert observables.outside_probability is not None
		assert np.all(observables.outside_probability >= observables.chebyshev - 1e-9)
		assert np.all(observables.variance <= observables.expectation + 1e-12)

	def test_series_matches_single_evaluations(self):
		times = np.array([0.5, 3.0])
		observables = walk_observables(3, 2, times)

		for t, probability in zip(times, observables.outside_probability):
			assert probability == pytest.approx(outside_probability_exact(3, 2, t), abs=1e-9)

	def test_rows_without_exact(self):
		rows = walk_observables(10, 2, np.array([0.0, 1.0]), exact=False).rows()

		assert [row[0] for row in rows] == [0.0, 1.0]
		assert rows[0][4] is None
		assert rows[0][1] == pytest.approx(0.0, abs=1e-12)

	def test_rejects_invalid_k(self):
		with pytest.raises(PreconditionError):
			walk_observables(3, 4)
