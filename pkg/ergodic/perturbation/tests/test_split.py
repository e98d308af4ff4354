"""
Tests for the spectral split, the Green's function and the self-energy.
"""

import numpy as np
import pytest

from ergodic.exceptions import PreconditionError, SingularResolventError, SpectralGapError
from ergodic.perturbation import SpectralSplit, greens_function, self_energy, self_energy_derivative

PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)


@pytest.fixture
def diagonal_split() -> SpectralSplit:
	return SpectralSplit.from_operator(np.diag([0.0, 0.0, 3.0, 5.0]), 1.5, 3.0)


class TestSpectralSplit:
	def test_diagonal_operator_keeps_unit_vectors(self, diagonal_split):
		assert np.allclose(diagonal_split.minus_energies, [0, 0])
		assert np.allclose(diagonal_split.plus_energies, [3, 5])
		assert np.allclose(diagonal_split.minus_projector, np.diag([1, 1, 0, 0]))
		assert np.allclose(diagonal_split.plus_projector, np.diag([0, 0, 1, 1]))

	def test_projectors_are_complementary(self, diagonal_split):
		total = diagonal_split.minus_projector + diagonal_split.plus_projector

		assert np.allclose(total, np.eye(4))
		assert np.allclose(diagonal_split.minus_projector @ diagonal_split.plus_projector, 0)

	def test_minus_order_permutes_the_basis(self):
		split = SpectralSplit.from_operator(np.diag([0.0, 0.0, 3.0]), 1.5, 3.0, minus_order=[1, 0])

		assert np.allclose(split.minus_basis, [[0, 1], [1, 0], [0, 0]])

	def test_non_diagonal_operator(self):
		split = SpectralSplit.from_operator(PAULI_X, 0.0, 2.0)

		assert np.allclose(split.minus_energies, [-1])
		assert np.allclose(split.minus_projector, (np.eye(2) - PAULI_X) / 2)

	def test_eigenvalue_inside_gap(self):
		with pytest.raises(SpectralGapError):
			SpectralSplit.from_operator(np.diag([0.0, 1.0, 2.0]), 1.0, 1.0)

	@pytest.mark.parametrize('delta', [0.0, -1.0])
	def test_rejects_non_positive_delta(self, delta):
		with pytest.raises(PreconditionError, match='delta > 0'):
			SpectralSplit.from_operator(np.diag([0.0, 3.0]), 1.5, delta)

	def test_rejects_minus_order_of_high_states(self):
		with pytest.raises(PreconditionError, match='minus_order'):
			SpectralSplit.from_operator(np.diag([0.0, 0.0, 3.0, 5.0]), 1.5, 3.0, minus_order=[0, 2])

	@pytest.mark.parametrize('signs', ['-', 'x+', '+-+'])
	def test_rejects_bad_block_signs(self, diagonal_split, signs):
		with pytest.raises(PreconditionError):
			diagonal_split.block(np.eye(4), signs)

	def test_block_shapes(self, diagonal_split):
		operator = np.arange(16, dtype=float).reshape(4, 4)

		assert np.allclose(diagonal_split.block(operator, '-+'), [[2, 3], [6, 7]])
		assert diagonal_split.block(operator, '++').shape == (2, 2)


class TestSelfEnergy:
	def test_greens_function(self, diagonal_split):
		assert np.allclose(greens_function(diagonal_split, 1.0), np.diag([-1 / 2, -1 / 4]))

	def test_zero_hopping_leaves_the_potential(self, diagonal_split):
		sigma = self_energy(diagonal_split, np.zeros((4, 4)), 0.5 + 0.5j)

		assert np.allclose(sigma.value, 0)
		assert sigma.neumann_norm == 0.0
		assert sigma.converges
		assert sigma.condition == pytest.approx(1.0)

	def test_single_coupling_matches_closed_form(self):
		split = SpectralSplit.from_operator(np.diag([0.0, 4.0]), 2.0, 4.0)
		K = np.array([[0.0, 0.5], [0.5, 0.0]])
		z = 0.25

		sigma = self_energy(split, K, z)

		assert sigma.value[0, 0] == pytest.approx(0.25 / (z - 4.0))

	def test_singular_resolvent(self):
		split = SpectralSplit.from_operator(np.diag([0.0, 1.0]), 0.5, 1.0)
		K = np.array([[0.0, 0.0], [0.0, 0.5]])

		with pytest.raises(SingularResolventError):
			self_energy(split, K, 1.5)

	def test_divergent_series_is_still_solved(self):
		split = SpectralSplit.from_operator(np.diag([0.0, 1.0]), 0.5, 1.0)
		K = np.array([[0.0, 0.0], [0.0, 2.0]])

		sigma = self_energy(split, K, 0.0)

		assert not sigma.converges
		assert np.isfinite(sigma.value).all()

	def test_derivative_matches_closed_form(self):
		split = SpectralSplit.from_operator(np.diag([0.0, 4.0]), 2.0, 4.0)
		K = np.array([[0.0, 0.5], [0.5, 0.0]])

		derivative = self_energy_derivative(split, K, 0.25, 1e-3)

		assert derivative[0, 0] == pytest.approx(-0.25 / (0.25 - 4.0) ** 2, rel=1e-5)

	def test_derivative_rejects_non_positive_step(self, diagonal_split):
		with pytest.raises(PreconditionError, match='h > 0'):
			self_energy_derivative(diagonal_split, np.zeros((4, 4)), 0.0, 0.0)


class TestBindingPotentialSplit:
	def test_potential_is_multiple_of_E(self, problem_n3):
		levels = np.diag(problem_n3.potential).real / problem_n3.E

		assert np.allclose(levels, np.round(levels))
		assert np.allclose(levels[problem_n3.chain_indices], 0)

	def test_first_order_term_is_the_effective_hamiltonian(self, problem_n3):
		first_order = problem_n3.split.block(problem_n3.hopping, '--')

		assert np.linalg.norm(first_order - problem_n3.effective, 2) == pytest.approx(0.0, abs=1e-12)

	def test_self_energy_at_zero_is_close_to_effective(self, problem_n3):
		sigma = self_energy(problem_n3.split, problem_n3.hopping, 0.0)

		assert np.linalg.norm(sigma.value - problem_n3.effective, 2) <= 4 * 3**4 / problem_n3.E
		assert sigma.converges

	@pytest.mark.parametrize('z', [0.0, 100.0, -250j, 1000 + 1000j])
	def test_greens_norm_below_two_over_E(self, problem_n3, z):
		sigma = self_energy(problem_n3.split, problem_n3.hopping, z)

		assert sigma.greens_norm <= 2 / problem_n3.E
