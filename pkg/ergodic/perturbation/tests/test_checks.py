"""
Tests for the effective-Hamiltonian checks on small lattices.
"""

import dataclasses

import numpy as np
import pytest

from ergodic.exceptions import PreconditionError, SpectralGapError
from ergodic.perturbation import (
	lemma1_check,
	lemma1_sweep,
	low_energy_representation,
	self_energy_check,
	split_problem,
	theorem1_check,
)
from ergodic.settings import Limits


class TestSplitProblem:
	def test_shapes(self, problem_n3):
		dimension = problem_n3.sector.dimension

		assert problem_n3.potential.shape == (dimension, dimension)
		assert problem_n3.effective.shape == (6, 6)
		assert len(problem_n3.chain_indices) == 6
		assert np.allclose(problem_n3.hamiltonian, problem_n3.hamiltonian.conj().T)

	def test_rejects_large_lattices(self):
		with pytest.raises(PreconditionError, match='max exact size'):
			split_problem(3, 1e4, Limits(max_exact_n=2))


class TestLemma1:
	@pytest.mark.parametrize('E', [1e4, 1e6])
	def test_holds_for_three_rows(self, E):
		result = lemma1_check(3, E)

		assert result.rhs == pytest.approx(243 / np.sqrt(E))
		assert result.holds
		assert result.margin > 0

	def test_two_rows_have_no_torn_chains(self):
		result = lemma1_check(2, 1e3)

		assert result.lhs <= 1e-9
		assert result.rhs == pytest.approx(72 / np.sqrt(1e3))

	def test_sweep_decays_at_second_order(self):
		sweep = lemma1_sweep(3, [1e6, 1e4, 1e5])

		assert [r.E for r in sweep.results] == [1e4, 1e5, 1e6]
		assert sweep.monotone
		assert -1.1 <= sweep.slope <= -0.9
		assert sweep.holds
		assert sweep.to_dict()['holds'] is True

	def test_sweep_needs_two_energies(self):
		with pytest.raises(PreconditionError, match='two energies'):
			lemma1_sweep(3, [1e4])

	def test_low_energy_count_mismatch(self, problem_n3):
		gapless = dataclasses.replace(problem_n3, E=1e-9)

		with pytest.raises(SpectralGapError):
			low_energy_representation(gapless)

	def test_low_energy_representation_is_hermitian(self, problem_n3):
		representation = low_energy_representation(problem_n3)

		assert np.allclose(representation, representation.conj().T)


class TestTheorem1:
	def test_holds_on_a_time_grid(self):
		result = theorem1_check(3, 1e4, np.linspace(0.0, 10.0, 32))

		assert len(result.records) == 32
		assert result.records[0].lhs == pytest.approx(0.0, abs=1e-10)
		assert result.records[0].rhs == pytest.approx(6 * np.sqrt(2e-4))
		assert result.holds
		assert result.to_dict()['max_deviation'] <= 0

	def test_deviation_shrinks_with_E(self):
		final = [theorem1_check(3, E, [10.0]).records[-1].lhs for E in (1e3, 1e4, 1e5)]

		assert final[0] > final[1] > final[2]

	def test_rejects_empty_grid(self):
		with pytest.raises(PreconditionError, match='non-empty'):
			theorem1_check(3, 1e4, [])


class TestSelfEnergyCheck:
	def test_holds_on_the_disk(self):
		check = self_energy_check(3, 1e4, samples=6)

		assert len(check.samples) == 6
		assert all(abs(s.z) <= np.sqrt(1e4) for s in check.samples)
		assert check.distance_bound == pytest.approx(4 * 81 / 1e4)
		assert check.holds

	def test_seed_is_reproducible(self):
		first = self_energy_check(2, 1e3, samples=3, seed=4)
		second = self_energy_check(2, 1e3, samples=3, seed=4)

		assert [s.z for s in first.samples] == [s.z for s in second.samples]

	def test_to_dict_splits_complex_samples(self):
		payload = self_energy_check(2, 1e3, samples=2).to_dict()

		assert set(payload['samples'][0]) == {'z_re', 'z_im', 'distance', 'greens_norm', 'derivative_drift'}
		assert isinstance(payload['holds'], bool)
