"""
Tests for the hopping, potential and effective Hamiltonians.
"""

from itertools import combinations

import numpy as np
import pytest

from ergodic.configspace import LatticeSpec, enumerate_configs
from ergodic.exceptions import PreconditionError, SizeCapError
from ergodic.hamiltonian import (
	HermitianOperator,
	SectorBasis,
	SectorMode,
	build_Hpot,
	build_Hs,
	build_K,
	conditional_hopping_hamiltonian,
	effective_hamiltonian,
	ground_energy_shift,
	hamming_weight_operator,
	move_adjacency,
	one_atom_per_row_dimension,
	row_sites,
	synchronization_hamiltonian,
)
from ergodic.settings import Limits


class TestSectors:
	@pytest.mark.parametrize('n, expected', [(2, 2), (3, 12), (4, 144), (5, 2880)])
	def test_one_atom_per_row_dimension(self, n, expected):
		assert one_atom_per_row_dimension(LatticeSpec(n=n)) == expected

	def test_row_sites(self):
		spec = LatticeSpec(n=3)

		assert row_sites(spec, 1) == [(1, 3)]
		assert row_sites(spec, 3) == [(1, 1), (2, 2), (3, 3)]
		assert row_sites(spec, 4) == [(2, 1), (3, 2)]

	def test_chain_is_a_subset(self, make_sector):
		sector = make_sector(3, SectorMode.ONE_ATOM_PER_ROW)

		assert len(sector.chain_indices()) == 6

	def test_size_cap(self):
		with pytest.raises(SizeCapError):
			SectorBasis.one_atom_per_row(LatticeSpec(n=5), Limits(max_sector_dimension=1000))

	def test_spinful_labels(self, make_sector):
		sector = SectorBasis.spinful(make_sector(2))

		assert sector.dimension == 16
		assert sector.labels[:2] == (('01', 'uuu'), ('01', 'uud'))


class TestBuildK:
	def test_n2(self, make_sector):
		assert np.array_equal(build_K(LatticeSpec(n=2), make_sector(2)).to_dense(), [[0, 1], [1, 0]])

	@pytest.mark.parametrize('n', [2, 3, 4])
	def test_hermitian_and_bounded(self, make_sector, n):
		op = build_K(LatticeSpec(n=n), make_sector(n, SectorMode.ONE_ATOM_PER_ROW))

		assert op.is_hermitian()
		assert op.norm() <= n**2

	def test_rejects_spinful(self, make_sector):
		with pytest.raises(PreconditionError):
			build_K(LatticeSpec(n=2), SectorBasis.spinful(make_sector(2)))

	def test_rejects_foreign_sector(self, make_sector):
		with pytest.raises(PreconditionError):
			build_K(LatticeSpec(n=3), make_sector(2))

	def test_hops_stay_in_row(self, make_sector):
		sector = make_sector(3, SectorMode.ONE_ATOM_PER_ROW)
		dense = build_K(LatticeSpec(n=3), sector).to_dense()

		for a, b in zip(*np.nonzero(dense)):
			changed = [r for r, (x, y) in enumerate(zip(sector.placements[a], sector.placements[b])) if x != y]
			assert len(changed) == 1


class TestBuildHpot:
	def test_zero_on_chains_and_gapped_elsewhere(self, make_sector):
		sector = make_sector(3, SectorMode.ONE_ATOM_PER_ROW)
		energies = build_Hpot(LatticeSpec(n=3), 2.5, sector).to_dense().diagonal().real
		chain = set(sector.chain_indices())

		for index, energy in enumerate(energies):
			if index in chain:
				assert energy == pytest.approx(0.0)
			else:
				assert energy >= 2.5 - 1e-12

	def test_ground_energy_shift(self):
		assert ground_energy_shift(LatticeSpec(n=4), 3.0) == 18.0

	def test_rejects_non_positive_energy(self, make_sector):
		with pytest.raises(PreconditionError):
			build_Hpot(LatticeSpec(n=2), 0.0, make_sector(2))

	def test_synchronization_hamiltonian_is_hermitian(self, make_sector):
		sector = make_sector(3, SectorMode.ONE_ATOM_PER_ROW)

		assert synchronization_hamiltonian(LatticeSpec(n=3), 4.0, sector).is_hermitian()


class TestEffectiveHamiltonian:
	@pytest.mark.parametrize('n', [2, 3, 4])
	def test_equals_move_graph_and_xy_chain(self, n):
		spec = LatticeSpec(n=n)
		effective = effective_hamiltonian(spec, E=5.0).to_dense()

		assert np.array_equal(effective, move_adjacency(spec).to_dense())
		assert np.array_equal(effective, build_Hs(n - 1).to_dense())
		assert list(effective_hamiltonian(spec).basis) == [c.word for c in enumerate_configs(spec)]

	@pytest.mark.parametrize('n', [3, 4])
	def test_conditional_form_restricts_to_effective(self, n):
		spec = LatticeSpec(n=n)
		sector = SectorBasis.one_atom_per_row(spec)
		conditional = conditional_hopping_hamiltonian(spec, sector).restrict(sector.chain_indices())

		assert np.array_equal(conditional.to_dense(), effective_hamiltonian(spec).to_dense())

	def test_direct_restriction_above_sector_cap(self):
		spec = LatticeSpec(n=3)
		direct = effective_hamiltonian(spec, limits=Limits(max_sector_dimension=10))

		assert np.array_equal(direct.to_dense(), move_adjacency(spec).to_dense())

	def test_exact_size_limit(self):
		with pytest.raises(PreconditionError):
			effective_hamiltonian(LatticeSpec(n=4), limits=Limits(max_exact_n=3))

	def test_triplet_export_round_trip(self):
		op = effective_hamiltonian(LatticeSpec(n=3))
		restored = HermitianOperator.from_triplets(op.to_triplets(), op.basis)

		assert np.array_equal(restored.to_dense(), op.to_dense())


class TestBuildHs:
	def test_m1(self):
		op = build_Hs(1)

		assert op.basis == ('01', '10')
		assert np.array_equal(op.to_dense(), [[0, 1], [1, 0]])

	@pytest.mark.parametrize('m', [2, 3])
	def test_spectrum_is_free_fermion_sums(self, m):
		modes = [2 * np.cos(r * np.pi / (2 * m + 1)) for r in range(1, 2 * m + 1)]
		expected = sorted(sum(choice) for choice in combinations(modes, m))

		assert np.allclose(build_Hs(m).eigenvalues(), expected, atol=1e-10)

	def test_commutes_with_weight(self):
		hs = build_Hs(2, sector='full').to_dense()
		weight = hamming_weight_operator(2).to_dense()

		assert np.allclose(hs @ weight, weight @ hs)

	@pytest.mark.parametrize('m, sector', [(0, 'weight'), (2, 'bogus')])
	def test_rejects_invalid(self, m, sector):
		with pytest.raises(PreconditionError):
			build_Hs(m, sector)
