"""
Builders for the clock Hamiltonians.

``K`` hops an atom along its row, ``H_pot`` binds diagonal neighbours with
strength E, and their sum is the synchronization Hamiltonian. Projected onto
the zero-energy sector of ``H_pot`` the hopping becomes ``H_eff``, which on
the word encoding is the XY chain ``H_s``.
"""

from itertools import combinations

import numpy as np
from scipy import sparse

from ergodic.configspace import LatticeSpec, allowed_moves, enumerate_configs
from ergodic.exceptions import PreconditionError, SpectralGapError
from ergodic.hamiltonian.operator import HermitianOperator
from ergodic.hamiltonian.sectors import (
	Placement,
	SectorBasis,
	SectorMode,
	one_atom_per_row_dimension,
)
from ergodic.settings import DEFAULT_LIMITS, Limits


def _bond_count(placement: Placement) -> int:
	"""Number of adjacent rows whose atoms are diagonal neighbours."""
	return sum(1 for (i1, j1), (i2, j2) in zip(placement, placement[1:]) if abs(i1 - i2) + abs(j1 - j2) == 1)


def ground_energy_shift(spec: LatticeSpec, E: float) -> float:
	"""E_0, chosen so that the initial chain (all 2n-2 bonds active) has zero energy."""
	return E * (spec.rows - 1)


def _hop_entries(sector: SectorBasis, conditional: bool = False) -> list[tuple[int, int, complex]]:
	"""
	Matrix entries of the row hopping ``a_{i,j} a^dagger_{i+1,j+1} + h.c.``.

	With ``conditional`` the hop is only kept when the atoms of the two
	adjacent rows sit on the remaining corners (i+1, j) and (i, j+1) of the
	plaquette around the white site between (i, j) and (i+1, j+1).
	"""
	n = sector.spec.n
	entries = []
	for index, placement in enumerate(sector.placements):
		for row, (i, j) in enumerate(placement):
			if i + 1 > n or j + 1 > n:
				continue
			if conditional:
				above = placement[row - 1] if row > 0 else None
				below = placement[row + 1] if row + 1 < len(placement) else None
				if above != (i, j + 1) or below != (i + 1, j):
					continue
			target = sector.index_of_placement(placement[:row] + ((i + 1, j + 1),) + placement[row + 1 :])
			if target is not None:
				entries.append((index, target, 1.0))
				entries.append((target, index, 1.0))
	return entries


def build_K(spec: LatticeSpec, sector: SectorBasis, limits: Limits = DEFAULT_LIMITS) -> HermitianOperator:
	"""
	Row hopping K restricted to a spatial sector.

	Args:
		spec: The lattice.
		sector: A one-atom-per-row or connected-chain sector of ``spec``.

	Returns:
		Real symmetric 0/1 matrix on the sector labels.

	Raises:
		PreconditionError: For spinful sectors; use :func:`build_complete` instead.
	"""
	if sector.mode == SectorMode.SPINFUL:
		raise PreconditionError('spatial sector', 'build_K does not act on spinful sectors, use build_complete')
	if sector.spec != spec:
		raise PreconditionError('sector of spec', f'sector built for n={sector.spec.n}, asked for n={spec.n}')
	return HermitianOperator.from_entries(_hop_entries(sector), sector.labels, 'K', limits)


def conditional_hopping_hamiltonian(spec: LatticeSpec, sector: SectorBasis | None = None) -> HermitianOperator:
	"""The 4-local form ``sum a a^dagger N N + h.c.`` on a spatial sector (default: one atom per row)."""
	sector = sector or SectorBasis.one_atom_per_row(spec)
	return HermitianOperator.from_entries(_hop_entries(sector, conditional=True), sector.labels, 'H_cond')


def build_Hpot(
	spec: LatticeSpec,
	E: float,
	sector: SectorBasis,
	limits: Limits = DEFAULT_LIMITS,
) -> HermitianOperator:
	"""
	Attractive potential ``-E * (active bonds) + E_0`` as a diagonal operator.

	Raises:
		PreconditionError: If ``E <= 0``.
	"""
	if E <= 0:
		raise PreconditionError('E > 0', f'E={E}')
	shift = ground_energy_shift(spec, E)
	spatial = np.array([shift - E * _bond_count(p) for p in sector.placements], dtype=float)
	diagonal = np.repeat(spatial, len(sector.spins)) if sector.mode == SectorMode.SPINFUL else spatial
	return HermitianOperator.from_matrix(sparse.diags(diagonal, format='csr'), sector.labels, 'H_pot', limits)


def synchronization_hamiltonian(spec: LatticeSpec, E: float, sector: SectorBasis) -> HermitianOperator:
	"""``K + H_pot`` on a spatial sector."""
	return build_K(spec, sector) + build_Hpot(spec, E, sector)


def effective_hamiltonian(spec: LatticeSpec, E: float = 1.0, limits: Limits = DEFAULT_LIMITS) -> HermitianOperator:
	"""
	``H_eff = P K P`` on the connected-chain basis.

	When the one-atom-per-row sector fits the size cap, P is obtained as the
	zero-energy projector of ``H_pot`` there and the projected hopping is
	re-indexed to H_c. Larger lattices restrict K to H_c directly, which is
	the same operator because P is diagonal in the occupation basis.

	Raises:
		PreconditionError: If ``n`` exceeds the exact-size limit.
		SpectralGapError: If the zero-energy sector of ``H_pot`` is not H_c.
	"""
	if spec.n > limits.max_exact_n:
		raise PreconditionError('n <= max exact size', f'n={spec.n} > {limits.max_exact_n}')
	chain = SectorBasis.connected_chain(spec)
	if one_atom_per_row_dimension(spec) > limits.max_sector_dimension:
		return build_K(spec, chain, limits)

	sector = SectorBasis.one_atom_per_row(spec, limits)
	potential = build_Hpot(spec, E, sector).to_dense().diagonal().real
	ground = np.flatnonzero(np.abs(potential) <= limits.tolerance * max(1.0, E))
	chain_indices = sector.chain_indices()
	if sorted(chain_indices) != ground.tolist():
		raise SpectralGapError(len(chain_indices), len(ground), 'zero-energy sector of H_pot differs from H_c')

	projected = build_K(spec, sector, limits).restrict(chain_indices)
	return HermitianOperator.from_matrix(projected.matrix, chain.labels, 'H_eff', limits)


def move_adjacency(spec: LatticeSpec) -> HermitianOperator:
	"""Adjacency matrix of the allowed-moves graph on H_c."""
	configs = enumerate_configs(spec)
	index = {c: i for i, c in enumerate(configs)}
	entries = [(index[c], index[other], 1.0) for c in configs for other in allowed_moves(c)]
	return HermitianOperator.from_entries(entries, [c.word for c in configs], 'A_moves')


def _weight_words(m: int) -> list[str]:
	words = []
	for ones in combinations(range(2 * m), m):
		bits = ['0'] * (2 * m)
		for position in ones:
			bits[position] = '1'
		words.append(''.join(bits))
	return sorted(words)


def build_Hs(m: int, sector: str = 'weight', limits: Limits = DEFAULT_LIMITS) -> HermitianOperator:
	"""
	XY chain ``sum_j b^dagger_j b_{j+1} + h.c.`` on 2m sites.

	Args:
		m: Half chain length.
		sector: ``'weight'`` for the weight-m words, ``'full'`` for all 2^{2m} words.

	Returns:
		The operator on lexicographically ordered words; each nearest-neighbour
		``01``/``10`` swap carries amplitude 1.
	"""
	if m < 1:
		raise PreconditionError('m >= 1', f'm={m}')
	if sector == 'weight':
		words = _weight_words(m)
	elif sector == 'full':
		words = [format(value, f'0{2 * m}b') for value in range(2 ** (2 * m))]
	else:
		raise PreconditionError('sector in {weight, full}', repr(sector))
	if len(words) > limits.max_sector_dimension and sector == 'full':
		raise PreconditionError('full space within cap', f'{len(words)} words')

	index = {word: i for i, word in enumerate(words)}
	entries = []
	for word, i in index.items():
		for t in range(len(word) - 1):
			if word[t] != word[t + 1]:
				swapped = word[:t] + word[t + 1] + word[t] + word[t + 2 :]
				entries.append((i, index[swapped], 1.0))
	return HermitianOperator.from_entries(entries, words, 'H_s', limits)


def hamming_weight_operator(m: int) -> HermitianOperator:
	"""Diagonal total-weight operator on the full 2^{2m} word space."""
	words = [format(value, f'0{2 * m}b') for value in range(2 ** (2 * m))]
	return HermitianOperator.from_matrix(
		sparse.diags([float(w.count('1')) for w in words], format='csr'), words, 'weight'
	)
