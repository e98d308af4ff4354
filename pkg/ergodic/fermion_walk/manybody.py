"""
Many-body oracles on the weight-m sector of the XY chain.

These evolve the initial word directly under ``H_s`` and are only available
while ``C(2m, m)`` fits the exact-size cap. They exist to cross-check the
single-particle formulas.
"""

from functools import lru_cache
from math import comb

import numpy as np
from scipy import linalg, sparse
from scipy.sparse.linalg import expm_multiply

from ergodic.configspace import LatticeSpec, enumerate_configs
from ergodic.exceptions import PreconditionError, SizeCapError
from ergodic.fermion_walk.spectrum import Propagator
from ergodic.hamiltonian import build_Hs
from ergodic.settings import DEFAULT_LIMITS, Limits


def within_exact_cap(m: int, limits: Limits = DEFAULT_LIMITS) -> bool:
	return comb(2 * m, m) <= limits.max_sector_dimension


def _check_cap(m: int, limits: Limits) -> None:
	if m < 1:
		raise PreconditionError('m >= 1', f'm={m}')
	if not within_exact_cap(m, limits):
		raise SizeCapError('many-body sector', comb(2 * m, m), limits.max_sector_dimension)


def _check_k(m: int, k: int) -> None:
	if not 1 <= k <= m:
		raise PreconditionError('1 <= k <= m', f'k={k}, m={m}')


@lru_cache(maxsize=16)
def sector_words(m: int) -> tuple[str, ...]:
	"""Weight-m words of length 2m in lexicographic order; the initial word comes first."""
	return tuple(c.word for c in enumerate_configs(LatticeSpec(n=m + 1)))


def left_counts(m: int) -> np.ndarray:
	"""Value of ``N`` on every sector word."""
	return np.array([word[:m].count('1') for word in sector_words(m)])


def build_sector_hamiltonian(m: int, limits: Limits = DEFAULT_LIMITS) -> sparse.csr_matrix:
	"""
	``H_s`` on the weight-m words as a sparse matrix.

	Raises:
		SizeCapError: If ``C(2m, m)`` exceeds ``limits.max_sector_dimension``.
	"""
	_check_cap(m, limits)
	return build_Hs(m, limits=limits).to_sparse()


def initial_state(m: int) -> np.ndarray:
	state = np.zeros(comb(2 * m, m), dtype=complex)
	state[0] = 1.0
	return state


def evolve_initial_state(m: int, t: float, limits: Limits = DEFAULT_LIMITS) -> np.ndarray:
	"""Amplitudes of ``e^{-i H_s t} |0^m 1^m>`` on the sector words."""
	hamiltonian = build_sector_hamiltonian(m, limits)
	return expm_multiply(-1j * t * hamiltonian, initial_state(m))


@lru_cache(maxsize=8)
def _sector_eigensystem(m: int, limits: Limits) -> tuple[np.ndarray, np.ndarray]:
	return linalg.eigh(build_Hs(m, limits=limits).to_dense())


def outside_probability_exact(m: int, k: int, t: float, limits: Limits = DEFAULT_LIMITS) -> float:
	"""
	Probability that at least ``k`` fermions reached the left half at time ``t``.

	Raises:
		PreconditionError: Unless ``1 <= k <= m``.
		SizeCapError: If the sector exceeds the cap.
	"""
	_check_k(m, k)
	amplitudes = evolve_initial_state(m, t, limits)
	return float(np.sum(np.abs(amplitudes[left_counts(m) >= k]) ** 2))


def outside_probability_series(m: int, k: int, times: np.ndarray, limits: Limits = DEFAULT_LIMITS) -> np.ndarray:
	""":func:`outside_probability_exact` on a grid, diagonalizing once when the sector is small."""
	_check_k(m, k)
	_check_cap(m, limits)
	outside = left_counts(m) >= k
	if comb(2 * m, m) > limits.dense_limit:
		return np.array([outside_probability_exact(m, k, float(t), limits) for t in times])

	values, vectors = _sector_eigensystem(m, limits)
	weights = vectors[0].conj()
	phases = np.exp(-1j * np.outer(np.asarray(times, dtype=float), values))
	amplitudes = (phases * weights) @ vectors.T
	return np.sum(np.abs(amplitudes[:, outside]) ** 2, axis=1)


def occupation_moments(state: np.ndarray, m: int) -> tuple[np.ndarray, np.ndarray]:
	"""
	``<P_j>`` and ``<P_i P_j>`` of a many-body state.

	Returns:
		A vector over the 2m sites and the matrix of pair occupations.
	"""
	bits = np.array([[int(bit) for bit in word] for word in sector_words(m)], dtype=float)
	probabilities = np.abs(state) ** 2
	return probabilities @ bits, (bits * probabilities[:, None]).T @ bits


def slater_probabilities(prop: Propagator, m: int) -> np.ndarray:
	"""
	``|det U[S, right half]|^2`` for every sector word ``S``.

	Independent of the many-body evolution: a free-fermion Slater determinant
	evolves by its single-particle propagator.
	"""
	if prop.size != 2 * m:
		raise PreconditionError('propagator of size 2m', f'size {prop.size} for m={m}')
	columns = prop.entries[:, m:]
	probabilities = []
	for word in sector_words(m):
		occupied = [index for index, bit in enumerate(word) if bit == '1']
		probabilities.append(abs(np.linalg.det(columns[occupied])) ** 2)
	return np.array(probabilities)


def diagonal_ensemble_distribution(m: int, limits: Limits = DEFAULT_LIMITS) -> np.ndarray:
	"""
	Time-averaged distribution of ``N``, entries ``P(N = 0), ..., P(N = m)``.

	The initial state is projected onto every eigenspace of ``H_s``; degenerate
	eigenvalues are grouped at ``limits.degeneracy_tolerance``.
	"""
	_check_cap(m, limits)
	if comb(2 * m, m) > limits.dense_limit:
		raise SizeCapError('dense sector diagonalization', comb(2 * m, m), limits.dense_limit)
	values, vectors = _sector_eigensystem(m, limits)
	counts = left_counts(m)
	overlaps = vectors[0].conj()

	distribution = np.zeros(m + 1)
	start = 0
	while start < len(values):
		stop = start + 1
		while stop < len(values) and values[stop] - values[stop - 1] <= limits.degeneracy_tolerance:
			stop += 1
		projected = vectors[:, start:stop] @ overlaps[start:stop]
		np.add.at(distribution, counts, np.abs(projected) ** 2)
		start = stop
	return distribution


def diagonal_ensemble_probability(m: int, k: int, limits: Limits = DEFAULT_LIMITS) -> float:
	"""Exact time-average of ``P(N < k)``."""
	_check_k(m, k)
	return float(np.sum(diagonal_ensemble_distribution(m, limits)[:k]))
