"""
Spin conventions.

Basis index 0 is spin up, index 1 spin down, and ``SIGMA_Z`` is +1 on up.
Multi-spin states are big-endian: the first site is the most significant
tensor factor.
"""

from functools import reduce

import numpy as np

IDENTITY = np.eye(2, dtype=complex)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
PROJ_UP = np.array([[1, 0], [0, 0]], dtype=complex)
PROJ_DOWN = np.array([[0, 0], [0, 1]], dtype=complex)

PAULI = {'x': SIGMA_X, 'y': SIGMA_Y, 'z': SIGMA_Z}


def kron_all(*factors: np.ndarray) -> np.ndarray:
	return reduce(np.kron, factors)


def basis_index(spins: str) -> int:
	"""Index of a spin word such as ``'du'`` (``u`` = 0, ``d`` = 1)."""
	return int(spins.replace('u', '0').replace('d', '1'), 2)


def ket(spins: str) -> np.ndarray:
	vector = np.zeros(2 ** len(spins), dtype=complex)
	vector[basis_index(spins)] = 1.0
	return vector


def embed_operator(local: np.ndarray, sites: list[int], count: int) -> np.ndarray:
	"""
	Embed an operator on ``sites`` (0-based, in its own tensor order) into ``count`` spins.

	Returns:
		The ``2^count`` square matrix acting as ``local`` on the chosen sites and
		as the identity elsewhere.
	"""
	states = np.arange(2**count)
	bits = (states[:, None] >> (count - 1 - np.arange(count))[None, :]) & 1
	weights = 2 ** np.arange(len(sites) - 1, -1, -1)
	local_index = bits[:, sites] @ weights
	others = [s for s in range(count) if s not in sites]
	rest = bits[:, others] @ (2 ** np.arange(len(others) - 1, -1, -1)) if others else np.zeros(2**count, dtype=int)
	same_rest = rest[:, None] == rest[None, :]
	return np.where(same_rest, local[np.ix_(local_index, local_index)], 0.0)
