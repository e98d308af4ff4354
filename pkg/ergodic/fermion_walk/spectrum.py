"""
Single-particle picture of the clock walk.

Under the Jordan-Wigner map the 1-bits of a chain word are fermions hopping
on a path of ``2m`` sites. Everything below is built from the spectrum of
that path's adjacency matrix ``S + S^dagger``.
"""

import math
from dataclasses import dataclass

import numpy as np
from scipy import linalg

from ergodic.exceptions import PreconditionError

RECONSTRUCTION_TOLERANCE = 1e-10


def path_adjacency(size: int) -> np.ndarray:
	"""Adjacency matrix of the path graph on ``size`` vertices."""
	return np.eye(size, k=1) + np.eye(size, k=-1)


def path_eigenvalue(m: int, r: int) -> float:
	"""Closed form ``2 cos(r pi / (2m + 1))`` of the r-th eigenvalue, 1-based."""
	return 2 * math.cos(r * math.pi / (2 * m + 1))


@dataclass(frozen=True, eq=False)
class PathGraphSpectrum:
	"""
	Eigen-decomposition of the path of ``2m`` sites.

	Attributes:
		size: Number of sites, 2m.
		eigenvalues: Strictly decreasing eigenvalues.
		eigenvectors: Orthonormal real eigenvectors as columns, first component positive.
	"""

	size: int
	eigenvalues: np.ndarray
	eigenvectors: np.ndarray

	@property
	def m(self) -> int:
		return self.size // 2

	def reconstruction_error(self) -> float:
		"""``||A - V diag(lambda) V^T||_2``."""
		rebuilt = (self.eigenvectors * self.eigenvalues) @ self.eigenvectors.T
		return float(np.linalg.norm(path_adjacency(self.size) - rebuilt, 2))

	def orthonormality_error(self) -> float:
		gram = self.eigenvectors.T @ self.eigenvectors
		return float(np.linalg.norm(gram - np.eye(self.size), 2))

	def closed_form_error(self) -> float:
		"""Largest deviation from ``2 cos(r pi / (2m + 1))``."""
		expected = np.array([path_eigenvalue(self.m, r) for r in range(1, self.size + 1)])
		return float(np.max(np.abs(self.eigenvalues - expected)))

	def left_overlaps(self) -> np.ndarray:
		"""``G_rp = sum_{i <= m} e_r(i) e_p(i)``."""
		left = self.eigenvectors[: self.m]
		return left.T @ left

	def right_overlaps(self) -> np.ndarray:
		"""``M_rp = sum_{l > m} e_r(l) e_p(l)``."""
		right = self.eigenvectors[self.m :]
		return right.T @ right


def path_spectrum(m: int) -> PathGraphSpectrum:
	"""
	Diagonalize the path graph ``P_2m`` numerically.

	Raises:
		PreconditionError: If ``m < 1``.
	"""
	if m < 1:
		raise PreconditionError('m >= 1', f'm={m}')
	values, vectors = linalg.eigh(path_adjacency(2 * m))
	values, vectors = values[::-1], vectors[:, ::-1]
	vectors = vectors * np.sign(vectors[0])
	spectrum = PathGraphSpectrum(2 * m, values, vectors)
	if spectrum.reconstruction_error() > RECONSTRUCTION_TOLERANCE:
		raise PreconditionError('accurate diagonalization', f'error {spectrum.reconstruction_error():.3e}')
	return spectrum


@dataclass(frozen=True, eq=False)
class Propagator:
	"""
	One-particle propagator ``U_t = exp(-i (S + S^dagger) t)``.

	Attributes:
		time: Evolution time t.
		entries: The ``2m x 2m`` unitary ``u_{jl;t}``.
	"""

	time: float
	entries: np.ndarray

	@property
	def size(self) -> int:
		return self.entries.shape[0]

	@property
	def m(self) -> int:
		return self.size // 2

	def unitarity_error(self) -> float:
		return float(np.linalg.norm(self.entries @ self.entries.conj().T - np.eye(self.size), 2))

	def symmetry_error(self) -> float:
		return float(np.max(np.abs(self.entries - self.entries.T)))

	def __matmul__(self, other: 'Propagator') -> 'Propagator':
		return Propagator(self.time + other.time, self.entries @ other.entries)


def propagator(spectrum: PathGraphSpectrum, t: float) -> Propagator:
	"""
	``U_t = V e^{-i Lambda t} V^T``.

	Raises:
		PreconditionError: If ``t`` is not finite.
	"""
	if not math.isfinite(t):
		raise PreconditionError('finite t', f't={t}')
	vectors = spectrum.eigenvectors
	return Propagator(float(t), (vectors * np.exp(-1j * spectrum.eigenvalues * t)) @ vectors.T)


def propagators(spectrum: PathGraphSpectrum, times: np.ndarray) -> np.ndarray:
	"""Stack of ``U_t`` for every entry of ``times``, shape ``(len(times), 2m, 2m)``."""
	vectors = spectrum.eigenvectors
	phases = np.exp(-1j * np.outer(np.asarray(times, dtype=float), spectrum.eigenvalues))
	return np.einsum('jr,tr,lr->tjl', vectors, phases, vectors)
