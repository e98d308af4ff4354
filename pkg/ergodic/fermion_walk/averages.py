"""
Infinite-time averages of the counting statistics.

``C_ij(t) = sum_{r,p} e_r(i) e_p(j) M_rp e^{-i (lambda_r - lambda_p) t}``, so
every moment of ``N`` is a finite sum of oscillating terms. Averaging over
all times keeps exactly the terms whose frequencies cancel. Pairs ``(r, p)``
are therefore grouped by their frequency ``lambda_r - lambda_p``; the path
spectrum is symmetric, so most nonzero frequencies come in degenerate pairs.
"""

from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy import integrate

from ergodic.exceptions import PreconditionError
from ergodic.fermion_walk.spectrum import PathGraphSpectrum, path_spectrum, propagators
from ergodic.settings import DEFAULT_LIMITS, Limits


@dataclass(frozen=True, eq=False)
class FrequencyGroups:
	"""
	Pairs ``(r, p)`` sharing one frequency.

	Attributes:
		frequencies: Representative frequency per group, ascending.
		members: Per group, an array of shape ``(size, 2)`` with the 0-based pairs.
	"""

	frequencies: np.ndarray
	members: tuple[np.ndarray, ...]

	@property
	def zero(self) -> np.ndarray:
		"""Members of the zero-frequency group."""
		return self.members[int(np.argmin(np.abs(self.frequencies)))]


def frequency_groups(spectrum: PathGraphSpectrum, tol: float = DEFAULT_LIMITS.degeneracy_tolerance) -> FrequencyGroups:
	"""Cluster all ``lambda_r - lambda_p`` whose sorted neighbours lie within ``tol``."""
	size = spectrum.size
	r, p = np.meshgrid(np.arange(size), np.arange(size), indexing='ij')
	pairs = np.column_stack((r.ravel(), p.ravel()))
	omega = (spectrum.eigenvalues[:, None] - spectrum.eigenvalues[None, :]).ravel()
	order = np.argsort(omega, kind='stable')
	breaks = np.flatnonzero(np.diff(omega[order]) > tol) + 1
	chunks = np.split(order, breaks)
	return FrequencyGroups(
		np.array([omega[chunk].mean() for chunk in chunks]),
		tuple(pairs[chunk] for chunk in chunks),
	)


@lru_cache(maxsize=32)
def _moments(m: int, limits: Limits) -> tuple[float, float, float]:
	"""Time averages of ``N``, of ``N^2`` and of the Wick upper bound on ``N^2``."""
	spectrum = path_spectrum(m)
	left, right = spectrum.left_overlaps(), spectrum.right_overlaps()
	vectors = spectrum.eigenvectors[:m]
	groups = frequency_groups(spectrum, limits.degeneracy_tolerance)

	zero = groups.zero
	expectation = float(np.sum(left[zero[:, 0], zero[:, 1]] * right[zero[:, 0], zero[:, 1]]))
	squares = 0.0
	cross = 0.0
	diagonal = 0.0
	for members in groups.members:
		rs, ps = members[:, 0], members[:, 1]
		weights = right[rs, ps]
		squares += float(np.sum(left[rs, ps] * weights)) ** 2
		cross += float(weights @ (left[np.ix_(rs, rs)] * left[np.ix_(ps, ps)]) @ weights)
		site_terms = (vectors[:, rs] * vectors[:, ps]) @ weights
		diagonal += float(np.sum(site_terms**2))
	second = expectation + squares - cross
	bound = expectation + squares - diagonal
	return expectation, second, bound


def time_average_expectation(m: int, limits: Limits = DEFAULT_LIMITS) -> float:
	"""``lim 1/T int_0^T E_t(N) dt = sum_r G_rr M_rr``."""
	return _moments(m, limits)[0]


def time_average_variance(m: int, limits: Limits = DEFAULT_LIMITS) -> float:
	"""Variance of ``N`` under the time-averaged distribution."""
	expectation, second, _ = _moments(m, limits)
	return second - expectation**2


def time_average_variance_bound(m: int, limits: Limits = DEFAULT_LIMITS) -> float:
	"""The same average with ``<P_i P_j>`` replaced by ``<P_i><P_j>``; an upper bound on the variance."""
	expectation, _, bound = _moments(m, limits)
	return bound - expectation**2


def long_time_average_expectation(m: int, horizon: float = 1e4, points: int = 200_001, chunk: int = 8192) -> float:
	"""
	Trapezoid average of ``E_t(N)`` over ``[0, horizon]``.

	Evaluates the propagator directly, independently of the frequency grouping.
	"""
	if horizon <= 0 or points < 2:
		raise PreconditionError('horizon > 0 and points >= 2', f'horizon={horizon}, points={points}')
	spectrum = path_spectrum(m)
	times = np.linspace(0.0, horizon, points)
	values = np.empty(points)
	for start in range(0, points, chunk):
		block = propagators(spectrum, times[start : start + chunk])
		values[start : start + chunk] = np.sum(np.abs(block[:, :m, m:]) ** 2, axis=(1, 2))
	return float(integrate.trapezoid(values, times) / horizon)
