"""
Counting statistics of the left-half fermion number ``N``.

The initial word ``0^m 1^m`` is a Slater determinant with all fermions on the
right half, so every moment of ``N`` follows from the correlation matrix
``C = U_t Pi_R U_t^dagger`` by Wick's theorem.
"""

from dataclasses import dataclass, field

import numpy as np

from ergodic.exceptions import PreconditionError
from ergodic.fermion_walk.manybody import outside_probability_series, within_exact_cap
from ergodic.fermion_walk.spectrum import Propagator, path_spectrum, propagator
from ergodic.settings import DEFAULT_LIMITS, Limits


def _check_m(prop: Propagator, m: int) -> None:
	if prop.size != 2 * m:
		raise PreconditionError('propagator of size 2m', f'size {prop.size} for m={m}')


def correlation_matrix(prop: Propagator, m: int) -> np.ndarray:
	"""``C_ij = sum_{l > m} u_il conj(u_jl)``, the one-body density matrix at time t."""
	_check_m(prop, m)
	right = prop.entries[:, m:]
	return right @ right.conj().T


def left_occupations(prop: Propagator, m: int) -> np.ndarray:
	"""``<P_j>`` for all ``2m`` sites."""
	_check_m(prop, m)
	return np.sum(np.abs(prop.entries[:, m:]) ** 2, axis=1)


def pair_occupation(prop: Propagator, m: int, i: int, j: int) -> float:
	"""
	``<P_i P_j>`` for 1-based sites ``i`` and ``j``.

	For ``i != j`` this is ``<P_i><P_j> - |C_ij|^2``; for ``i == j`` it is ``<P_i>``.
	"""
	correlation = correlation_matrix(prop, m)
	a, b = i - 1, j - 1
	if a == b:
		return float(correlation[a, a].real)
	return float((correlation[a, a] * correlation[b, b]).real - abs(correlation[a, b]) ** 2)


def expectation_left(prop: Propagator, m: int) -> float:
	"""``E_t(N) = sum_{j <= m} sum_{l > m} |u_{jl;t}|^2``."""
	_check_m(prop, m)
	return float(np.sum(np.abs(prop.entries[:m, m:]) ** 2))


def variance_left(prop: Propagator, m: int) -> float:
	"""
	``V_t(N)`` from the Wick decomposition.

	With ``C_L`` the left block of the correlation matrix,
	``V = tr C_L - ||C_L||_F^2``, which is never larger than ``E_t(N) = tr C_L``.
	"""
	left = correlation_matrix(prop, m)[:m, :m]
	return float(np.trace(left).real - np.sum(np.abs(left) ** 2))


def chebyshev_lower_bound(expectation: float, variance: float, k: int) -> float:
	"""Lower bound on ``P(N >= k)``: ``1 - V / (E - k)^2`` when ``E > k``, else 0."""
	if expectation <= k:
		return 0.0
	return max(0.0, 1.0 - variance / (expectation - k) ** 2)


def default_time_grid(m: int, points: int = 512) -> np.ndarray:
	"""
	Zero, a geometric ramp from ``1e-3`` to 1 (64 points), then a linear segment to ``8m``.

	Raises:
		PreconditionError: If ``points`` leaves no room for the linear segment.
	"""
	if m < 1:
		raise PreconditionError('m >= 1', f'm={m}')
	if points < 66:
		raise PreconditionError('points >= 66', f'points={points}')
	ramp = np.geomspace(1e-3, 1.0, 64)
	linear = np.linspace(1.0, 8.0 * m, points - 64)[1:]
	return np.concatenate(([0.0], ramp, linear))


@dataclass
class WalkObservables:
	"""
	Counting statistics of ``N`` on a time grid.

	Attributes:
		m: Half word length.
		k: Circuit region side.
		times: The grid.
		expectation: ``E_t(N)`` per time.
		variance: ``V_t(N)`` per time.
		chebyshev: Lower bound on ``P(N >= k)`` per time.
		outside_probability: Exact ``P(N >= k)`` per time, or None beyond the size cap.
	"""

	m: int
	k: int
	times: np.ndarray
	expectation: np.ndarray
	variance: np.ndarray
	chebyshev: np.ndarray
	outside_probability: np.ndarray | None = field(default=None)

	def rows(self) -> list[tuple[float, float, float, float, float | None]]:
		"""``(t, E, V, cheb_bound, exact_prob)`` per time."""
		exact = self.outside_probability if self.outside_probability is not None else [None] * len(self.times)
		return [
			(float(t), float(e), float(v), float(c), None if p is None else float(p))
			for t, e, v, c, p in zip(self.times, self.expectation, self.variance, self.chebyshev, exact)
		]


def walk_observables(
	m: int,
	k: int,
	times: np.ndarray | None = None,
	exact: bool = True,
	limits: Limits = DEFAULT_LIMITS,
) -> WalkObservables:
	"""
	Evaluate ``E_t(N)``, ``V_t(N)`` and the outside probability on a grid.

	Args:
		m: Half word length.
		k: Circuit region side, ``1 <= k <= m``.
		times: Time grid; :func:`default_time_grid` when omitted.
		exact: Also evolve the many-body sector when it fits ``limits.max_sector_dimension``.
	"""
	if not 1 <= k <= m:
		raise PreconditionError('1 <= k <= m', f'k={k}, m={m}')
	grid = default_time_grid(m) if times is None else np.asarray(times, dtype=float)
	spectrum = path_spectrum(m)
	expectation, variance = [], []
	for t in grid:
		prop = propagator(spectrum, float(t))
		expectation.append(expectation_left(prop, m))
		variance.append(variance_left(prop, m))
	chebyshev = [chebyshev_lower_bound(e, v, k) for e, v in zip(expectation, variance)]

	outside = None
	if exact and within_exact_cap(m, limits):
		outside = outside_probability_series(m, k, grid, limits)
	return WalkObservables(m, k, grid, np.array(expectation), np.array(variance), np.array(chebyshev), outside)
