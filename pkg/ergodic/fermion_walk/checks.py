"""
Numerical checks of the passing-time and ergodic-readout guarantees.
"""

from dataclasses import asdict, dataclass
from math import comb
from typing import Any

import numpy as np
from scipy import optimize

from ergodic.exceptions import GridTooShortError, PreconditionError
from ergodic.fermion_walk.averages import (
	time_average_expectation,
	time_average_variance,
	time_average_variance_bound,
)
from ergodic.fermion_walk.manybody import diagonal_ensemble_probability, outside_probability_exact, within_exact_cap
from ergodic.fermion_walk.observables import default_time_grid, expectation_left, variance_left
from ergodic.fermion_walk.spectrum import path_spectrum, propagator
from ergodic.settings import DEFAULT_LIMITS, Limits

BISECTION_TOLERANCE = 1e-6


@dataclass(frozen=True)
class PassingTimeResult:
	"""
	The first time at which ``E_t(N)`` reaches ``4k/3``.

	Attributes:
		m: Half word length.
		k: Circuit region side.
		t_star: The refined passing time.
		expectation: ``E_t(N)`` at ``t_star``.
		variance: ``V_t(N)`` at ``t_star``.
		failure_bound: Chebyshev bound ``V / (k/3)^2`` on ``P(N < k)``.
		theorem_bound: The guaranteed ``12 / k``.
		exact_outside_probability: Exact ``P(N >= k)`` at ``t_star`` while the sector fits the cap.
	"""

	m: int
	k: int
	t_star: float
	expectation: float
	variance: float
	failure_bound: float
	theorem_bound: float
	exact_outside_probability: float | None = None

	@property
	def holds(self) -> bool:
		return self.failure_bound <= self.theorem_bound

	def to_dict(self) -> dict[str, Any]:
		return asdict(self) | {'holds': self.holds}


def passing_time_check(
	m: int,
	k: int,
	times: np.ndarray | None = None,
	limits: Limits = DEFAULT_LIMITS,
) -> PassingTimeResult:
	"""
	Locate the passing time on a grid and refine it by bisection.

	Args:
		m: Half word length.
		k: Circuit region side, ``1 <= k <= m``; ``k <= m/4`` keeps the target reachable early.
		times: Ascending time grid; :func:`default_time_grid` when omitted.

	Raises:
		PreconditionError: Unless ``1 <= k <= m``.
		GridTooShortError: If no grid point reaches ``4k/3``.
	"""
	if not 1 <= k <= m:
		raise PreconditionError('1 <= k <= m', f'k={k}, m={m}')
	grid = default_time_grid(m) if times is None else np.asarray(times, dtype=float)
	spectrum = path_spectrum(m)
	target = 4 * k / 3

	def excess(t: float) -> float:
		return expectation_left(propagator(spectrum, t), m) - target

	previous = grid[0]
	reached = -np.inf
	for t in grid:
		value = excess(float(t))
		reached = max(reached, value + target)
		if value >= 0:
			break
		previous = t
	else:
		raise GridTooShortError(target, float(reached))

	t_star = float(t)
	if t != previous:
		t_star = optimize.bisect(excess, float(previous), t_star, xtol=BISECTION_TOLERANCE)
	prop = propagator(spectrum, t_star)
	expectation = expectation_left(prop, m)
	variance = variance_left(prop, m)
	exact = outside_probability_exact(m, k, t_star, limits) if within_exact_cap(m, limits) else None
	return PassingTimeResult(
		m=m,
		k=k,
		t_star=t_star,
		expectation=expectation,
		variance=variance,
		failure_bound=variance / (expectation - k) ** 2,
		theorem_bound=12 / k,
		exact_outside_probability=exact,
	)


@dataclass(frozen=True)
class ReadoutCheck:
	"""
	Chebyshev bound on the time-average probability that fewer than ``m/4`` fermions passed.

	Attributes:
		m: Half word length, a multiple of 4.
		expectation: Time-average ``E(N)``.
		variance: Exact time-average variance.
		variance_bound: Wick upper bound on the variance.
		bound: ``variance / (expectation - m/4)^2``.
		bound_from_upper: The same with ``variance_bound``.
		exact_probability: Diagonal-ensemble ``P(N < m/4)`` for small sectors.
	"""

	m: int
	expectation: float
	variance: float
	variance_bound: float
	bound: float
	bound_from_upper: float
	exact_probability: float | None = None

	@property
	def holds(self) -> bool:
		exact_ok = self.exact_probability is None or self.exact_probability <= self.bound + 1e-12
		return self.variance <= self.variance_bound + 1e-9 and exact_ok

	def to_dict(self) -> dict[str, Any]:
		return asdict(self) | {'holds': self.holds}


def ergodic_readout_check(m: int, limits: Limits = DEFAULT_LIMITS) -> ReadoutCheck:
	"""
	Bound the time-average chance of reading out before ``m/4`` fermions crossed.

	Raises:
		PreconditionError: If ``m`` is not a positive multiple of 4.
	"""
	if m < 4 or m % 4:
		raise PreconditionError('m multiple of 4', f'm={m}')
	expectation = time_average_expectation(m, limits)
	variance = time_average_variance(m, limits)
	variance_bound = time_average_variance_bound(m, limits)
	margin = (expectation - m / 4) ** 2
	exact = None
	if comb(2 * m, m) <= min(limits.dense_limit, limits.max_sector_dimension):
		exact = diagonal_ensemble_probability(m, m // 4, limits)
	return ReadoutCheck(
		m=m,
		expectation=expectation,
		variance=variance,
		variance_bound=variance_bound,
		bound=variance / margin,
		bound_from_upper=variance_bound / margin,
		exact_probability=exact,
	)
