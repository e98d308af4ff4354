"""
Closed adiabatic loops ``G(theta) = e^{i theta X} G_0 e^{-i theta X}``.

A loop is sampled at ``l`` angles ``theta_j = 2 pi (j - 1) / (l - 1)``. Two
schedules walk through these samples:

- ``hold`` (default) keeps each ``G_j`` switched on for its duration, a literal
  piecewise-constant product. Its leakage depends on the step phases
  ``e^{-i g tau}`` of the gaps ``g``; durations with trivial phases reduce the
  loop to the identity.
- ``sweep`` rotates the interaction continuously from ``theta_j`` to
  ``theta_{j+1}`` during each of the ``l - 1`` intervals. In the co-rotating
  frame this is a constant Hamiltonian, so every interval is an exact matrix
  exponential.

Off intervals (zero Hamiltonian) may be interleaved; they contribute the identity.
"""

from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from ergodic.exceptions import PreconditionError
from ergodic.hamiltonian.operator import HermitianOperator
from ergodic.settings import DEFAULT_LIMITS

CLOSURE_TOLERANCE = 1e-12


class Profile(str, Enum):
	HOLD = 'hold'
	SWEEP = 'sweep'


def _as_array(operator: HermitianOperator | np.ndarray) -> np.ndarray:
	if isinstance(operator, HermitianOperator):
		return operator.to_dense()
	return np.asarray(operator, dtype=complex)


def _hermitian_exp(matrix: np.ndarray, factor: complex) -> np.ndarray:
	"""``exp(factor * matrix)`` for Hermitian ``matrix`` via its eigenbasis."""
	values, vectors = np.linalg.eigh(matrix)
	return (vectors * np.exp(factor * values)) @ vectors.conj().T


@dataclass(frozen=True, eq=False)
class LoopFamily:
	"""
	A discretized closed loop of interactions.

	Attributes:
		base: G_0, the interaction at angle 0.
		generator: X, the rotation generator.
		steps: Number of samples ``l`` (the first and last coincide).
		tau_step: Nominal duration of one step.
		profile: ``hold`` (default) or ``sweep``.
		durations: Optional per-step durations; ``l - 1`` values for ``sweep``, ``l`` for ``hold``.
		off_intervals: Optional durations of switched-off gaps, one per step.
	"""

	base: np.ndarray
	generator: np.ndarray
	steps: int
	tau_step: float
	profile: Profile = Profile.HOLD
	durations: tuple[float, ...] | None = None
	off_intervals: tuple[float, ...] | None = None
	_spectrum: tuple[np.ndarray, np.ndarray] = field(init=False, repr=False)

	def __post_init__(self) -> None:
		object.__setattr__(self, 'base', _as_array(self.base))
		object.__setattr__(self, 'generator', _as_array(self.generator))
		object.__setattr__(self, 'profile', Profile(self.profile))
		if self.steps < 2:
			raise PreconditionError('l >= 2', f'l={self.steps}')
		if self.tau_step <= 0:
			raise PreconditionError('tau_step > 0', f'tau_step={self.tau_step}')
		if self.base.shape != self.generator.shape:
			raise PreconditionError('same space', f'G0 {self.base.shape} and X {self.generator.shape}')
		for name, matrix in (('G0', self.base), ('X', self.generator)):
			if np.max(np.abs(matrix - matrix.conj().T), initial=0.0) > DEFAULT_LIMITS.tolerance:
				raise PreconditionError('Hermitian', f'{name} is not Hermitian')
		if self.durations is not None:
			expected = self.intervals
			if len(self.durations) != expected or min(self.durations) <= 0:
				raise PreconditionError('durations', f'need {expected} positive durations, got {len(self.durations)}')
		if self.off_intervals is not None:
			if len(self.off_intervals) != self.intervals or min(self.off_intervals) < 0:
				raise PreconditionError('off intervals', f'need {self.intervals} non-negative gaps')
		object.__setattr__(self, '_spectrum', np.linalg.eigh(self.generator))

		defect = np.max(np.abs(self.hamiltonian(self.steps) - self.base))
		if defect > CLOSURE_TOLERANCE * max(1.0, float(np.max(np.abs(self.base)))):
			raise PreconditionError('closed loop', f'G_l differs from G_1 by {defect:.3e}')

	@property
	def dimension(self) -> int:
		return self.base.shape[0]

	@property
	def intervals(self) -> int:
		return self.steps - 1 if self.profile == Profile.SWEEP else self.steps

	def angle(self, j: int) -> float:
		return 2 * np.pi * (j - 1) / (self.steps - 1)

	def rotation(self, theta: float) -> np.ndarray:
		"""W(theta) = exp(i theta X)."""
		values, vectors = self._spectrum
		return (vectors * np.exp(1j * theta * values)) @ vectors.conj().T

	def hamiltonian(self, j: int) -> np.ndarray:
		"""G_j, the j-th sample of the loop (1-based)."""
		w = self.rotation(self.angle(j))
		return w @ self.base @ w.conj().T

	def interval_durations(self) -> np.ndarray:
		if self.durations is not None:
			return np.asarray(self.durations, dtype=float)
		return np.full(self.intervals, self.tau_step)

	@property
	def active_time(self) -> float:
		"""Time during which the interaction is switched on."""
		return float(self.interval_durations().sum())

	@property
	def total_time(self) -> float:
		gaps = sum(self.off_intervals) if self.off_intervals else 0.0
		return self.active_time + gaps

	def with_profile(self, profile: Profile | str) -> 'LoopFamily':
		"""Same loop and nominal schedule under another profile."""
		return LoopFamily(self.base, self.generator, self.steps, self.tau_step, Profile(profile))


def integrate_loop(family: LoopFamily, initial: np.ndarray | None = None) -> np.ndarray:
	"""
	Time evolution along the loop.

	Args:
		family: The loop and its schedule.
		initial: Optional state vector or matrix the evolution is applied to.

	Returns:
		U_T, or ``U_T @ initial`` when ``initial`` is given.
	"""
	durations = family.interval_durations()
	unitary = np.eye(family.dimension, dtype=complex)

	if family.profile == Profile.HOLD:
		for j, tau in enumerate(durations, start=1):
			unitary = _hermitian_exp(family.hamiltonian(j), -1j * tau) @ unitary
	else:
		cache: dict[tuple[float, float], np.ndarray] = {}
		for j, tau in enumerate(durations, start=1):
			theta_a, theta_b = family.angle(j), family.angle(j + 1)
			omega = (theta_b - theta_a) / tau
			key = (omega, float(tau))
			if key not in cache:
				cache[key] = _hermitian_exp(family.base + omega * family.generator, -1j * tau)
			step = family.rotation(theta_b) @ cache[key] @ family.rotation(theta_a).conj().T
			unitary = step @ unitary

	if initial is None:
		return unitary
	return unitary @ np.asarray(initial, dtype=complex)


def eigenspace_basis(operator: np.ndarray, eigenvalue: float, tol: float = 1e-9) -> np.ndarray:
	"""Orthonormal columns spanning the ``eigenvalue`` eigenspace of a Hermitian operator."""
	values, vectors = np.linalg.eigh(operator)
	selected = np.abs(values - eigenvalue) <= tol
	if not selected.any():
		raise PreconditionError('eigenvalue of G0', f'{eigenvalue} is not an eigenvalue')
	return vectors[:, selected]


def predicted_holonomy(family: LoopFamily, eigenvalue: float, basis: np.ndarray | None = None) -> np.ndarray:
	"""
	Adiabatic prediction ``e^{-i lambda T} e^{-2 pi i QXQ}`` on an eigenspace of G_0.

	Args:
		family: The loop; T is its active time.
		eigenvalue: The eigenvalue lambda of G_0.
		basis: Orthonormal columns of the eigenspace; computed when omitted.

	Returns:
		The predicted action in the coordinates of ``basis``.
	"""
	if basis is None:
		basis = eigenspace_basis(family.base, eigenvalue)
	compressed = basis.conj().T @ family.generator @ basis
	return np.exp(-1j * eigenvalue * family.active_time) * _hermitian_exp(compressed, -2j * np.pi)


def jitter_durations(
	l: int,
	tau_step: float,
	fraction: float = 0.3,
	seed: int | None = 0,
	profile: Profile | str = Profile.HOLD,
) -> tuple[float, ...]:
	"""
	Randomized durations ``tau_step * (1 + u)``, ``u`` uniform in ``[-fraction, fraction]``.

	Returns one duration per interval of an ``l``-step loop under ``profile``.
	"""
	if not 0 <= fraction < 1:
		raise PreconditionError('0 <= fraction < 1', f'fraction={fraction}')
	count = l - 1 if Profile(profile) == Profile.SWEEP else l
	rng = np.random.default_rng(seed)
	return tuple(float(tau) for tau in tau_step * (1 + rng.uniform(-fraction, fraction, size=count)))
