"""
Spectral splitting and the self-energy of the binding potential.

An operator with a gap around ``lambda_*`` splits the space into ``P_-``
(below) and ``P_+`` (above). With ``H_pot`` split this way, the hopping K
enters the low sector only through the self-energy
``Sigma_-(z) = H_pot,- + K_-- + K_-+ G_+ (1 - K_++ G_+)^-1 K_+-``.
"""

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from ergodic.exceptions import PreconditionError, SingularResolventError, SpectralGapError
from ergodic.hamiltonian import HermitianOperator
from ergodic.settings import DEFAULT_LIMITS, Limits

SINGULAR_CONDITION = 1e12


def _dense(operator: HermitianOperator | np.ndarray) -> np.ndarray:
	if isinstance(operator, HermitianOperator):
		return operator.to_dense()
	return np.asarray(operator, dtype=complex)


@dataclass(frozen=True, eq=False)
class SpectralSplit:
	"""
	An operator split at ``lambda_*`` with a spectral gap of width ``delta``.

	Attributes:
		operator: The split operator as a dense matrix.
		lambda_star: Centre of the gap.
		delta: Width of the gap.
		minus_basis: Orthonormal columns spanning ``P_-``.
		plus_basis: Orthonormal columns spanning ``P_+``.
		minus_energies: Eigenvalues below the gap, one per column of ``minus_basis``.
		plus_energies: Eigenvalues above the gap.
	"""

	operator: np.ndarray
	lambda_star: float
	delta: float
	minus_basis: np.ndarray
	plus_basis: np.ndarray
	minus_energies: np.ndarray
	plus_energies: np.ndarray

	@classmethod
	def from_operator(
		cls,
		operator: HermitianOperator | np.ndarray,
		lambda_star: float,
		delta: float,
		minus_order: Sequence[int] | None = None,
		limits: Limits = DEFAULT_LIMITS,
	) -> 'SpectralSplit':
		"""
		Diagonalize and split ``operator``.

		Diagonal operators keep the occupation basis, so ``P_-`` is spanned by
		unit vectors; ``minus_order`` then fixes their order.

		Raises:
			PreconditionError: For ``delta <= 0`` or a ``minus_order`` that does not list the low states.
			SpectralGapError: If an eigenvalue lies strictly inside the gap.
		"""
		if delta <= 0:
			raise PreconditionError('delta > 0', f'delta={delta}')
		matrix = _dense(operator)
		off_diagonal = matrix - np.diag(np.diag(matrix))
		if np.max(np.abs(off_diagonal), initial=0.0) <= limits.tolerance:
			values, vectors = np.diag(matrix).real, np.eye(matrix.shape[0], dtype=complex)
		else:
			values, vectors = np.linalg.eigh(matrix)

		lower, upper = lambda_star - delta / 2, lambda_star + delta / 2
		inside = np.flatnonzero((values > lower + limits.tolerance) & (values < upper - limits.tolerance))
		low = np.flatnonzero(values < lambda_star)
		if inside.size:
			raise SpectralGapError(len(low), len(low) + inside.size, f'eigenvalues inside ({lower}, {upper})')
		if minus_order is not None:
			if sorted(minus_order) != low.tolist():
				raise PreconditionError('minus_order lists the low states', f'{len(minus_order)} for {len(low)}')
			low = np.asarray(minus_order, dtype=int)
		high = np.flatnonzero(values >= lambda_star)
		return cls(matrix, lambda_star, delta, vectors[:, low], vectors[:, high], values[low], values[high])

	@property
	def minus_projector(self) -> np.ndarray:
		return self.minus_basis @ self.minus_basis.conj().T

	@property
	def plus_projector(self) -> np.ndarray:
		return self.plus_basis @ self.plus_basis.conj().T

	def _basis(self, sign: str) -> np.ndarray:
		if sign == '-':
			return self.minus_basis
		if sign == '+':
			return self.plus_basis
		raise PreconditionError('block sign in {+, -}', repr(sign))

	def block(self, operator: HermitianOperator | np.ndarray, signs: str) -> np.ndarray:
		"""``X_{ab} = B_a^dagger X B_b`` for ``signs`` such as ``'-+'``."""
		if len(signs) != 2:
			raise PreconditionError('two block signs', repr(signs))
		left, right = self._basis(signs[0]), self._basis(signs[1])
		return left.conj().T @ _dense(operator) @ right


def greens_function(split: SpectralSplit, z: complex) -> np.ndarray:
	"""``G_+(z) = (z - H_pot,+)^-1`` on the plus subspace."""
	return np.diag(1.0 / (z - split.plus_energies))


@dataclass(frozen=True, eq=False)
class SelfEnergy:
	"""
	``Sigma_-(z)`` on the minus subspace.

	Attributes:
		z: The spectral parameter.
		value: The matrix of ``Sigma_-(z)``.
		greens_norm: ``||G_+(z)||``.
		neumann_norm: ``||K_++ G_+(z)||``; the series converges below 1.
		condition: Condition number of ``1 - K_++ G_+(z)``.
	"""

	z: complex
	value: np.ndarray
	greens_norm: float
	neumann_norm: float
	condition: float

	@property
	def converges(self) -> bool:
		"""Whether the Neumann series of the resolvent converges at ``z``."""
		return self.neumann_norm < 1


def self_energy(split: SpectralSplit, K: HermitianOperator | np.ndarray, z: complex) -> SelfEnergy:
	"""
	Evaluate the self-energy by a direct solve.

	The Neumann norm is only recorded; the solve does not need the series.

	Raises:
		SingularResolventError: If ``1 - K_++ G_+(z)`` is numerically singular.
	"""
	greens = greens_function(split, z)
	k_pp = split.block(K, '++')
	dressed = k_pp @ greens
	neumann = float(np.linalg.norm(dressed, 2)) if dressed.size else 0.0
	resolvent = np.eye(dressed.shape[0]) - dressed
	condition = float(np.linalg.cond(resolvent)) if resolvent.size else 1.0
	if not np.isfinite(condition) or condition > SINGULAR_CONDITION:
		raise SingularResolventError(z, condition)

	correction: np.ndarray | float = 0.0
	if resolvent.size:
		correction = split.block(K, '-+') @ greens @ np.linalg.solve(resolvent, split.block(K, '+-'))
	value = np.diag(split.minus_energies).astype(complex) + split.block(K, '--') + correction
	greens_norm = float(np.max(np.abs(np.diag(greens)))) if greens.size else 0.0
	return SelfEnergy(complex(z), value, greens_norm, neumann, condition)


def self_energy_derivative(
	split: SpectralSplit,
	K: HermitianOperator | np.ndarray,
	z: complex,
	h: float,
) -> np.ndarray:
	"""Central difference ``(Sigma_-(z + h) - Sigma_-(z - h)) / 2h``."""
	if h <= 0:
		raise PreconditionError('h > 0', f'h={h}')
	return (self_energy(split, K, z + h).value - self_energy(split, K, z - h).value) / (2 * h)
