"""
Holonomic gates on the dual-rail code space.

A logical qubit lives on two spins, ``|0_l> = |du>`` and ``|1_l> = |ud>``,
the zero-energy eigenspace of ``G_0 = sz x 1 + 1 x sz``. Rotating the
interaction around a closed loop generated by X leaves the code space
invariant and transforms it by ``exp(-2 pi i QXQ)``. The families below
traverse their loops with the generator ``-X`` so that the x family realizes
``exp(2 pi i cos(phi) sx)``.
"""

from dataclasses import dataclass, field
from typing import Any

import numpy as np

from ergodic.exceptions import PreconditionError
from ergodic.holonomy.loop import LoopFamily, Profile, integrate_loop, jitter_durations
from ergodic.holonomy.spins import IDENTITY, PAULI, PROJ_UP, SIGMA_Z, ket, kron_all

MIN_STEPS = 50
LOGICAL_ZERO = np.diag([1.0, 0.0]).astype(complex)
LOGICAL_ONE = np.diag([0.0, 1.0]).astype(complex)
CONTROLLED_PHASE_NOTE = 'controlled rotation angle is 2*pi*sin(phi), the factor follows from the holonomy formula'


def axis_rotation(axis: str, theta: float) -> np.ndarray:
	"""``exp(i theta sigma_axis)``."""
	if axis not in PAULI:
		raise PreconditionError('axis in {x, y, z}', repr(axis))
	return np.cos(theta) * IDENTITY + 1j * np.sin(theta) * PAULI[axis]


def controlled_phase(theta: float) -> np.ndarray:
	"""``1 x |0><0| + exp(i theta sz) x |1><1|`` with the target as the first factor."""
	return np.kron(IDENTITY, LOGICAL_ZERO) + np.kron(axis_rotation('z', theta), LOGICAL_ONE)


def _mixed_axis(phi: float) -> np.ndarray:
	return np.cos(phi) * PAULI['x'] + np.sin(phi) * SIGMA_Z


@dataclass(frozen=True)
class CodeSpace:
	"""
	Embedding of one logical qubit into a spin register.

	Attributes:
		basis: Columns ``|0_l>`` and ``|1_l>`` in the register.
		labels: Spin words of the two columns.
	"""

	basis: np.ndarray
	labels: tuple[str, str]

	@classmethod
	def pair(cls) -> 'CodeSpace':
		return cls.with_suffix('')

	@classmethod
	def with_suffix(cls, suffix: str) -> 'CodeSpace':
		"""Code space of the first two spins with the remaining spins fixed to ``suffix``."""
		labels = ('du' + suffix, 'ud' + suffix)
		return cls(np.column_stack([ket(label) for label in labels]), labels)

	@property
	def projector(self) -> np.ndarray:
		return self.basis @ self.basis.conj().T

	@property
	def rank(self) -> int:
		return self.basis.shape[1]

	def compress(self, unitary: np.ndarray) -> np.ndarray:
		return self.basis.conj().T @ unitary @ self.basis

	def leakage(self, unitary: np.ndarray) -> float:
		"""``||(1 - Q) U Q||``."""
		outside = np.eye(unitary.shape[0]) - self.projector
		return float(np.linalg.norm(outside @ unitary @ self.basis, 2))


def gate_fidelity(implemented: np.ndarray, target: np.ndarray) -> float:
	"""``|Tr(V^dagger M)| / d``, insensitive to a global phase."""
	return float(abs(np.trace(target.conj().T @ implemented)) / target.shape[0])


def phase_stripped_distance(implemented: np.ndarray, target: np.ndarray) -> float:
	"""``||M - e^{i alpha} V||`` with ``alpha = arg Tr(V^dagger M)``."""
	overlap = np.trace(target.conj().T @ implemented)
	phase = overlap / abs(overlap) if abs(overlap) > 0 else 1.0
	return float(np.linalg.norm(implemented - phase * target, 2))


@dataclass
class GateReport:
	"""
	Comparison of an integrated code-space action with its target.

	Attributes:
		name: Short gate name.
		implemented: The code-space block of the evolution.
		target: Ideal unitary on the same space.
		fidelity: Phase-insensitive overlap in [0, 1].
		distance: Phase-stripped operator-norm distance.
		leakage: Norm of the part leaving the code space.
		parameters: Angles and schedule.
		branches: Per-control reports for controlled gates.
		note: Free-form remark carried into exports.
	"""

	name: str
	implemented: np.ndarray
	target: np.ndarray
	fidelity: float
	distance: float
	leakage: float
	parameters: dict[str, Any] = field(default_factory=dict)
	branches: dict[str, 'GateReport'] = field(default_factory=dict)
	note: str = ''

	@classmethod
	def compare(
		cls,
		name: str,
		implemented: np.ndarray,
		target: np.ndarray,
		leakage: float = 0.0,
		parameters: dict[str, Any] | None = None,
		**extra: Any,
	) -> 'GateReport':
		return cls(
			name=name,
			implemented=implemented,
			target=target,
			fidelity=gate_fidelity(implemented, target),
			distance=phase_stripped_distance(implemented, target),
			leakage=leakage,
			parameters=parameters or {},
			**extra,
		)

	def to_dict(self) -> dict[str, Any]:
		def matrix(value: np.ndarray) -> list[list[dict[str, float]]]:
			return [[{'re': float(x.real), 'im': float(x.imag)} for x in row] for row in value]

		return {
			'name': self.name,
			'parameters': self.parameters,
			'fidelity': self.fidelity,
			'distance': self.distance,
			'leakage': self.leakage,
			'implemented': matrix(self.implemented),
			'target': matrix(self.target),
			'branches': {key: branch.to_dict() for key, branch in self.branches.items()},
			'note': self.note,
		}


def _schedule(
	l: int,
	tau_step: float,
	profile: Profile | str,
	jitter: float,
	seed: int | None,
	off_interval: float,
) -> dict[str, Any]:
	if l < MIN_STEPS:
		raise PreconditionError(f'l >= {MIN_STEPS}', f'l={l}')
	profile = Profile(profile)
	intervals = l - 1 if profile == Profile.SWEEP else l
	return {
		'profile': profile,
		'durations': jitter_durations(l, tau_step, jitter, seed, profile) if jitter else None,
		'off_intervals': (off_interval,) * intervals if off_interval else None,
	}


def one_qubit_operators(phi: float, axis: str = 'x') -> tuple[np.ndarray, np.ndarray]:
	"""``(G_0, -X)`` of the two-spin loop, ``X = s_axis x (cos(phi) sx + sin(phi) sz)``."""
	if axis not in ('x', 'y'):
		raise PreconditionError('axis in {x, y}', repr(axis))
	base = np.kron(SIGMA_Z, IDENTITY) + np.kron(IDENTITY, SIGMA_Z)
	return base, -np.kron(PAULI[axis], _mixed_axis(phi))


def two_qubit_operators(phi: float) -> tuple[np.ndarray, np.ndarray]:
	"""``(G_0, -X)`` of the three-spin loop; X rotates the second spin while the third is up."""
	base = kron_all(SIGMA_Z, IDENTITY, IDENTITY) + kron_all(IDENTITY, SIGMA_Z, IDENTITY)
	return base, -kron_all(IDENTITY, _mixed_axis(phi), PROJ_UP)


def one_qubit_family(
	phi: float,
	axis: str = 'x',
	l: int = 400,
	tau_step: float = 5.0,
	profile: Profile | str = Profile.HOLD,
	jitter: float = 0.0,
	seed: int | None = 0,
	off_interval: float = 0.0,
) -> LoopFamily:
	"""
	Two-spin loop with ``X = s_axis x (cos(phi) sx + sin(phi) sz)``.

	Args:
		phi: Mixing angle of the second spin's axis.
		axis: ``'x'`` or ``'y'``, the Pauli acting on the first spin.
		l: Number of loop samples, at least 50.
		tau_step: Nominal step duration.
		profile: Loop schedule.
		jitter: Relative spread of randomized step durations (0 for uniform).
		seed: Seed of the jitter.
		off_interval: Duration of a switched-off gap after every step.
	"""
	base, generator = one_qubit_operators(phi, axis)
	return LoopFamily(base, generator, l, tau_step, **_schedule(l, tau_step, profile, jitter, seed, off_interval))


def two_qubit_family(
	phi: float,
	l: int = 400,
	tau_step: float = 5.0,
	profile: Profile | str = Profile.HOLD,
	jitter: float = 0.0,
	seed: int | None = 0,
	off_interval: float = 0.0,
) -> LoopFamily:
	"""
	Three-spin loop rotating the second spin only while the third (control) spin is up.

	``G_0 = sz x 1 x 1 + 1 x sz x 1``; the loop samples equal
	``V x 1 + 1 x U_j`` with ``U_j`` conditioned on the control spin.
	"""
	base, generator = two_qubit_operators(phi)
	return LoopFamily(base, generator, l, tau_step, **_schedule(l, tau_step, profile, jitter, seed, off_interval))


def _parameters(family: LoopFamily, **angles: Any) -> dict[str, Any]:
	return {
		**angles,
		'l': family.steps,
		'tau_step': family.tau_step,
		'profile': family.profile.value,
		'active_time': family.active_time,
		'jittered': family.durations is not None,
	}


def one_qubit_gate(phi: float, axis: str = 'x', l: int = 400, tau_step: float = 5.0, **schedule: Any) -> GateReport:
	"""
	Integrate the one-qubit loop and compare with ``exp(2 pi i cos(phi) sx)``.

	The y family realizes ``exp(-2 pi i cos(phi) sy)``, since its compressed
	generator is ``-cos(phi) sy``.

	Args:
		phi: Mixing angle.
		axis: ``'x'`` or ``'y'``.
		l: Number of loop samples.
		tau_step: Step duration.
		**schedule: Forwarded to :func:`one_qubit_family` (profile, jitter, seed, off_interval).
	"""
	family = one_qubit_family(phi, axis, l, tau_step, **schedule)
	unitary = integrate_loop(family)
	code = CodeSpace.pair()
	angle = 2 * np.pi * np.cos(phi)
	target = axis_rotation('x', angle) if axis == 'x' else axis_rotation('y', -angle)
	return GateReport.compare(
		f'rot_{axis}',
		code.compress(unitary),
		target,
		code.leakage(unitary),
		_parameters(family, phi=phi, axis=axis),
	)


def two_qubit_gate(phi: float, l: int = 400, tau_step: float = 5.0, **schedule: Any) -> GateReport:
	"""
	Integrate the three-spin loop for both control settings.

	With the control spin up the code space of spins 1 and 2 is rotated by
	``exp(2 pi i sin(phi) sz)``; with the control down it is left alone. The
	combined report acts on the target code space tensored with the control
	qubit, control down being logical 0.
	"""
	family = two_qubit_family(phi, l, tau_step, **schedule)
	unitary = integrate_loop(family)
	parameters = _parameters(family, phi=phi)
	angle = 2 * np.pi * np.sin(phi)

	branches = {}
	for control, target in (('d', np.eye(2, dtype=complex)), ('u', axis_rotation('z', angle))):
		code = CodeSpace.with_suffix(control)
		branches[control] = GateReport.compare(
			f'branch_{control}', code.compress(unitary), target, code.leakage(unitary), parameters
		)

	combined = np.kron(branches['d'].implemented, LOGICAL_ZERO) + np.kron(branches['u'].implemented, LOGICAL_ONE)
	return GateReport.compare(
		'controlled_phase',
		combined,
		controlled_phase(angle),
		max(branch.leakage for branch in branches.values()),
		parameters,
		branches=branches,
		note=CONTROLLED_PHASE_NOTE,
	)


def schedule_sweep(phi: float, axis: str, ls: list[int], tau_step: float = 5.0) -> list[dict[str, Any]]:
	"""One-qubit gate quality over a range of step counts."""
	rows = []
	for l in ls:
		report = one_qubit_gate(phi, axis, l, tau_step)
		rows.append({'l': l, 'fidelity': report.fidelity, 'distance': report.distance, 'leakage': report.leakage})
	return rows


def universality_witness(l: int = 400, tau_step: float = 5.0) -> list[GateReport]:
	"""
	Gate set generating the unitary group, realized by parameter choice.

	Returns reports for ``exp(i pi/2 sx)``, ``exp(-i pi/4 sy)``, their
	Hadamard-equivalent product, a rotation followed by its inverse, a
	CZ-equivalent controlled ``exp(i pi/2 sz)`` and the controlled ``-1``
	obtained at ``phi = pi/6``.
	"""
	rot_x = one_qubit_gate(np.arccos(1 / 4), 'x', l, tau_step)
	rot_y = one_qubit_gate(np.arccos(1 / 8), 'y', l, tau_step)
	inverse = one_qubit_gate(np.arccos(-1 / 4), 'x', l, tau_step)
	schedule = {'l': l, 'tau_step': tau_step}

	hadamard = GateReport.compare(
		'hadamard',
		rot_x.implemented @ rot_y.implemented,
		rot_x.target @ rot_y.target,
		max(rot_x.leakage, rot_y.leakage),
		schedule,
		note='i*H = exp(i pi/2 sx) exp(-i pi/4 sy)',
	)
	identity = GateReport.compare(
		'inverse_pair',
		inverse.implemented @ rot_x.implemented,
		np.eye(2, dtype=complex),
		max(rot_x.leakage, inverse.leakage),
		schedule,
	)
	cz = two_qubit_gate(np.arcsin(1 / 4), l, tau_step)
	cz.name = 'cz_equivalent'
	cz.note = 'controlled exp(i pi/2 sz) = CZ times S on the control; ' + CONTROLLED_PHASE_NOTE
	minus_one = two_qubit_gate(np.pi / 6, l, tau_step)
	minus_one.name = 'controlled_minus_one'
	minus_one.note = 'controlled -1 is a local Z on the control'
	return [rot_x, rot_y, hadamard, identity, cz, minus_one]
