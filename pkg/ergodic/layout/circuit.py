"""
Logical circuits over the holonomic gate set.

Gates act on logical qubits numbered from 1. Qubit 1 is the most significant
tensor factor of every circuit unitary. A controlled phase always has its
control on the qubit directly below the target (``control = target + 1``),
which is the only orientation a three-row stripe can realize.
"""

import math
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from ergodic.exceptions import PreconditionError
from ergodic.holonomy import axis_rotation, controlled_phase, embed_operator

TWO_PI = 2 * math.pi


class GateKind(str, Enum):
	ROT_X = 'rot_x'
	ROT_Y = 'rot_y'
	CPHASE = 'cphase'


def reduce_angle(theta: float) -> float:
	"""Bring ``theta`` into ``[-2 pi, 2 pi]``; angles already there are kept."""
	if abs(theta) <= TWO_PI:
		return theta
	return math.remainder(theta, TWO_PI)


def mixing_angle(kind: GateKind, theta: float) -> float:
	"""
	Invert the angle equation of a gate.

	``rot_x``: ``theta = 2 pi cos(phi)``; ``rot_y``: ``theta = -2 pi cos(phi)``;
	``cphase``: ``theta = 2 pi sin(phi)``. The principal branch is returned.
	"""
	ratio = reduce_angle(theta) / TWO_PI
	if kind == GateKind.ROT_X:
		return math.acos(ratio)
	if kind == GateKind.ROT_Y:
		return math.acos(-ratio)
	return math.asin(ratio)


def realized_angle(kind: GateKind, phi: float) -> float:
	if kind == GateKind.ROT_X:
		return TWO_PI * math.cos(phi)
	if kind == GateKind.ROT_Y:
		return -TWO_PI * math.cos(phi)
	return TWO_PI * math.sin(phi)


@dataclass(frozen=True)
class Gate:
	"""
	One logical gate.

	Attributes:
		kind: Rotation about x or y, or controlled phase.
		theta: Rotation angle, ``exp(i theta sigma)``.
		qubits: ``(qubit,)`` for rotations, ``(target, control)`` for a controlled phase.
	"""

	kind: GateKind
	theta: float
	qubits: tuple[int, ...]

	def __post_init__(self) -> None:
		object.__setattr__(self, 'kind', GateKind(self.kind))
		expected = 2 if self.kind == GateKind.CPHASE else 1
		if len(self.qubits) != expected:
			raise PreconditionError('gate arity', f'{self.kind.value} takes {expected} qubit(s), got {self.qubits}')
		if self.kind == GateKind.CPHASE and self.qubits[1] != self.qubits[0] + 1:
			target, control = self.qubits
			raise PreconditionError('adjacent control below target', f'control {control}, target {target}')

	@property
	def axis(self) -> str | None:
		return {GateKind.ROT_X: 'x', GateKind.ROT_Y: 'y'}.get(self.kind)

	@property
	def lowest_qubit(self) -> int:
		return self.qubits[0]

	def matrix(self) -> np.ndarray:
		"""Local unitary; for a controlled phase the target is the first factor."""
		if self.kind == GateKind.CPHASE:
			return controlled_phase(self.theta)
		return axis_rotation(self.axis, self.theta)


def rot_x(qubit: int, theta: float) -> Gate:
	return Gate(GateKind.ROT_X, theta, (qubit,))


def rot_y(qubit: int, theta: float) -> Gate:
	return Gate(GateKind.ROT_Y, theta, (qubit,))


def cphase(theta: float, control: int, target: int) -> Gate:
	return Gate(GateKind.CPHASE, theta, (target, control))


@dataclass
class LogicalCircuit:
	"""
	Ordered gate list on ``qubits`` logical qubits.

	Raises:
		PreconditionError: If a gate addresses a qubit outside ``1..qubits``.
	"""

	qubits: int
	gates: list[Gate] = field(default_factory=list)

	def __post_init__(self) -> None:
		if self.qubits < 1:
			raise PreconditionError('q >= 1', f'q={self.qubits}')
		for gate in self.gates:
			if min(gate.qubits) < 1 or max(gate.qubits) > self.qubits:
				raise PreconditionError('qubit in range', f'{gate} on a {self.qubits}-qubit circuit')

	def append(self, gate: Gate) -> 'LogicalCircuit':
		self.gates.append(gate)
		self.__post_init__()
		return self


def embed_gate(local: np.ndarray, lowest_qubit: int, qubits: int) -> np.ndarray:
	"""Act with ``local`` on consecutive qubits starting at ``lowest_qubit``."""
	width = int(round(math.log2(local.shape[0])))
	return embed_operator(local, list(range(lowest_qubit - 1, lowest_qubit - 1 + width)), qubits)


def circuit_unitary(circuit: LogicalCircuit) -> np.ndarray:
	"""Product of the gate matrices in circuit order."""
	unitary = np.eye(2**circuit.qubits, dtype=complex)
	for gate in circuit.gates:
		unitary = embed_gate(gate.matrix(), gate.lowest_qubit, circuit.qubits) @ unitary
	return unitary


def random_circuit(qubits: int, depth: int, rng: np.random.Generator | int | None = None) -> LogicalCircuit:
	"""Random circuit of ``depth`` gates, controlled phases only between neighbours."""
	rng = np.random.default_rng(rng)
	kinds = [GateKind.ROT_X, GateKind.ROT_Y] + ([GateKind.CPHASE] if qubits > 1 else [])
	gates = []
	for _ in range(depth):
		kind = kinds[rng.integers(len(kinds))]
		theta = float(rng.uniform(-TWO_PI, TWO_PI))
		if kind == GateKind.CPHASE:
			target = int(rng.integers(1, qubits))
			gates.append(cphase(theta, target + 1, target))
		else:
			gates.append(Gate(kind, theta, (int(rng.integers(1, qubits + 1)),)))
	return LogicalCircuit(qubits, gates)
