"""
Stripe placements and their JSON form.

A stripe is a band of consecutive rows over a span of columns of the
circuit region. Rows are counted in the layout's own frame; adding
``CircuitLayout.row_offset`` gives the chain row on the lattice.
"""

import json
from dataclasses import dataclass, field
from enum import Enum
from typing import Any

import numpy as np
from scipy.linalg import expm

from ergodic.configspace import LatticeSpec
from ergodic.exceptions import PreconditionError
from ergodic.holonomy import axis_rotation, controlled_phase, one_qubit_operators, two_qubit_operators
from ergodic.layout.circuit import GateKind

FORMAT_VERSION = 1


class StripeKind(str, Enum):
	ONE_QUBIT = 'one-qubit'
	TWO_QUBIT = 'two-qubit'
	CA_BLOCK = 'ca-block'


@dataclass(frozen=True)
class BlockSpec:
	"""Opaque cellular-automaton block: a name and its width in columns."""

	name: str
	width: int

	def __post_init__(self) -> None:
		if self.width < 1:
			raise PreconditionError('block width >= 1', f'{self.name}: width={self.width}')


@dataclass(frozen=True)
class StripeSpec:
	"""
	One interaction stripe.

	Attributes:
		kind: One-qubit, two-qubit or cellular-automaton block.
		rows: Consecutive rows in the layout frame.
		c_start: First column.
		l: Number of columns, equal to the loop length.
		phi: Mixing angle of the holonomy family (gates only).
		theta: Gate angle the stripe realizes (gates only).
		axis: ``'x'`` or ``'y'`` for one-qubit stripes.
		block: Block name for cellular-automaton stripes.
	"""

	kind: StripeKind
	rows: tuple[int, ...]
	c_start: int
	l: int
	phi: float | None = None
	theta: float | None = None
	axis: str | None = None
	block: str | None = None

	@property
	def c_end(self) -> int:
		return self.c_start + self.l - 1

	@property
	def columns(self) -> tuple[int, int]:
		return (self.c_start, self.c_end)

	@property
	def anchor_row(self) -> int:
		"""Row whose atom selects the active step: lower row of a pair, middle row of a triple."""
		return self.rows[1]

	@property
	def gate_kind(self) -> GateKind | None:
		if self.kind == StripeKind.TWO_QUBIT:
			return GateKind.CPHASE
		if self.kind == StripeKind.ONE_QUBIT:
			return GateKind.ROT_X if self.axis == 'x' else GateKind.ROT_Y
		return None

	@property
	def target_qubit(self) -> int:
		"""Logical qubit encoded on the first stripe row."""
		return (self.rows[0] + 1) // 2

	def overlaps(self, other: 'StripeSpec') -> bool:
		shares_rows = bool(set(self.rows) & set(other.rows))
		return shares_rows and self.c_start <= other.c_end and other.c_start <= self.c_end

	def operators(self) -> tuple[np.ndarray, np.ndarray]:
		"""``(G_0, generator)`` of the loop this stripe walks through, one sample per column."""
		if self.kind == StripeKind.ONE_QUBIT:
			return one_qubit_operators(self.phi, self.axis)
		if self.kind == StripeKind.TWO_QUBIT:
			return two_qubit_operators(self.phi)
		raise PreconditionError('gate stripe', f'block {self.block!r} carries no concrete interaction')

	def interaction(self, step: int) -> np.ndarray:
		"""Local spin interaction at column ``c_start + step - 1`` (``step`` in ``1..l``)."""
		if not 1 <= step <= self.l:
			raise PreconditionError('step within stripe', f'step={step}, l={self.l}')
		base, generator = self.operators()
		theta = 2 * np.pi * (step - 1) / (self.l - 1) if self.l > 1 else 0.0
		rotation = expm(1j * theta * generator)
		return rotation @ base @ rotation.conj().T

	def target(self) -> np.ndarray:
		if self.kind == StripeKind.ONE_QUBIT:
			return axis_rotation(self.axis, self.theta)
		if self.kind == StripeKind.TWO_QUBIT:
			return controlled_phase(self.theta)
		raise PreconditionError('gate stripe', f'block {self.block!r} has no target unitary')

	def to_json(self) -> dict[str, Any]:
		return {
			'kind': self.kind.value,
			'axis': self.axis,
			'rows': list(self.rows),
			'columns': list(self.columns),
			'phi': self.phi,
			'theta': self.theta,
			'l': self.l,
			'block': self.block,
		}

	@classmethod
	def from_json(cls, payload: dict[str, Any]) -> 'StripeSpec':
		c_start, c_end = payload['columns']
		if c_end - c_start + 1 != payload['l']:
			raise PreconditionError('columns match l', f'columns {payload["columns"]} for l={payload["l"]}')
		return cls(
			kind=StripeKind(payload['kind']),
			rows=tuple(payload['rows']),
			c_start=c_start,
			l=payload['l'],
			phi=payload.get('phi'),
			theta=payload.get('theta'),
			axis=payload.get('axis'),
			block=payload.get('block'),
		)


@dataclass
class CircuitLayout:
	"""
	Stripes placed on a lattice.

	Attributes:
		spec: The lattice; stripes must stay within columns ``<= spec.k``.
		stripes: Placed stripes in compilation order.
		qubits: Number of logical qubits (0 for cellular-automaton tilings).
		row_offset: Chain row of layout row ``r`` is ``r + row_offset``.
	"""

	spec: LatticeSpec
	stripes: list[StripeSpec] = field(default_factory=list)
	qubits: int = 0
	row_offset: int = 0

	@property
	def qubit_map(self) -> dict[int, tuple[int, int]]:
		"""Logical qubit ``i`` lives on layout rows ``2i - 1`` and ``2i``."""
		return {i: (2 * i - 1, 2 * i) for i in range(1, self.qubits + 1)}

	@property
	def is_empty(self) -> bool:
		return not self.stripes

	def chain_row(self, row: int) -> int:
		return row + self.row_offset

	def chain_rows(self, stripe: StripeSpec) -> tuple[int, ...]:
		return tuple(self.chain_row(row) for row in stripe.rows)

	def column_order(self) -> list[StripeSpec]:
		"""Stripes sorted by first column, ties kept in list order."""
		return [stripe for _, stripe in sorted(enumerate(self.stripes), key=lambda pair: (pair[1].c_start, pair[0]))]

	def to_json(self) -> dict[str, Any]:
		return {
			'format-version': FORMAT_VERSION,
			'lattice': {'n': self.spec.n, 'k': self.spec.k},
			'row_offset': self.row_offset,
			'qubit_map': {str(i): list(rows) for i, rows in self.qubit_map.items()},
			'stripes': [stripe.to_json() for stripe in self.stripes],
		}

	def dumps(self) -> str:
		return json.dumps(self.to_json(), indent=2)


def layout_from_json(payload: dict[str, Any] | str) -> CircuitLayout:
	"""
	Rebuild a layout from its JSON form.

	Raises:
		PreconditionError: On an unknown format version.
	"""
	if isinstance(payload, str):
		payload = json.loads(payload)
	version = payload.get('format-version')
	if version != FORMAT_VERSION:
		raise PreconditionError('layout format version', f'expected {FORMAT_VERSION}, got {version!r}')
	lattice = payload['lattice']
	return CircuitLayout(
		spec=LatticeSpec(n=lattice['n'], k=lattice['k']),
		stripes=[StripeSpec.from_json(stripe) for stripe in payload['stripes']],
		qubits=len(payload.get('qubit_map', {})),
		row_offset=payload.get('row_offset', 0),
	)
