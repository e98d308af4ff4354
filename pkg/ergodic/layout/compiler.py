"""
Placement of circuits and cellular-automaton tilings in the circuit region.
"""

import math
from dataclasses import dataclass
from typing import Any

import numpy as np

from ergodic.configspace import LatticeSpec
from ergodic.exceptions import PreconditionError, RegionOverflowError
from ergodic.layout.circuit import (
	TWO_PI,
	GateKind,
	LogicalCircuit,
	embed_gate,
	mixing_angle,
	realized_angle,
	reduce_angle,
)
from ergodic.layout.stripes import BlockSpec, CircuitLayout, StripeKind, StripeSpec

ANGLE_TOLERANCE = 1e-9


@dataclass(frozen=True)
class Violation:
	"""A broken layout rule, reported against the stripe at ``stripe`` (0-based)."""

	stripe: int
	rule: str
	detail: str

	def to_dict(self) -> dict[str, Any]:
		return {'stripe': self.stripe, 'rule': self.rule, 'detail': self.detail}


def required_region(spec: LatticeSpec, chain_rows: tuple[int, ...], c_end: int) -> int:
	"""Smallest region side in which columns up to ``c_end`` are usable on all ``chain_rows``."""
	return c_end + max(abs(t - spec.n) for t in chain_rows)


def compile_circuit(circuit: LogicalCircuit, l: int, spec: LatticeSpec) -> CircuitLayout:
	"""
	Place one stripe per gate, as early as its rows allow.

	Logical qubit ``i`` occupies layout rows ``2i - 1`` and ``2i``; a rotation
	uses those two rows and a controlled phase adds the first row of the
	control qubit. The layout is centred on the middle chain row.

	Args:
		circuit: Gates in execution order.
		l: Loop length, equal to the column span of every stripe.
		spec: The lattice.

	Returns:
		The layout, stripes in gate order.

	Raises:
		PreconditionError: If ``l < 1`` or the circuit has more than ``n - 1`` qubits.
		RegionOverflowError: If a stripe leaves the usable part of the circuit region.
	"""
	if l < 1:
		raise PreconditionError('l >= 1', f'l={l}')
	if circuit.qubits > spec.n - 1:
		raise PreconditionError('q <= n - 1', f'{circuit.qubits} qubits on n={spec.n}')

	layout = CircuitLayout(spec, [], circuit.qubits, spec.n - circuit.qubits)
	next_free = {row: 1 for row in range(1, 2 * circuit.qubits + 1)}
	required = 0
	for gate in circuit.gates:
		first = 2 * gate.lowest_qubit - 1
		rows = tuple(range(first, first + (3 if gate.kind == GateKind.CPHASE else 2)))
		c_start = max(next_free[row] for row in rows)
		theta = reduce_angle(gate.theta)
		stripe = StripeSpec(
			kind=StripeKind.TWO_QUBIT if gate.kind == GateKind.CPHASE else StripeKind.ONE_QUBIT,
			rows=rows,
			c_start=c_start,
			l=l,
			phi=mixing_angle(gate.kind, theta),
			theta=theta,
			axis=gate.axis,
		)
		layout.stripes.append(stripe)
		for row in rows:
			next_free[row] = stripe.c_end + 1
		required = max(required, required_region(spec, layout.chain_rows(stripe), stripe.c_end))

	if required > spec.k:
		raise RegionOverflowError(required, spec.k)
	return layout


def _band(spec: LatticeSpec, columns: int) -> list[int]:
	return [t for t in range(1, spec.rows + 1) if spec.usable_length(t) >= columns]


def margolus_tiling(
	ca_steps: int,
	cell_rows: int,
	u_block: BlockSpec,
	v_block: BlockSpec,
	spec: LatticeSpec,
) -> CircuitLayout:
	"""
	Tile the circuit region with alternating U and V column groups.

	Cells ``C_1, C_2, ...`` of ``cell_rows`` rows fill the central band of
	chain rows that are usable for all ``ca_steps * (u + v)`` columns. Even
	column groups hold U blocks on ``(C_{2j-1}, C_{2j})``, odd groups V blocks
	on ``(C_{2j}, C_{2j+1})``. Rows are chain rows (``row_offset`` 0).

	Raises:
		PreconditionError: For negative ``ca_steps`` or ``cell_rows < 1``.
		RegionOverflowError: If fewer than three cells fit the band.
	"""
	if ca_steps < 0 or cell_rows < 1:
		raise PreconditionError('ca_steps >= 0 and cell_rows >= 1', f'ca_steps={ca_steps}, cell_rows={cell_rows}')
	layout = CircuitLayout(spec)
	if ca_steps == 0:
		return layout

	period = u_block.width + v_block.width
	columns = ca_steps * period
	band = _band(spec, columns)
	cells = len(band) // cell_rows
	if cells < 3:
		raise RegionOverflowError(columns + math.ceil((3 * cell_rows - 1) / 2), spec.k)

	def cell(index: int) -> tuple[int, ...]:
		start = band[0] + (index - 1) * cell_rows
		return tuple(range(start, start + cell_rows))

	for step in range(ca_steps):
		u_start = 1 + step * period
		for j in range(1, cells // 2 + 1):
			rows = cell(2 * j - 1) + cell(2 * j)
			layout.stripes.append(StripeSpec(StripeKind.CA_BLOCK, rows, u_start, u_block.width, block=u_block.name))
		for j in range(1, (cells - 1) // 2 + 1):
			rows = cell(2 * j) + cell(2 * j + 1)
			layout.stripes.append(
				StripeSpec(StripeKind.CA_BLOCK, rows, u_start + u_block.width, v_block.width, block=v_block.name)
			)
	return layout


def _angle_violation(stripe: StripeSpec) -> str | None:
	kind = stripe.gate_kind
	if kind is None:
		return None
	if stripe.phi is None or stripe.theta is None:
		return 'gate stripe without phi or theta'
	if abs(stripe.theta) > TWO_PI + ANGLE_TOLERANCE:
		return f'|theta|={abs(stripe.theta):.6g} exceeds 2 pi'
	if abs(realized_angle(kind, stripe.phi) - stripe.theta) > ANGLE_TOLERANCE:
		return f'phi={stripe.phi:.12g} realizes {realized_angle(kind, stripe.phi):.12g}, not theta={stripe.theta:.12g}'
	return None


def _rows_violation(layout: CircuitLayout, stripe: StripeSpec) -> str | None:
	expected = {StripeKind.ONE_QUBIT: 2, StripeKind.TWO_QUBIT: 3}.get(stripe.kind)
	if expected is not None and len(stripe.rows) != expected:
		return f'{stripe.kind.value} stripe needs {expected} rows, has {len(stripe.rows)}'
	if list(stripe.rows) != list(range(stripe.rows[0], stripe.rows[0] + len(stripe.rows))):
		return f'rows {stripe.rows} are not consecutive'
	if expected is not None:
		if stripe.rows[0] % 2 == 0:
			return f'rows {stripe.rows} start on the second row of qubit {stripe.rows[0] // 2}'
		needed = stripe.target_qubit + (1 if stripe.kind == StripeKind.TWO_QUBIT else 0)
		if needed > layout.qubits:
			return f'rows {stripe.rows} address qubit {needed}, layout has {layout.qubits}'
	chain = layout.chain_rows(stripe)
	if min(chain) < 1 or max(chain) > layout.spec.rows:
		return f'chain rows {chain} leave the lattice'
	return None


def validate(layout: CircuitLayout) -> list[Violation]:
	"""
	Check a layout against the placement rules.

	Rules are ``rows``, ``confinement`` (columns within ``1..k``),
	``row-usability`` (the span fits the shortest member row inside the
	region), ``ordering`` (no two stripes share rows and columns) and
	``angle``.

	Returns:
		All violations; empty for a valid layout.
	"""
	spec = layout.spec
	violations = []
	for index, stripe in enumerate(layout.stripes):
		rows_problem = _rows_violation(layout, stripe) if stripe.rows else 'stripe without rows'
		if rows_problem:
			violations.append(Violation(index, 'rows', rows_problem))
		elif stripe.c_start < 1 or stripe.c_end > spec.k:
			violations.append(Violation(index, 'confinement', f'columns {stripe.columns} outside 1..{spec.k}'))
		else:
			usable = min(spec.usable_length(t) for t in layout.chain_rows(stripe))
			if stripe.c_end > usable:
				violations.append(
					Violation(index, 'row-usability', f'columns {stripe.columns} exceed usable length {usable}')
				)
		for earlier in range(index):
			if layout.stripes[earlier].overlaps(stripe):
				violations.append(Violation(index, 'ordering', f'overlaps stripe {earlier}'))
		angle_problem = _angle_violation(stripe)
		if angle_problem:
			violations.append(Violation(index, 'angle', angle_problem))
	return violations


def layout_unitary(layout: CircuitLayout) -> np.ndarray:
	"""
	Product of the stripe targets in column order on the logical qubits.

	Raises:
		PreconditionError: For layouts without logical qubits or with cellular-automaton blocks.
	"""
	if layout.qubits < 1:
		raise PreconditionError('logical qubits', 'layout encodes no logical qubits')
	unitary = np.eye(2**layout.qubits, dtype=complex)
	for stripe in layout.column_order():
		unitary = embed_gate(stripe.target(), stripe.target_qubit, layout.qubits) @ unitary
	return unitary
