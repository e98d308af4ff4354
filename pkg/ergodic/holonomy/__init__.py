"""
Holonomic gates from closed adiabatic loops.

Integrates the stripe interaction families on small spin registers and
compares the code-space action with the geometric-phase prediction and the
intended one- and two-qubit gates.
"""

from .gates import (
	CodeSpace,
	GateReport,
	axis_rotation,
	controlled_phase,
	gate_fidelity,
	one_qubit_family,
	one_qubit_gate,
	one_qubit_operators,
	phase_stripped_distance,
	schedule_sweep,
	two_qubit_family,
	two_qubit_gate,
	two_qubit_operators,
	universality_witness,
)
from .loop import (
	LoopFamily,
	Profile,
	eigenspace_basis,
	integrate_loop,
	jitter_durations,
	predicted_holonomy,
)
from .spins import SIGMA_X, SIGMA_Y, SIGMA_Z, basis_index, embed_operator, ket, kron_all

__all__ = [
	'CodeSpace',
	'GateReport',
	'LoopFamily',
	'Profile',
	'SIGMA_X',
	'SIGMA_Y',
	'SIGMA_Z',
	'axis_rotation',
	'basis_index',
	'controlled_phase',
	'eigenspace_basis',
	'embed_operator',
	'gate_fidelity',
	'integrate_loop',
	'jitter_durations',
	'ket',
	'kron_all',
	'one_qubit_family',
	'one_qubit_gate',
	'one_qubit_operators',
	'phase_stripped_distance',
	'predicted_holonomy',
	'schedule_sweep',
	'two_qubit_family',
	'two_qubit_gate',
	'two_qubit_operators',
	'universality_witness',
]
