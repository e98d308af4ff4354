"""
Circuit layout.

Compiles logical circuits into interaction stripes inside the circuit
region, tiles the region for cellular-automaton schemes, validates
placements and renders them.
"""

from .circuit import (
	Gate,
	GateKind,
	LogicalCircuit,
	circuit_unitary,
	cphase,
	mixing_angle,
	random_circuit,
	reduce_angle,
	rot_x,
	rot_y,
)
from .compiler import Violation, compile_circuit, layout_unitary, margolus_tiling, validate
from .render import render_text
from .stripes import BlockSpec, CircuitLayout, StripeKind, StripeSpec, layout_from_json

__all__ = [
	'BlockSpec',
	'CircuitLayout',
	'Gate',
	'GateKind',
	'LogicalCircuit',
	'StripeKind',
	'StripeSpec',
	'Violation',
	'circuit_unitary',
	'compile_circuit',
	'cphase',
	'layout_from_json',
	'layout_unitary',
	'margolus_tiling',
	'mixing_angle',
	'random_circuit',
	'reduce_angle',
	'render_text',
	'rot_x',
	'rot_y',
	'validate',
]
