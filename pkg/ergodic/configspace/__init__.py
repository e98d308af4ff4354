"""
Configuration space of the atom chain.

Enumerates allowed chain configurations as binary words, their moves, and
the decoding into lattice sites; this is the basis of the clock space H_c.
"""

from .lattice import (
	ChainConfiguration,
	LatticeSpec,
	SitePosition,
	all_outside_region,
	allowed_moves,
	config_count,
	decode_positions,
	encode_positions,
	enumerate_configs,
	final_configuration,
	initial_configuration,
	left_count,
	move_graph_bfs,
)

__all__ = [
	'ChainConfiguration',
	'LatticeSpec',
	'SitePosition',
	'all_outside_region',
	'allowed_moves',
	'config_count',
	'decode_positions',
	'encode_positions',
	'enumerate_configs',
	'final_configuration',
	'initial_configuration',
	'left_count',
	'move_graph_bfs',
]
