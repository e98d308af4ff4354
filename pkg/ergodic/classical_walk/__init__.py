"""
Classical random walk on the chessboard model.

Builds the configuration graph of one atom per row under the colour-dependent
move rules, its diagonal Hamiltonians and hopping, and the continuous-time
random walk that relaxes to the uniform distribution.
"""

from .board import (
	BoardConfiguration,
	BoardSpec,
	ConfigGraph,
	allowed_board_moves,
	board_energy,
	board_space,
	build_graph,
	energy_terms,
	initial_board,
	is_allowed_move,
	is_valid_configuration,
	neighbouring_moves,
	reflect,
)
from .export import distribution_csv, edge_list_text, node_table_csv
from .walk import (
	CoherentWalk,
	EffectiveHamiltonianCheck,
	build_appendix_hamiltonians,
	coherent_walk,
	effective_hamiltonian_check,
	evolve_walk,
	mixing_time,
	outside_probability_stationary,
	point_distribution,
	spectral_gap,
	stationary_distribution,
)

__all__ = [
	'BoardConfiguration',
	'BoardSpec',
	'CoherentWalk',
	'ConfigGraph',
	'EffectiveHamiltonianCheck',
	'allowed_board_moves',
	'board_energy',
	'board_space',
	'build_appendix_hamiltonians',
	'build_graph',
	'coherent_walk',
	'distribution_csv',
	'edge_list_text',
	'effective_hamiltonian_check',
	'energy_terms',
	'evolve_walk',
	'initial_board',
	'is_allowed_move',
	'is_valid_configuration',
	'mixing_time',
	'neighbouring_moves',
	'node_table_csv',
	'outside_probability_stationary',
	'point_distribution',
	'reflect',
	'spectral_gap',
	'stationary_distribution',
]
