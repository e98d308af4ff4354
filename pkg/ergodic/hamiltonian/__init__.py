"""
Hamiltonians of the atom chain.

Builds the hopping, the chain-binding potential, their effective
projection onto the clock space, the XY chain it is equivalent to, and the
complete model with one spin per row and the stripe interactions.
"""

from .builders import (
	build_Hpot,
	build_Hs,
	build_K,
	conditional_hopping_hamiltonian,
	effective_hamiltonian,
	ground_energy_shift,
	hamming_weight_operator,
	move_adjacency,
	synchronization_hamiltonian,
)
from .complete import (
	CompleteEvolution,
	build_complete,
	build_stripe_interaction,
	evolve_complete,
	stripe_block,
)
from .operator import HermitianOperator, format_number
from .sectors import SectorBasis, SectorMode, one_atom_per_row_dimension, row_sites, spin_labels

__all__ = [
	'CompleteEvolution',
	'HermitianOperator',
	'SectorBasis',
	'SectorMode',
	'build_Hpot',
	'build_Hs',
	'build_K',
	'build_complete',
	'build_stripe_interaction',
	'conditional_hopping_hamiltonian',
	'effective_hamiltonian',
	'evolve_complete',
	'format_number',
	'ground_energy_shift',
	'hamming_weight_operator',
	'move_adjacency',
	'one_atom_per_row_dimension',
	'row_sites',
	'spin_labels',
	'stripe_block',
	'synchronization_hamiltonian',
]
