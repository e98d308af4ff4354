"""
Self-energy machinery and the exact checks of the effective Hamiltonian.

Splits the binding potential at ``E/2``, evaluates the self-energy of the
hopping on the chain sector and verifies, on small lattices, how closely the
low-energy part of the full Hamiltonian and its evolution follow ``H_eff``.
"""

from .checks import (
	Lemma1Result,
	Lemma1Sweep,
	SelfEnergyCheck,
	SelfEnergySample,
	SplitProblem,
	Theorem1Record,
	Theorem1Result,
	lemma1_check,
	lemma1_sweep,
	low_energy_representation,
	self_energy_check,
	split_problem,
	theorem1_check,
)
from .split import SelfEnergy, SpectralSplit, greens_function, self_energy, self_energy_derivative

__all__ = [
	'Lemma1Result',
	'Lemma1Sweep',
	'SelfEnergy',
	'SelfEnergyCheck',
	'SelfEnergySample',
	'SpectralSplit',
	'SplitProblem',
	'Theorem1Record',
	'Theorem1Result',
	'greens_function',
	'lemma1_check',
	'lemma1_sweep',
	'low_energy_representation',
	'self_energy',
	'self_energy_check',
	'self_energy_derivative',
	'split_problem',
	'theorem1_check',
]
