"""
Free-fermion solution of the clock walk.

The 1-bits of the chain word hop like free fermions on a path of 2m sites.
This package provides the single-particle spectrum and propagator, the
counting statistics of the fermions that crossed into the left half, their
infinite-time averages, many-body oracles for small sectors and the
passing-time and readout checks built on them.
"""

from .averages import (
	FrequencyGroups,
	frequency_groups,
	long_time_average_expectation,
	time_average_expectation,
	time_average_variance,
	time_average_variance_bound,
)
from .checks import PassingTimeResult, ReadoutCheck, ergodic_readout_check, passing_time_check
from .manybody import (
	build_sector_hamiltonian,
	diagonal_ensemble_distribution,
	diagonal_ensemble_probability,
	evolve_initial_state,
	left_counts,
	occupation_moments,
	outside_probability_exact,
	outside_probability_series,
	sector_words,
	slater_probabilities,
	within_exact_cap,
)
from .observables import (
	WalkObservables,
	chebyshev_lower_bound,
	correlation_matrix,
	default_time_grid,
	expectation_left,
	left_occupations,
	pair_occupation,
	variance_left,
	walk_observables,
)
from .spectrum import (
	PathGraphSpectrum,
	Propagator,
	path_adjacency,
	path_eigenvalue,
	path_spectrum,
	propagator,
	propagators,
)

__all__ = [
	'FrequencyGroups',
	'PassingTimeResult',
	'PathGraphSpectrum',
	'Propagator',
	'ReadoutCheck',
	'WalkObservables',
	'build_sector_hamiltonian',
	'chebyshev_lower_bound',
	'correlation_matrix',
	'default_time_grid',
	'diagonal_ensemble_distribution',
	'diagonal_ensemble_probability',
	'ergodic_readout_check',
	'evolve_initial_state',
	'expectation_left',
	'frequency_groups',
	'left_counts',
	'left_occupations',
	'long_time_average_expectation',
	'occupation_moments',
	'outside_probability_exact',
	'outside_probability_series',
	'pair_occupation',
	'passing_time_check',
	'path_adjacency',
	'path_eigenvalue',
	'path_spectrum',
	'propagator',
	'propagators',
	'sector_words',
	'slater_probabilities',
	'time_average_expectation',
	'time_average_variance',
	'time_average_variance_bound',
	'variance_left',
	'walk_observables',
	'within_exact_cap',
]
