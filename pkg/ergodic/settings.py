"""Numerical limits shared by the exact simulators."""

from dataclasses import dataclass


@dataclass(frozen=True)
class Limits:
	"""
	Size caps and tolerances for exact computations.

	Attributes:
		max_exact_n: Largest lattice side for exact many-body work.
		max_sector_dimension: Largest C(2m, m) for dense or sparse many-body evolution.
		dense_limit: Operators above this dimension are stored sparse.
		max_spinful_dimension: Largest configuration-times-spin dimension for the complete Hamiltonian.
		bfs_node_cap: Largest configuration graph built by breadth-first search.
		tolerance: Tolerance for structural equalities (Hermiticity, closure).
		degeneracy_tolerance: Tolerance for grouping equal eigenvalues or frequencies.
	"""

	max_exact_n: int = 8
	max_sector_dimension: int = 12870
	dense_limit: int = 4096
	max_spinful_dimension: int = 4096
	bfs_node_cap: int = 200_000
	tolerance: float = 1e-12
	degeneracy_tolerance: float = 1e-9


DEFAULT_LIMITS = Limits()
