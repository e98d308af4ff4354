"""
Hamiltonians and random walks on the chessboard configuration graph.

The classical walk evolves ``dp/dt = -L p`` with ``L = D - A`` the graph
Laplacian, which conserves probability and relaxes to the uniform
distribution on a connected graph.
"""

import math
from dataclasses import asdict, dataclass
from typing import Any

import networkx as nx
import numpy as np
from scipy import linalg
from scipy.sparse.linalg import expm_multiply

from ergodic.classical_walk.board import (
	BoardSpec,
	ConfigGraph,
	board_energy,
	board_space,
	build_graph,
	energy_terms,
	initial_board,
	neighbouring_moves,
)
from ergodic.exceptions import DisconnectedGraphError, PreconditionError
from ergodic.hamiltonian import HermitianOperator
from ergodic.settings import DEFAULT_LIMITS, Limits


def build_appendix_hamiltonians(
	graph: ConfigGraph,
	E: float,
	limits: Limits = DEFAULT_LIMITS,
) -> tuple[HermitianOperator, HermitianOperator, HermitianOperator, HermitianOperator]:
	"""
	``(H_1, H_2, H_3, K)`` on the configurations of ``graph``.

	The three potentials are diagonal; K is the adjacency of the move graph.

	Raises:
		PreconditionError: If ``E <= 0``.
	"""
	if E <= 0:
		raise PreconditionError('E > 0', f'E={E}')
	labels = [str(node) for node in graph.nodes]
	terms = np.array([energy_terms(node, graph.spec, E) for node in graph.nodes], dtype=float).reshape(-1, 3)
	diagonals = [
		HermitianOperator.from_entries(((i, i, value) for i, value in enumerate(terms[:, t])), labels, name, limits)
		for t, name in enumerate(('H_1', 'H_2', 'H_3'))
	]
	hops = [(u, v, 1.0) for a, b in graph.edges() for u, v in ((a, b), (b, a))]
	hopping = HermitianOperator.from_entries(hops, labels, 'K', limits)
	return diagonals[0], diagonals[1], diagonals[2], hopping


@dataclass(frozen=True)
class EffectiveHamiltonianCheck:
	"""
	Projection of the hopping onto the energy shell of the first-column board.

	Attributes:
		rows: Board rows.
		cols: Board columns.
		E: Binding energy.
		space_dimension: Size of the one-atom-per-row space.
		shell_dimension: Number of configurations with the initial energy.
		graph_size: Number of reachable configurations.
		adjacency_error: Largest entry of ``P K P - A`` on the reachable set.
		leakage: Largest entry of ``P K P`` between the reachable set and the rest of the shell.
		conserving: Every allowed move keeps the energy.
		forbidden_raise: Every forbidden single-atom move raises the energy.
	"""

	rows: int
	cols: int
	E: float
	space_dimension: int
	shell_dimension: int
	graph_size: int
	adjacency_error: float
	leakage: float
	conserving: bool
	forbidden_raise: bool

	@property
	def holds(self) -> bool:
		return self.adjacency_error <= 1e-12 and self.leakage <= 1e-12 and self.conserving and self.forbidden_raise

	def to_dict(self) -> dict[str, Any]:
		return asdict(self) | {'holds': self.holds}


def effective_hamiltonian_check(
	spec: BoardSpec,
	E: float,
	limits: Limits = DEFAULT_LIMITS,
) -> EffectiveHamiltonianCheck:
	"""
	Compare ``P (H_1 + H_2 + H_3 + K) P`` with the move graph.

	P projects onto the configurations of the full board space whose energy
	equals that of the first-column board. On that shell the diagonal part
	is a constant, so only ``P K P`` is compared.

	Raises:
		PreconditionError: If ``E <= 0``.
		SizeCapError: If the board space or the graph exceeds its cap.
	"""
	if E <= 0:
		raise PreconditionError('E > 0', f'E={E}')
	graph = build_graph(spec, limits)
	space = list(board_space(spec, limits))
	index = {config: i for i, config in enumerate(space)}
	tolerance = limits.tolerance * max(1.0, E)
	target = board_energy(initial_board(spec), spec, E)
	energies = np.array([board_energy(config, spec, E) for config in space])
	shell = np.flatnonzero(np.abs(energies - target) <= tolerance)

	entries = [
		(index[config], index[result], 1.0) for config in space for _, _, result, _ in neighbouring_moves(config, spec)
	]
	projected = HermitianOperator.from_entries(entries, [str(c) for c in space], 'K', limits).restrict(shell)
	block = projected.to_dense().real

	position = {int(s): p for p, s in enumerate(shell)}
	conserving, forbidden_raise = True, True
	for node in graph.nodes:
		for _, _, result, allowed in neighbouring_moves(node, spec):
			shift = board_energy(result, spec, E) - board_energy(node, spec, E)
			if allowed:
				conserving &= abs(shift) <= tolerance
			else:
				forbidden_raise &= shift > tolerance

	if all(index[node] in position for node in graph.nodes):
		reached = [position[index[node]] for node in graph.nodes]
		rest = sorted(set(range(len(shell))) - set(reached))
		adjacency = graph.adjacency().toarray()
		adjacency_error = float(np.max(np.abs(block[np.ix_(reached, reached)] - adjacency), initial=0.0))
		leakage = float(np.max(np.abs(block[np.ix_(reached, rest)]), initial=0.0))
	else:
		adjacency_error, leakage = math.inf, math.inf
	return EffectiveHamiltonianCheck(
		spec.rows,
		spec.cols,
		float(E),
		len(space),
		len(shell),
		len(graph),
		adjacency_error,
		leakage,
		conserving,
		forbidden_raise,
	)


def stationary_distribution(graph: ConfigGraph, limits: Limits = DEFAULT_LIMITS) -> np.ndarray:
	"""
	The normalized kernel vector of the Laplacian.

	Small graphs compute the kernel explicitly and check that it is
	one-dimensional; larger connected graphs return the uniform vector.

	Raises:
		DisconnectedGraphError: If the graph has more than one component.
	"""
	if not nx.is_connected(graph.graph):
		raise DisconnectedGraphError(nx.number_connected_components(graph.graph))
	if len(graph) > limits.dense_limit:
		return np.full(len(graph), 1.0 / len(graph))
	kernel = linalg.null_space(graph.laplacian().toarray())
	if kernel.shape[1] != 1:
		raise DisconnectedGraphError(kernel.shape[1])
	vector = kernel[:, 0]
	return vector / vector.sum()


def _check_distribution(p: np.ndarray, size: int) -> None:
	if p.shape != (size,):
		raise PreconditionError('one probability per node', f'shape {p.shape} for {size} nodes')
	if np.any(p < -1e-12) or abs(p.sum() - 1) > 1e-10:
		raise PreconditionError('normalized distribution', f'sum {p.sum():.17g}, min {p.min():.3g}')


def evolve_walk(graph: ConfigGraph, p0: np.ndarray, t: float) -> np.ndarray:
	"""
	``p(t) = exp(-L t) p0``.

	Raises:
		PreconditionError: If ``p0`` is not a distribution over the nodes or ``t < 0``.
	"""
	p0 = np.asarray(p0, dtype=float)
	_check_distribution(p0, len(graph))
	if not np.isfinite(t) or t < 0:
		raise PreconditionError('t >= 0', f't={t}')
	return expm_multiply(-t * graph.laplacian().tocsr(), p0)


def point_distribution(graph: ConfigGraph, node: int = 0) -> np.ndarray:
	p = np.zeros(len(graph))
	p[node] = 1.0
	return p


def outside_probability_stationary(graph: ConfigGraph, spec: BoardSpec | None = None) -> float:
	"""
	Stationary probability that every atom sits right of the circuit region.

	``spec`` overrides the region width of ``graph.spec``; rows and columns must agree.

	Raises:
		PreconditionError: Unless ``k < cols/2 - rows``.
	"""
	spec = spec or graph.spec
	if (spec.rows, spec.cols) != (graph.spec.rows, graph.spec.cols):
		raise PreconditionError('same board as the graph', f'{spec} for {graph.spec}')
	if not spec.k < spec.cols / 2 - spec.rows:
		raise PreconditionError('k < m_cols/2 - 2n', f'k={spec.k}, m_cols={spec.cols}, 2n={spec.rows}')
	outside = np.array([all(c > spec.k for c in node.columns) for node in graph.nodes])
	return float(stationary_distribution(graph)[outside].sum())


@dataclass(frozen=True, eq=False)
class CoherentWalk:
	t: float
	probabilities: np.ndarray

	@property
	def total(self) -> float:
		return float(self.probabilities.sum())


def coherent_walk(graph: ConfigGraph, t: float, start: int = 0) -> CoherentWalk:
	"""Unitary walk ``exp(-i A t)`` from node ``start``; an exploratory comparison only."""
	if not 0 <= start < len(graph):
		raise PreconditionError('start is a node id', f'start={start}')
	psi = np.zeros(len(graph), dtype=complex)
	psi[start] = 1.0
	evolved = expm_multiply(-1j * t * graph.adjacency().tocsr().astype(complex), psi)
	return CoherentWalk(float(t), np.abs(evolved) ** 2)


def spectral_gap(graph: ConfigGraph, limits: Limits = DEFAULT_LIMITS) -> float:
	"""Second-smallest Laplacian eigenvalue."""
	if len(graph) > limits.dense_limit:
		return float(nx.algebraic_connectivity(graph.graph, method='tracemin_lu'))
	return float(linalg.eigvalsh(graph.laplacian().toarray())[1])


def mixing_time(graph: ConfigGraph, tol: float = 1e-8, limits: Limits = DEFAULT_LIMITS) -> float:
	"""
	``log(|C| / tol) / gap``; after this time every start is within ``tol`` of uniform.

	Raises:
		PreconditionError: Unless ``0 < tol < 1``.
		DisconnectedGraphError: If the gap vanishes.
	"""
	if not 0 < tol < 1:
		raise PreconditionError('0 < tol < 1', f'tol={tol}')
	gap = spectral_gap(graph, limits)
	if gap <= limits.degeneracy_tolerance:
		raise DisconnectedGraphError(nx.number_connected_components(graph.graph))
	return math.log(len(graph) / tol) / gap
