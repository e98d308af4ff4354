"""
The chessboard model: one atom per row on a ``2n x m_cols`` board.

Site (row, col) is black iff ``row + col`` is even. Atoms on white sites
are free to step sideways while both neighbours share their column; atoms
on black sites may only step next to their neighbours. Starting from the
first column, the reachable configurations form an undirected graph.
"""

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Iterator

import networkx as nx
from scipy import sparse

from ergodic.exceptions import PreconditionError, SizeCapError
from ergodic.settings import DEFAULT_LIMITS, Limits


@dataclass(frozen=True)
class BoardSpec:
	"""
	Board size and circuit-region width.

	Attributes:
		rows: Number of rows ``2n``; must be even.
		cols: Number of columns ``m_cols``.
		k: Width of the circuit region, the columns ``1..k``.
	"""

	rows: int
	cols: int
	k: int = 0

	def __post_init__(self) -> None:
		if self.rows < 2 or self.rows % 2:
			raise PreconditionError('rows even and >= 2', f'rows={self.rows}')
		if self.cols < 2:
			raise PreconditionError('cols >= 2', f'cols={self.cols}')
		if self.k < 0:
			raise PreconditionError('k >= 0', f'k={self.k}')

	@property
	def n(self) -> int:
		return self.rows // 2

	def is_black(self, row: int, col: int) -> bool:
		return (row + col) % 2 == 0

	def neighbour_rows(self, row: int) -> list[int]:
		"""Rows adjacent to ``row`` (1-based); boundary rows have one."""
		return [r for r in (row - 1, row + 1) if 1 <= r <= self.rows]


@dataclass(frozen=True, order=True)
class BoardConfiguration:
	"""Column of the atom in each row, top row first, 1-based."""

	columns: tuple[int, ...]

	def __str__(self) -> str:
		return ' '.join(str(c) for c in self.columns)

	def column(self, row: int) -> int:
		return self.columns[row - 1]

	def moved(self, row: int, step: int) -> 'BoardConfiguration':
		columns = list(self.columns)
		columns[row - 1] += step
		return BoardConfiguration(tuple(columns))


Move = tuple[int, int, BoardConfiguration, bool]


def _check(config: BoardConfiguration, spec: BoardSpec) -> None:
	if len(config.columns) != spec.rows:
		raise PreconditionError('one column per row', f'{len(config.columns)} columns for {spec.rows} rows')
	if any(not 1 <= c <= spec.cols for c in config.columns):
		raise PreconditionError('columns inside the board', str(config))


def initial_board(spec: BoardSpec) -> BoardConfiguration:
	"""All atoms in the first column."""
	return BoardConfiguration((1,) * spec.rows)


def is_valid_configuration(config: BoardConfiguration, spec: BoardSpec) -> bool:
	"""
	Whether ``config`` has the two structural properties of reachable boards.

	Adjacent-row atoms share a column or sit in neighbouring columns, and an
	atom on a white site has an atom on each existing adjacent row of its column.
	"""
	_check(config, spec)
	for row in range(1, spec.rows):
		if abs(config.column(row) - config.column(row + 1)) > 1:
			return False
	for row in range(1, spec.rows + 1):
		col = config.column(row)
		if not spec.is_black(row, col) and any(config.column(r) != col for r in spec.neighbour_rows(row)):
			return False
	return True


def is_allowed_move(config: BoardConfiguration, row: int, step: int, spec: BoardSpec) -> bool:
	"""
	Whether the atom of ``row`` may step by ``step`` (+1 or -1).

	A white atom needs every adjacent-row atom in its current column; a black
	atom needs every adjacent-row atom in the target column. The black rule
	already keeps first-column black atoms in place.
	"""
	col = config.column(row)
	target = col + step
	if step not in (-1, 1) or not 1 <= target <= spec.cols:
		return False
	required = col if not spec.is_black(row, col) else target
	return all(config.column(r) == required for r in spec.neighbour_rows(row))


def neighbouring_moves(config: BoardConfiguration, spec: BoardSpec) -> list[Move]:
	"""Every single-atom step inside the board as ``(row, step, result, allowed)``."""
	moves = []
	for row in range(1, spec.rows + 1):
		for step in (-1, 1):
			if 1 <= config.column(row) + step <= spec.cols:
				moves.append((row, step, config.moved(row, step), is_allowed_move(config, row, step, spec)))
	return moves


def allowed_board_moves(config: BoardConfiguration, spec: BoardSpec) -> list[BoardConfiguration]:
	return [result for _, _, result, allowed in neighbouring_moves(config, spec) if allowed]


def reflect(config: BoardConfiguration, spec: BoardSpec) -> BoardConfiguration:
	"""
	Mirror at the vertical axis of the board.

	Columns map ``c -> cols + 1 - c``. For an even number of columns the
	mirror swaps the colouring, so the row order is reversed as well.
	"""
	mirrored = tuple(spec.cols + 1 - c for c in config.columns)
	if spec.cols % 2 == 0:
		mirrored = mirrored[::-1]
	return BoardConfiguration(mirrored)


def energy_terms(config: BoardConfiguration, spec: BoardSpec, E: float) -> tuple[float, float, float]:
	"""
	The diagonal terms ``(H_1, H_2, H_3)`` of a configuration.

	``H_1 = -2E`` per atom on a black site, ``H_2 = -E`` per pair of adjacent
	rows in the same column, ``H_3 = +E`` per black atom in the first or last row.
	"""
	black = sum(spec.is_black(row, config.column(row)) for row in range(1, spec.rows + 1))
	pairs = sum(config.column(row) == config.column(row + 1) for row in range(1, spec.rows))
	boundary = sum(spec.is_black(row, config.column(row)) for row in (1, spec.rows))
	return -2 * E * black, -E * pairs, E * boundary


def board_energy(config: BoardConfiguration, spec: BoardSpec, E: float) -> float:
	"""``H_1 + H_2 + H_3`` of a configuration."""
	return sum(energy_terms(config, spec, E))


def board_space(spec: BoardSpec, limits: Limits = DEFAULT_LIMITS) -> Iterator[BoardConfiguration]:
	"""
	Every one-atom-per-row configuration, in lexicographic order.

	Raises:
		SizeCapError: If ``cols ** rows`` exceeds ``limits.max_sector_dimension``.
	"""
	size = spec.cols**spec.rows
	if size > limits.max_sector_dimension:
		raise SizeCapError('board one-atom-per-row space', size, limits.max_sector_dimension)
	for columns in product(range(1, spec.cols + 1), repeat=spec.rows):
		yield BoardConfiguration(columns)


@dataclass(frozen=True, eq=False)
class ConfigGraph:
	"""
	Configurations reachable from the first column and their moves.

	Attributes:
		spec: The board.
		nodes: Configurations in breadth-first order; node id = position.
		graph: Undirected ``networkx`` graph over ``nodes``.
	"""

	spec: BoardSpec
	nodes: tuple[BoardConfiguration, ...]
	graph: nx.Graph

	@cached_property
	def index(self) -> dict[BoardConfiguration, int]:
		return {node: i for i, node in enumerate(self.nodes)}

	def __len__(self) -> int:
		return len(self.nodes)

	def edges(self) -> list[tuple[int, int]]:
		"""Edges as sorted node-id pairs."""
		pairs = []
		for u, v in self.graph.edges:
			a, b = self.index[u], self.index[v]
			pairs.append((min(a, b), max(a, b)))
		return sorted(pairs)

	@property
	def degrees(self) -> list[int]:
		return [self.graph.degree[node] for node in self.nodes]

	def laplacian(self) -> sparse.csr_array:
		"""``L = D - A`` as a scipy sparse matrix in node order."""
		return nx.laplacian_matrix(self.graph, nodelist=list(self.nodes)).astype(float)

	def adjacency(self) -> sparse.csr_array:
		return nx.adjacency_matrix(self.graph, nodelist=list(self.nodes)).astype(float)


def build_graph(spec: BoardSpec, limits: Limits = DEFAULT_LIMITS) -> ConfigGraph:
	"""
	Breadth-first closure from the first-column configuration.

	Raises:
		SizeCapError: If more than ``limits.bfs_node_cap`` configurations are reached.
	"""
	start = initial_board(spec)
	graph = nx.Graph()
	graph.add_node(start)
	order = [start]
	queue = deque([start])
	while queue:
		config = queue.popleft()
		for neighbour in allowed_board_moves(config, spec):
			if neighbour not in graph:
				if len(order) >= limits.bfs_node_cap:
					raise SizeCapError('classical configuration graph', len(order) + 1, limits.bfs_node_cap)
				order.append(neighbour)
				queue.append(neighbour)
			graph.add_edge(config, neighbour)
	return ConfigGraph(spec, tuple(order), graph)
