"""
Atom-chain configurations on the diagonal n x n lattice.

A chain of 2n-1 atoms occupies one black site per diagonal row. The top and
bottom atoms are fixed; every other atom sits diagonally next to its
neighbours. Bit ``t`` of the binary word (counted from the top, 1-based)
is 1 iff the atom of row t+1 is in front of the atom of row t, so the word
has length 2m with m = n-1 and Hamming weight m.

Black sites carry grid coordinates (i, j) with 1 <= i, j <= n. Row t (from
the top) holds the sites with i - j = t - n, and inside a row the column of a
site is ``min(i, j)``.
"""

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from math import comb

from typing_extensions import Self

from ergodic.exceptions import PreconditionError


@dataclass(frozen=True)
class LatticeSpec:
	"""
	Lattice side n and circuit-region side k.

	Attributes:
		n: Grid side; the chain has 2n-1 atoms and words have length 2m, m = n-1.
		k: Side of the circuit region R = {(i, j): i, j <= k}.
	"""

	n: int
	k: int = 1

	def __post_init__(self) -> None:
		if self.n < 2:
			raise PreconditionError('n >= 2', f'lattice side n={self.n}')
		if not 1 <= self.k < self.n:
			raise PreconditionError('1 <= k < n', f'k={self.k}, n={self.n}')

	@property
	def m(self) -> int:
		return self.n - 1

	@property
	def rows(self) -> int:
		return 2 * self.n - 1

	def row_length(self, row: int) -> int:
		"""Number of black sites in chain row ``row`` (1-based from the top)."""
		return self.n - abs(row - self.n)

	def usable_length(self, row: int) -> int:
		"""Number of columns of ``row`` that lie inside the circuit region."""
		return max(0, self.k - abs(row - self.n))


@dataclass(frozen=True, order=True)
class SitePosition:
	"""
	A black lattice site occupied by the atom of one chain row.

	Attributes:
		row: Chain row, 1-based from the top.
		i: First grid coordinate.
		j: Second grid coordinate.
	"""

	row: int
	i: int
	j: int

	@property
	def column(self) -> int:
		return min(self.i, self.j)

	def in_region(self, k: int) -> bool:
		return self.i <= k and self.j <= k

	def is_diagonal_neighbour(self, other: 'SitePosition') -> bool:
		return abs(self.i - other.i) + abs(self.j - other.j) == 1


@dataclass(frozen=True, order=True)
class ChainConfiguration:
	"""An allowed chain position, encoded as a bit string of length 2m and weight m."""

	word: str

	def __post_init__(self) -> None:
		if not self.word or len(self.word) % 2 or set(self.word) - {'0', '1'}:
			raise PreconditionError('binary word of even length', repr(self.word))
		if self.word.count('1') != len(self.word) // 2:
			raise PreconditionError('Hamming weight m', f'{self.word!r} has weight {self.word.count("1")}')

	@property
	def m(self) -> int:
		return len(self.word) // 2

	@classmethod
	def from_ones(cls, m: int, ones: tuple[int, ...]) -> Self:
		"""Build the word of length 2m with 1-bits at the given 0-based positions."""
		bits = ['0'] * (2 * m)
		for position in ones:
			bits[position] = '1'
		return cls(''.join(bits))

	def __str__(self) -> str:
		return self.word


def _check_word_length(c: ChainConfiguration, spec: LatticeSpec) -> None:
	if c.m != spec.m:
		raise PreconditionError('word length 2m', f'{c.word!r} does not fit n={spec.n}')


def initial_configuration(spec: LatticeSpec) -> ChainConfiguration:
	"""The initial word 0^m 1^m (all atoms at column 1)."""
	return ChainConfiguration('0' * spec.m + '1' * spec.m)


def final_configuration(spec: LatticeSpec) -> ChainConfiguration:
	"""The word 1^m 0^m, the chain pushed to the far side."""
	return ChainConfiguration('1' * spec.m + '0' * spec.m)


def enumerate_configs(spec: LatticeSpec) -> list[ChainConfiguration]:
	"""All C(2m, m) words of weight m in lexicographic order."""
	m = spec.m
	words = [ChainConfiguration.from_ones(m, ones).word for ones in combinations(range(2 * m), m)]
	return [ChainConfiguration(word) for word in sorted(words)]


def allowed_moves(c: ChainConfiguration) -> list[ChainConfiguration]:
	"""Words reached by swapping one adjacent ``10``/``01`` pair, in lexicographic order."""
	word = c.word
	moves = []
	for t in range(len(word) - 1):
		if word[t] != word[t + 1]:
			moves.append(ChainConfiguration(word[:t] + word[t + 1] + word[t] + word[t + 2 :]))
	return sorted(moves)


def move_graph_bfs(spec: LatticeSpec) -> list[ChainConfiguration]:
	"""Breadth-first closure of the move graph from the initial word, sorted."""
	start = initial_configuration(spec)
	seen = {start}
	queue = deque([start])
	while queue:
		for neighbour in allowed_moves(queue.popleft()):
			if neighbour not in seen:
				seen.add(neighbour)
				queue.append(neighbour)
	return sorted(seen)


def decode_positions(c: ChainConfiguration, spec: LatticeSpec) -> list[SitePosition]:
	"""
	Decode a word into the 2n-1 occupied sites, one per row from the top.

	The top atom is anchored at (1, n). Each 1-bit moves the next atom one
	step in +i, each 0-bit one step in -j, which keeps adjacent atoms
	diagonal neighbours and lands the bottom atom on (n, 1).

	Args:
		c: The configuration.
		spec: Lattice whose word length matches ``c``.

	Returns:
		The occupied sites ordered by row.
	"""
	_check_word_length(c, spec)
	i, j = 1, spec.n
	positions = [SitePosition(1, i, j)]
	for t, bit in enumerate(c.word, start=2):
		if bit == '1':
			i += 1
		else:
			j -= 1
		positions.append(SitePosition(t, i, j))
	return positions


def encode_positions(positions: list[SitePosition], spec: LatticeSpec) -> ChainConfiguration:
	"""
	Inverse of :func:`decode_positions`.

	Raises:
		PreconditionError: If the positions do not form an anchored chain.
	"""
	if len(positions) != spec.rows:
		raise PreconditionError('one atom per row', f'{len(positions)} positions for {spec.rows} rows')
	ordered = sorted(positions)
	if (ordered[0].i, ordered[0].j) != (1, spec.n) or (ordered[-1].i, ordered[-1].j) != (spec.n, 1):
		raise PreconditionError('fixed end atoms', 'top atom must sit at (1, n) and bottom atom at (n, 1)')
	bits = []
	for upper, lower in zip(ordered, ordered[1:]):
		step = (lower.i - upper.i, lower.j - upper.j)
		if step == (1, 0):
			bits.append('1')
		elif step == (0, -1):
			bits.append('0')
		else:
			raise PreconditionError('connected chain', f'rows {upper.row} and {lower.row} are not diagonal neighbours')
	return ChainConfiguration(''.join(bits))


def left_count(c: ChainConfiguration) -> int:
	"""Number of 1-bits among the first m positions."""
	return c.word[: c.m].count('1')


def all_outside_region(c: ChainConfiguration, spec: LatticeSpec) -> bool:
	"""True iff at least k ones have travelled into the left half of the word."""
	_check_word_length(c, spec)
	return left_count(c) >= spec.k


def config_count(spec: LatticeSpec) -> int:
	return comb(2 * spec.m, spec.m)
