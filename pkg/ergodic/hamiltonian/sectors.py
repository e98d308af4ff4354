"""
Basis sectors of the lattice Hamiltonians.

The full qutrit space is never built. Hopping conserves the number of atoms
per row, so all exact work happens either on the one-atom-per-row sector
(which contains torn chains), on the connected-chain sector H_c, or on H_c
tensored with one spin per row.
"""

from dataclasses import dataclass, field
from enum import Enum
from itertools import product
from math import prod
from typing import Any

from typing_extensions import Self

from ergodic.configspace import LatticeSpec, decode_positions, enumerate_configs
from ergodic.exceptions import SizeCapError
from ergodic.settings import DEFAULT_LIMITS, Limits

Site = tuple[int, int]
Placement = tuple[Site, ...]


class SectorMode(str, Enum):
	ONE_ATOM_PER_ROW = 'one-atom-per-row'
	CONNECTED_CHAIN = 'connected-chain'
	SPINFUL = 'spinful'


def row_sites(spec: LatticeSpec, row: int) -> list[Site]:
	"""Black sites of chain row ``row``, ordered by column."""
	offset = row - spec.n
	return [(c + max(0, offset), c + max(0, -offset)) for c in range(1, spec.row_length(row) + 1)]


def spin_labels(count: int) -> list[str]:
	"""Spin basis words over ``count`` sites, ``u`` (index 0) before ``d``."""
	return [''.join(spins) for spins in product('ud', repeat=count)]


def one_atom_per_row_dimension(spec: LatticeSpec) -> int:
	return prod(spec.row_length(t) for t in range(1, spec.rows + 1))


@dataclass(frozen=True, eq=False)
class SectorBasis:
	"""
	Ordered basis of one sector.

	Attributes:
		mode: Which sector the labels span.
		spec: The lattice.
		labels: Basis labels; chain words for H_c, site tuples for the
			one-atom-per-row sector, (configuration, spins) pairs for spinful sectors.
		placements: Occupied sites per row for every spatial configuration.
		spins: Spin words tensored onto the spatial part (spinful sectors only).
	"""

	mode: SectorMode
	spec: LatticeSpec
	labels: tuple[Any, ...]
	placements: tuple[Placement, ...]
	spins: tuple[str, ...] = ()
	_index: dict[Placement, int] = field(default_factory=dict, init=False, repr=False)

	@classmethod
	def connected_chain(cls, spec: LatticeSpec) -> Self:
		configs = enumerate_configs(spec)
		placements = tuple(tuple((p.i, p.j) for p in decode_positions(c, spec)) for c in configs)
		return cls(SectorMode.CONNECTED_CHAIN, spec, tuple(c.word for c in configs), placements)

	@classmethod
	def one_atom_per_row(cls, spec: LatticeSpec, limits: Limits = DEFAULT_LIMITS) -> Self:
		dimension = one_atom_per_row_dimension(spec)
		if dimension > limits.max_sector_dimension:
			raise SizeCapError('one-atom-per-row sector', dimension, limits.max_sector_dimension)
		placements = tuple(product(*(row_sites(spec, t) for t in range(1, spec.rows + 1))))
		return cls(SectorMode.ONE_ATOM_PER_ROW, spec, placements, placements)

	@classmethod
	def spinful(cls, spatial: 'SectorBasis', limits: Limits = DEFAULT_LIMITS) -> Self:
		"""Tensor a spatial sector with one spin per chain row."""
		spins = spin_labels(spatial.spec.rows)
		dimension = spatial.dimension * len(spins)
		if dimension > limits.max_spinful_dimension:
			raise SizeCapError('spinful sector', dimension, limits.max_spinful_dimension)
		labels = tuple((label, s) for label in spatial.labels for s in spins)
		return cls(SectorMode.SPINFUL, spatial.spec, labels, spatial.placements, tuple(spins))

	@property
	def dimension(self) -> int:
		return len(self.labels)

	@property
	def spatial_dimension(self) -> int:
		return len(self.placements)

	def index_of_placement(self, placement: Placement) -> int | None:
		"""Spatial index of ``placement`` or None when it is not in the sector."""
		if not self._index:
			self._index.update({p: i for i, p in enumerate(self.placements)})
		return self._index.get(placement)

	def chain_indices(self) -> list[int]:
		"""Spatial indices of the connected chain configurations, in H_c order."""
		chain = SectorBasis.connected_chain(self.spec)
		indices = [self.index_of_placement(p) for p in chain.placements]
		return [i for i in indices if i is not None]
