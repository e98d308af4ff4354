"""
The complete Hamiltonian ``H_pot + K + W`` on chain configurations with one spin per row.

The stripe interaction W is block diagonal in the configuration: for every
stripe, the atom in its anchor row selects the active loop sample from its
column inside the stripe, and W is only switched on while that atom sits in
the circuit region.
"""

from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np
from scipy import sparse
from scipy.sparse.linalg import expm_multiply

from ergodic.configspace import ChainConfiguration, LatticeSpec, all_outside_region, initial_configuration
from ergodic.exceptions import PreconditionError
from ergodic.hamiltonian.builders import build_Hpot, build_K
from ergodic.hamiltonian.operator import HermitianOperator
from ergodic.hamiltonian.sectors import SectorBasis
from ergodic.settings import DEFAULT_LIMITS, Limits

if TYPE_CHECKING:
	from ergodic.layout import CircuitLayout


def _check_layout(spec: LatticeSpec, layout: 'CircuitLayout') -> None:
	from ergodic.layout import StripeKind

	if layout.spec != spec:
		raise PreconditionError('layout of spec', f'layout built for n={layout.spec.n}, k={layout.spec.k}')
	for index, stripe in enumerate(layout.stripes):
		if stripe.kind == StripeKind.CA_BLOCK:
			raise PreconditionError('gate stripes only', f'stripe {index} is the opaque block {stripe.block!r}')
		rows = layout.chain_rows(stripe)
		if min(rows) < 1 or max(rows) > spec.rows:
			raise PreconditionError('stripe inside lattice', f'stripe {index} covers chain rows {rows}')


def stripe_block(spec: LatticeSpec, layout: 'CircuitLayout', placement: tuple[tuple[int, int], ...]) -> np.ndarray:
	"""
	Spin operator W for one chain configuration.

	Args:
		spec: The lattice.
		layout: Gate stripes; rows are mapped to chain rows by ``layout.row_offset``.
		placement: Site ``(i, j)`` of the atom in every chain row.

	Returns:
		Matrix on ``2^(2n-1)`` spins, the first chain row most significant.
	"""
	from ergodic.holonomy import embed_operator

	count = spec.rows
	block = np.zeros((2**count, 2**count), dtype=complex)
	for stripe in layout.stripes:
		i, j = placement[layout.chain_row(stripe.anchor_row) - 1]
		column = min(i, j)
		if max(i, j) > spec.k or not stripe.c_start <= column <= stripe.c_end:
			continue
		sites = [row - 1 for row in layout.chain_rows(stripe)]
		block += embed_operator(stripe.interaction(column - stripe.c_start + 1), sites, count)
	return block


def build_stripe_interaction(
	spec: LatticeSpec,
	layout: 'CircuitLayout',
	limits: Limits = DEFAULT_LIMITS,
) -> HermitianOperator:
	"""
	W on the spinful connected-chain sector.

	Raises:
		PreconditionError: For cellular-automaton blocks or stripes outside the lattice.
		SizeCapError: If the spinful sector exceeds ``limits.max_spinful_dimension``.
	"""
	_check_layout(spec, layout)
	chain = SectorBasis.connected_chain(spec)
	sector = SectorBasis.spinful(chain, limits)
	blocks = [sparse.csr_matrix(stripe_block(spec, layout, placement)) for placement in chain.placements]
	return HermitianOperator.from_matrix(sparse.block_diag(blocks, format='csr'), sector.labels, 'W', limits)


def build_complete(
	spec: LatticeSpec,
	E: float,
	layout: 'CircuitLayout',
	limits: Limits = DEFAULT_LIMITS,
) -> HermitianOperator:
	"""
	``(K + H_pot) x 1_spins + W`` on chain configurations tensored with one spin per row.

	Hops out of H_c are dropped, so the spatial part is the projected
	hopping; it conserves every spin.

	Args:
		spec: The lattice; the spinful sector must fit ``limits.max_spinful_dimension``.
		E: Binding energy of the chain.
		layout: Gate stripes placed on ``spec``.

	Raises:
		PreconditionError: For ``E <= 0`` or a layout that does not belong to ``spec``.
		SizeCapError: If the spinful sector is too large.
	"""
	_check_layout(spec, layout)
	chain = SectorBasis.connected_chain(spec)
	sector = SectorBasis.spinful(chain, limits)
	spatial = build_K(spec, chain, limits) + build_Hpot(spec, E, chain, limits)
	hamiltonian = spatial.kron_identity(sector.spins) + build_stripe_interaction(spec, layout, limits)
	return HermitianOperator.from_matrix(hamiltonian.matrix, sector.labels, 'H_complete', limits)


@dataclass(frozen=True)
class CompleteEvolution:
	"""
	State of the complete model at one time.

	Attributes:
		time: Evolution time.
		state: Amplitudes on the spinful basis.
		outside_probability: Probability that no atom is inside the circuit region.
	"""

	time: float
	state: np.ndarray
	outside_probability: float

	def spin_state(self, configuration: ChainConfiguration, spatial: SectorBasis) -> np.ndarray:
		"""Unnormalized spin amplitudes attached to ``configuration``."""
		index = spatial.labels.index(configuration.word)
		width = self.state.shape[0] // spatial.dimension
		return self.state[index * width : (index + 1) * width]


def evolve_complete(
	hamiltonian: HermitianOperator,
	spec: LatticeSpec,
	t: float,
	spins: str | None = None,
) -> CompleteEvolution:
	"""
	Evolve ``|initial chain> x |spins>`` for time ``t``.

	Args:
		hamiltonian: Output of :func:`build_complete` for ``spec``.
		spec: The lattice.
		t: Evolution time.
		spins: One ``u``/``d`` letter per chain row; all up by default.

	Raises:
		PreconditionError: If ``spins`` has the wrong length or alphabet.
	"""
	spins = spins if spins is not None else 'u' * spec.rows
	if len(spins) != spec.rows or set(spins) - {'u', 'd'}:
		raise PreconditionError('spin word', f'need {spec.rows} letters from u/d, got {spins!r}')
	chain = SectorBasis.connected_chain(spec)
	initial = np.zeros(hamiltonian.dimension, dtype=complex)
	initial[hamiltonian.index_of((initial_configuration(spec).word, spins))] = 1.0

	state = expm_multiply(-1j * t * hamiltonian.to_sparse(), initial)
	width = 2**spec.rows
	outside = sum(
		float(np.sum(np.abs(state[index * width : (index + 1) * width]) ** 2))
		for index, word in enumerate(chain.labels)
		if all_outside_region(ChainConfiguration(word), spec)
	)
	return CompleteEvolution(float(t), state, outside)
