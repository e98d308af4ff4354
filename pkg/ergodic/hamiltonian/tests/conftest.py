"""Shared fixtures for the Hamiltonian test suite."""

from typing import Callable

import pytest

from ergodic.configspace import LatticeSpec
from ergodic.hamiltonian import SectorBasis, SectorMode


@pytest.fixture
def make_sector() -> Callable[..., SectorBasis]:
	"""Factory fixture building a spatial sector of an n x n lattice."""

	def _make_sector(n: int, mode: SectorMode = SectorMode.CONNECTED_CHAIN, k: int = 1) -> SectorBasis:
		spec = LatticeSpec(n=n, k=k)
		if mode == SectorMode.ONE_ATOM_PER_ROW:
			return SectorBasis.one_atom_per_row(spec)
		return SectorBasis.connected_chain(spec)

	return _make_sector
