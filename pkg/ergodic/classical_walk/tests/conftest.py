"""Shared fixtures for the classical walk test suite."""

from typing import Callable

import pytest

from ergodic.classical_walk import BoardSpec, ConfigGraph, build_graph


@pytest.fixture
def make_graph() -> Callable[..., ConfigGraph]:
	"""Factory fixture building the configuration graph of a board."""

	def _make_graph(rows: int, cols: int, k: int = 0) -> ConfigGraph:
		return build_graph(BoardSpec(rows, cols, k))

	return _make_graph


@pytest.fixture
def strip_graph(make_graph) -> ConfigGraph:
	"""Two rows on seven columns; the reachable set is a 13-node path."""
	return make_graph(2, 7, 1)
