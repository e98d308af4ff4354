"""
Tests for the shared numerical limits.
"""

import dataclasses

import pytest

from ergodic import DEFAULT_LIMITS, Limits, __version__


class TestLimits:
	def test_defaults(self):
		assert DEFAULT_LIMITS == Limits(
			max_exact_n=8,
			max_sector_dimension=12870,
			dense_limit=4096,
			max_spinful_dimension=4096,
			bfs_node_cap=200_000,
			tolerance=1e-12,
			degeneracy_tolerance=1e-9,
		)

	def test_largest_exact_sector_fits(self):
		# C(2m, m) at n = 8, m = 7
		assert DEFAULT_LIMITS.max_sector_dimension >= 3432

	def test_is_frozen(self):
		with pytest.raises(dataclasses.FrozenInstanceError):
			DEFAULT_LIMITS.max_exact_n = 10

	def test_replace(self):
		limits = dataclasses.replace(DEFAULT_LIMITS, bfs_node_cap=5)

		assert limits.bfs_node_cap == 5
		assert DEFAULT_LIMITS.bfs_node_cap == 200_000


def test_version_is_exposed():
	assert __version__ == '0.1.1'
