"""
Tests for the labelled operator carrier and its exports.
"""

import numpy as np
import pytest

from ergodic.exceptions import PreconditionError
from ergodic.hamiltonian import HermitianOperator, format_number
from ergodic.settings import Limits


def _path(size: int, limits: Limits = Limits()) -> HermitianOperator:
	entries = [(i, i + 1, 1.0) for i in range(size - 1)] + [(i + 1, i, 1.0) for i in range(size - 1)]
	return HermitianOperator.from_entries(entries, [str(i) for i in range(size)], 'path', limits)


class TestConstruction:
	def test_duplicates_are_summed(self):
		op = HermitianOperator.from_entries([(0, 1, 1.0), (0, 1, 2.0), (1, 0, 3.0)], ['a', 'b'])

		assert op.to_dense()[0, 1] == 3.0

	def test_rejects_basis_mismatch(self):
		with pytest.raises(PreconditionError):
			HermitianOperator.from_matrix(np.eye(3), ['a', 'b'])

	def test_sparse_above_dense_limit(self):
		op = _path(6, Limits(dense_limit=4))

		assert op.is_sparse
		assert op.norm() == pytest.approx(2 * np.cos(np.pi / 7))
		assert not _path(4, Limits(dense_limit=4)).is_sparse


class TestAlgebra:
	def test_hermiticity(self):
		assert _path(5).is_hermitian()
		skew = HermitianOperator.from_matrix(np.array([[0, 1], [0, 0]]), ['a', 'b'])
		assert skew.hermiticity_defect() == 1.0

	def test_norm_and_spectrum(self):
		op = _path(4)

		assert op.norm() == pytest.approx(2 * np.cos(np.pi / 5))
		assert np.allclose(op.eigenvalues(), sorted(2 * np.cos(np.pi * r / 5) for r in range(1, 5)))

	def test_restrict_and_embed(self):
		op = _path(5)
		block = op.restrict([1, 2, 3])

		assert block.basis == ('1', '2', '3')
		assert np.allclose(block.embed([1, 2, 3], op.basis).restrict([1, 2, 3]).to_dense(), block.to_dense())
		assert block.embed([1, 2, 3], op.basis).to_dense()[0].sum() == 0

	def test_sum_requires_same_basis(self):
		with pytest.raises(PreconditionError, match='same basis'):
			_ = _path(2) + HermitianOperator.from_matrix(np.eye(2), ['x', 'y'])

	def test_sum_and_difference(self):
		op = _path(3)

		assert np.allclose((op + op).to_dense(), 2 * op.to_dense())
		assert np.allclose((op - op).to_dense(), 0)

	def test_kron_identity_labels(self):
		op = _path(2).kron_identity(['u', 'd'])

		assert op.basis == (('0', 'u'), ('0', 'd'), ('1', 'u'), ('1', 'd'))
		assert np.allclose(op.to_dense(), np.kron([[0, 1], [1, 0]], np.eye(2)))


class TestExports:
	def test_triplets(self):
		assert _path(2).to_triplets() == '0 1 1 0\n1 0 1 0\n'

	def test_triplets_round_trip(self):
		op = HermitianOperator.from_matrix(np.array([[0.1, 1 / 3 + 0.5j], [1 / 3 - 0.5j, -2.0]]), ['a', 'b'])
		restored = HermitianOperator.from_triplets(op.to_triplets(), op.basis)

		assert np.array_equal(restored.to_dense(), op.to_dense())

	def test_json(self):
		op = HermitianOperator.from_matrix(np.eye(2), [('01', 'ud'), ('10', 'du')], 'H')
		payload = op.to_json()

		assert payload['basis'] == ['01|ud', '10|du']
		assert payload['entries'] == [[0, 0, 1.0, 0.0], [1, 1, 1.0, 0.0]]
		assert payload['dimension'] == 2

	def test_format_number(self):
		assert format_number(0.1) == '0.10000000000000001'
		assert format_number(2.0) == '2'
