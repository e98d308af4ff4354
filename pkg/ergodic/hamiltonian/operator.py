"""
Matrix carrier for Hamiltonians, projectors and propagators.

Operators are stored dense up to ``Limits.dense_limit`` and as scipy CSR
matrices above it. Every operator carries its ordered basis labels so that
exports can be cross-checked against independent tooling.
"""

import json
from dataclasses import dataclass, field
from typing import Any, Iterable, Sequence

import numpy as np
from scipy import sparse
from scipy.sparse import linalg as sparse_linalg
from typing_extensions import Self

from ergodic.exceptions import PreconditionError
from ergodic.settings import DEFAULT_LIMITS, Limits

Matrix = np.ndarray | sparse.csr_matrix


def format_number(value: float) -> str:
	"""Render a float with 17 significant digits."""
	return format(float(value), '.17g')


def _label_text(label: Any) -> str:
	if isinstance(label, str):
		return label
	if isinstance(label, tuple):
		return '|'.join(_label_text(part) for part in label)
	return str(label)


@dataclass(frozen=True, eq=False)
class HermitianOperator:
	"""
	A complex square matrix together with its basis labels.

	Attributes:
		matrix: Dense ndarray or CSR matrix.
		basis: Ordered basis labels, one per row.
		name: Optional name used in exports.
	"""

	matrix: Matrix
	basis: tuple[Any, ...]
	name: str = ''
	_index: dict[Any, int] = field(default_factory=dict, init=False, repr=False)

	def __post_init__(self) -> None:
		rows, cols = self.matrix.shape
		if rows != cols:
			raise PreconditionError('square matrix', f'shape {self.matrix.shape}')
		if rows != len(self.basis):
			raise PreconditionError('dimension matches basis', f'{rows} rows for {len(self.basis)} labels')

	@classmethod
	def from_matrix(
		cls,
		matrix: Any,
		basis: Sequence[Any],
		name: str = '',
		limits: Limits = DEFAULT_LIMITS,
	) -> Self:
		"""Store ``matrix`` dense or sparse according to its dimension."""
		dimension = matrix.shape[0]
		if dimension > limits.dense_limit:
			stored: Matrix = sparse.csr_matrix(matrix, dtype=complex)
		elif sparse.issparse(matrix):
			stored = np.asarray(matrix.toarray(), dtype=complex)
		else:
			stored = np.asarray(matrix, dtype=complex)
		return cls(stored, tuple(basis), name)

	@classmethod
	def from_entries(
		cls,
		entries: Iterable[tuple[int, int, complex]],
		basis: Sequence[Any],
		name: str = '',
		limits: Limits = DEFAULT_LIMITS,
	) -> Self:
		"""Build from (row, col, value) entries; duplicates are summed."""
		rows, cols, values = [], [], []
		for row, col, value in entries:
			rows.append(row)
			cols.append(col)
			values.append(value)
		dimension = len(basis)
		coo = sparse.coo_matrix((np.asarray(values, dtype=complex), (rows, cols)), shape=(dimension, dimension))
		return cls.from_matrix(coo.tocsr(), basis, name, limits)

	@classmethod
	def from_triplets(cls, text: str, basis: Sequence[Any], name: str = '') -> Self:
		"""Inverse of :meth:`to_triplets`."""
		entries = []
		for line in text.splitlines():
			if not line.strip():
				continue
			row, col, re, im = line.split()
			entries.append((int(row), int(col), complex(float(re), float(im))))
		return cls.from_entries(entries, basis, name)

	@property
	def dimension(self) -> int:
		return self.matrix.shape[0]

	@property
	def is_sparse(self) -> bool:
		return sparse.issparse(self.matrix)

	def index_of(self, label: Any) -> int:
		if not self._index:
			self._index.update({lbl: i for i, lbl in enumerate(self.basis)})
		return self._index[label]

	def to_dense(self) -> np.ndarray:
		if self.is_sparse:
			return np.asarray(self.matrix.toarray())
		return np.asarray(self.matrix)

	def to_sparse(self) -> sparse.csr_matrix:
		return sparse.csr_matrix(self.matrix)

	def hermiticity_defect(self) -> float:
		"""Largest entry of ``|M - M^dagger|``."""
		diff = self.matrix - self.matrix.conj().T
		if sparse.issparse(diff):
			return float(abs(diff).max()) if diff.nnz else 0.0
		return float(np.max(np.abs(diff))) if diff.size else 0.0

	def is_hermitian(self, tol: float = DEFAULT_LIMITS.tolerance) -> bool:
		return self.hermiticity_defect() <= tol

	def norm(self) -> float:
		"""Spectral norm (largest absolute eigenvalue for Hermitian operators)."""
		if not self.is_sparse:
			return float(np.linalg.norm(self.to_dense(), 2)) if self.dimension else 0.0
		if self.is_hermitian():
			eigenvalue = sparse_linalg.eigsh(self.matrix, k=1, which='LM', return_eigenvectors=False)
			return float(abs(eigenvalue[0]))
		singular = sparse_linalg.svds(self.matrix, k=1, return_singular_vectors=False)
		return float(singular[0])

	def eigenvalues(self) -> np.ndarray:
		"""Ascending eigenvalues of a Hermitian operator (dense computation)."""
		return np.linalg.eigvalsh(self.to_dense())

	def restrict(self, indices: Sequence[int], name: str = '') -> 'HermitianOperator':
		"""Compress onto the basis states at ``indices`` (in the given order)."""
		idx = np.asarray(indices, dtype=int)
		block = self.to_sparse()[idx][:, idx] if self.is_sparse else self.to_dense()[np.ix_(idx, idx)]
		return HermitianOperator.from_matrix(block, [self.basis[i] for i in idx], name or self.name)

	def embed(self, indices: Sequence[int], basis: Sequence[Any], name: str = '') -> 'HermitianOperator':
		"""Place this operator on the states at ``indices`` of a larger basis, zero elsewhere."""
		idx = np.asarray(indices, dtype=int)
		if len(idx) != self.dimension:
			raise PreconditionError('one index per state', f'{len(idx)} indices for dimension {self.dimension}')
		coo = sparse.coo_matrix(self.matrix)
		shape = (len(basis), len(basis))
		embedded = sparse.coo_matrix((coo.data, (idx[coo.row], idx[coo.col])), shape=shape).tocsr()
		return HermitianOperator.from_matrix(embedded, basis, name or self.name)

	def kron_identity(self, labels: Sequence[Any], name: str = '') -> 'HermitianOperator':
		"""Tensor with the identity on a factor with the given labels."""
		identity = sparse.identity(len(labels), dtype=complex, format='csr')
		product = sparse.kron(self.to_sparse(), identity, format='csr')
		basis = [(left, right) for left in self.basis for right in labels]
		return HermitianOperator.from_matrix(product, basis, name or self.name)

	def __add__(self, other: 'HermitianOperator') -> 'HermitianOperator':
		if self.basis != other.basis:
			raise PreconditionError('same basis', f'{self.name!r} and {other.name!r} live on different bases')
		if self.is_sparse or other.is_sparse:
			return HermitianOperator.from_matrix(self.to_sparse() + other.to_sparse(), self.basis, self.name)
		return HermitianOperator.from_matrix(self.to_dense() + other.to_dense(), self.basis, self.name)

	def __sub__(self, other: 'HermitianOperator') -> 'HermitianOperator':
		return self + other.scaled(-1.0)

	def scaled(self, factor: complex) -> 'HermitianOperator':
		return HermitianOperator.from_matrix(self.matrix * factor, self.basis, self.name)

	def __matmul__(self, other: Any) -> Any:
		if isinstance(other, HermitianOperator):
			return HermitianOperator.from_matrix(self.matrix @ other.matrix, self.basis)
		return self.matrix @ other

	def to_triplets(self) -> str:
		"""Nonzero entries as ``row col re im`` lines, row-major."""
		coo = sparse.coo_matrix(self.matrix)
		order = np.lexsort((coo.col, coo.row))
		lines = []
		for position in order:
			value = complex(coo.data[position])
			if value == 0:
				continue
			lines.append(
				f'{coo.row[position]} {coo.col[position]} {format_number(value.real)} {format_number(value.imag)}'
			)
		return '\n'.join(lines) + ('\n' if lines else '')

	def to_json(self) -> dict[str, Any]:
		"""JSON-ready dictionary with basis labels and triplets."""
		coo = sparse.coo_matrix(self.matrix)
		order = np.lexsort((coo.col, coo.row))
		entries = [
			[int(coo.row[p]), int(coo.col[p]), float(coo.data[p].real), float(coo.data[p].imag)]
			for p in order
			if coo.data[p] != 0
		]
		return {
			'name': self.name,
			'dimension': self.dimension,
			'basis': [_label_text(label) for label in self.basis],
			'entries': entries,
		}

	def dumps(self) -> str:
		return json.dumps(self.to_json(), sort_keys=True)
