"""
Typed error hierarchy for the ergodic toolkit.

Every failure raised by the simulators subclasses :class:`ErgodicError`, so
callers (the CLI in particular) can handle precondition violations, size
caps and failed numerical certificates with a single catch and still map
each kind to its own exit code.
"""

from typing import Any


class ErgodicError(Exception):
	"""Base error for all toolkit failures."""

	exit_code: int = 1


class PreconditionError(ErgodicError):
	"""
	Raised when an operation is invoked outside its precondition.

	Attributes:
		name: Short name of the violated precondition.
		detail: Human readable explanation.
	"""

	exit_code = 2

	def __init__(self, name: str, detail: str):
		self.name = name
		self.detail = detail
		super().__init__(f'precondition {name!r} violated: {detail}')


class SizeCapError(ErgodicError):
	"""
	Raised when an exact computation would exceed its configured size cap.

	Attributes:
		what: The quantity that is capped (sector dimension, node count...).
		size: The size that was requested.
		cap: The configured cap.
	"""

	exit_code = 2

	def __init__(self, what: str, size: int, cap: int):
		self.what = what
		self.size = size
		self.cap = cap
		super().__init__(f'{what} of size {size} exceeds the cap {cap}')


class SpectralGapError(ErgodicError):
	"""
	Raised when no spectral gap separates the expected low-energy sector.

	Attributes:
		expected: Number of eigenvalues expected below the cutoff.
		found: Number of eigenvalues actually found below the cutoff.
	"""

	def __init__(self, expected: int, found: int, detail: str = ''):
		self.expected = expected
		self.found = found
		message = f'expected {expected} eigenvalues below the cutoff, found {found}'
		super().__init__(f'{message}: {detail}' if detail else message)


class SingularResolventError(ErgodicError):
	"""
	Raised when ``1 - K++ G+(z)`` cannot be inverted reliably.

	Attributes:
		z: The spectral parameter.
		condition: Estimated condition number of the matrix.
	"""

	def __init__(self, z: complex, condition: float):
		self.z = z
		self.condition = condition
		super().__init__(f'resolvent is singular at z={z!r} (condition estimate {condition:.3e})')


class GridTooShortError(ErgodicError):
	"""
	Raised when no point of a time grid reaches the requested expectation.

	Attributes:
		target: The expectation value that had to be reached.
		reached: The largest value seen on the grid.
	"""

	def __init__(self, target: float, reached: float):
		self.target = target
		self.reached = reached
		super().__init__(f'time grid never reaches E_t(N) >= {target:.6g}; maximum seen {reached:.6g}')


class RegionOverflowError(ErgodicError):
	"""
	Raised when a layout needs more columns than the circuit region offers.

	Attributes:
		required_k: Smallest region side that would fit the layout.
		available_k: Region side of the lattice.
	"""

	exit_code = 2

	def __init__(self, required_k: int, available_k: int):
		self.required_k = required_k
		self.available_k = available_k
		super().__init__(f'layout needs a circuit region of side {required_k}, lattice offers {available_k}')


class DisconnectedGraphError(ErgodicError):
	"""
	Raised when a configuration graph has more than one connected component.

	Attributes:
		components: Number of connected components.
	"""

	def __init__(self, components: int):
		self.components = components
		super().__init__(f'configuration graph is disconnected ({components} components)')


class CheckFailedError(ErgodicError):
	"""
	Raised when at least one verdict of a verification run failed.

	Attributes:
		verdicts: The failing verdicts, as dictionaries.
	"""

	def __init__(self, verdicts: list[dict[str, Any]]):
		self.verdicts = verdicts
		names = ', '.join(str(v.get('name')) for v in verdicts)
		super().__init__(f'{len(verdicts)} check(s) failed: {names}')
