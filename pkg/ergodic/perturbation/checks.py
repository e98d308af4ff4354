"""
Exact small-lattice checks of the effective-Hamiltonian guarantees.

All work happens on the one-atom-per-row sector, where ``H_pot`` is
diagonal with the connected chains as its zero-energy space and every torn
chain at least ``E`` higher.
"""

import math
from dataclasses import asdict, dataclass, field
from typing import Any, Sequence

import numpy as np
from scipy import linalg

from ergodic.configspace import LatticeSpec
from ergodic.exceptions import PreconditionError, SpectralGapError
from ergodic.hamiltonian import (
	SectorBasis,
	build_Hpot,
	build_K,
	effective_hamiltonian,
)
from ergodic.perturbation.split import SpectralSplit, self_energy, self_energy_derivative
from ergodic.settings import DEFAULT_LIMITS, Limits

SLOPE_RANGE = (-1.1, -0.9)


@dataclass(frozen=True, eq=False)
class SplitProblem:
	"""
	``H_pot`` and ``K`` on the one-atom-per-row sector, split at ``E/2``.

	Attributes:
		spec: The lattice.
		E: Binding energy.
		sector: The one-atom-per-row sector.
		potential: ``H_pot`` as a dense matrix.
		hopping: ``K`` as a dense matrix.
		split: ``H_pot`` split at ``lambda_* = E/2`` with gap ``E``; ``P_-`` in H_c order.
		effective: ``H_eff`` on H_c.
	"""

	spec: LatticeSpec
	E: float
	sector: SectorBasis
	potential: np.ndarray
	hopping: np.ndarray
	split: SpectralSplit
	effective: np.ndarray

	@property
	def chain_indices(self) -> list[int]:
		return self.sector.chain_indices()

	@property
	def hamiltonian(self) -> np.ndarray:
		return self.potential + self.hopping


def split_problem(n: int, E: float, limits: Limits = DEFAULT_LIMITS) -> SplitProblem:
	"""
	Build the split problem of an ``n x n`` lattice.

	Raises:
		PreconditionError: If ``E <= 0`` or ``n`` exceeds ``limits.max_exact_n``.
		SizeCapError: If the one-atom-per-row sector exceeds the cap.
	"""
	if n > limits.max_exact_n:
		raise PreconditionError('n <= max exact size', f'n={n} > {limits.max_exact_n}')
	spec = LatticeSpec(n=n)
	sector = SectorBasis.one_atom_per_row(spec, limits)
	potential = build_Hpot(spec, E, sector).to_dense()
	hopping = build_K(spec, sector).to_dense()
	split = SpectralSplit.from_operator(potential, E / 2, E, minus_order=sector.chain_indices(), limits=limits)
	effective = effective_hamiltonian(spec, E, limits).to_dense()
	return SplitProblem(spec, E, sector, potential, hopping, split, effective)


@dataclass(frozen=True)
class Lemma1Result:
	"""
	Distance between the low-energy part of ``H_pot + K`` and ``H_eff``.

	Attributes:
		n: Lattice side.
		E: Binding energy.
		lhs: ``||Omega Lambda Omega^dagger - H_eff||``.
		rhs: ``9 n^3 / sqrt(E)``.
	"""

	n: int
	E: float
	lhs: float
	rhs: float

	@property
	def holds(self) -> bool:
		return self.lhs <= self.rhs

	@property
	def margin(self) -> float:
		return self.rhs - self.lhs

	def to_dict(self) -> dict[str, Any]:
		return asdict(self) | {'holds': self.holds, 'margin': self.margin}


def low_energy_representation(problem: SplitProblem) -> np.ndarray:
	"""
	The part of ``H_pot + K`` below ``E/2``, carried onto H_c.

	The low eigenvectors Y are identified with H_c through the unitary polar
	factor of ``P_- Y``, the rotation closest to the overlap matrix.

	Raises:
		SpectralGapError: If the number of eigenvalues below ``E/2`` differs from ``dim H_c``.
	"""
	values, vectors = linalg.eigh(problem.hamiltonian)
	low = values < problem.E / 2
	chain = problem.chain_indices
	if int(low.sum()) != len(chain):
		raise SpectralGapError(len(chain), int(low.sum()), f'E={problem.E} is too small for a gap at E/2')
	overlap = vectors[np.ix_(chain, np.flatnonzero(low))]
	rotation, _ = linalg.polar(overlap)
	return (rotation * values[low]) @ rotation.conj().T


def lemma1_check(n: int, E: float, limits: Limits = DEFAULT_LIMITS) -> Lemma1Result:
	problem = split_problem(n, E, limits)
	lhs = float(np.linalg.norm(low_energy_representation(problem) - problem.effective, 2))
	return Lemma1Result(n, float(E), lhs, 9 * n**3 / math.sqrt(E))


@dataclass(frozen=True)
class Lemma1Sweep:
	"""
	The low-energy distance check over several energies with the fitted log-log slope of the distance.

	The distance is second order in ``K / E``, so the slope is close to -1.
	"""

	results: tuple[Lemma1Result, ...]
	slope: float

	@property
	def monotone(self) -> bool:
		return all(b.lhs < a.lhs for a, b in zip(self.results, self.results[1:]))

	@property
	def holds(self) -> bool:
		bounded = all(result.holds for result in self.results)
		return bounded and self.monotone and SLOPE_RANGE[0] <= self.slope <= SLOPE_RANGE[1]

	def to_dict(self) -> dict[str, Any]:
		return {
			'results': [result.to_dict() for result in self.results],
			'slope': self.slope,
			'monotone': self.monotone,
			'holds': self.holds,
		}


def lemma1_sweep(n: int, energies: Sequence[float], limits: Limits = DEFAULT_LIMITS) -> Lemma1Sweep:
	"""
	Run :func:`lemma1_check` for ascending ``energies``.

	Raises:
		PreconditionError: For fewer than two energies.
	"""
	if len(energies) < 2:
		raise PreconditionError('at least two energies', f'{len(energies)} given')
	results = tuple(lemma1_check(n, E, limits) for E in sorted(energies))
	slope, _ = np.polyfit(np.log([r.E for r in results]), np.log([r.lhs for r in results]), 1)
	return Lemma1Sweep(results, float(slope))


@dataclass(frozen=True)
class Theorem1Record:
	t: float
	lhs: float
	rhs: float


@dataclass(frozen=True)
class Theorem1Result:
	"""
	Worst distance between the exact and the effective evolution of any chain basis state.

	Attributes:
		n: Lattice side.
		E: Binding energy.
		epsilon: The low-energy distance bound ``9 n^3 / sqrt(E)``, used as drift rate.
		records: Per time, the worst ``lhs`` and the bound ``epsilon t + 2n sqrt(2/E)``.
	"""

	n: int
	E: float
	epsilon: float
	records: tuple[Theorem1Record, ...] = field(default=())

	@property
	def max_deviation(self) -> float:
		return max(record.lhs - record.rhs for record in self.records)

	@property
	def holds(self) -> bool:
		return self.max_deviation <= 0

	def to_dict(self) -> dict[str, Any]:
		return asdict(self) | {'max_deviation': self.max_deviation, 'holds': self.holds}


def theorem1_check(n: int, E: float, times: Sequence[float], limits: Limits = DEFAULT_LIMITS) -> Theorem1Result:
	"""
	Compare ``e^{-i (H_pot + K) t}`` with ``e^{-i H_eff t}`` on every chain basis state.

	Raises:
		PreconditionError: For an empty time grid.
	"""
	if not len(times):
		raise PreconditionError('non-empty time grid', 'no times given')
	problem = split_problem(n, E, limits)
	chain = problem.chain_indices
	values, vectors = linalg.eigh(problem.hamiltonian)
	eff_values, eff_vectors = linalg.eigh(problem.effective)
	epsilon = 9 * n**3 / math.sqrt(E)

	records = []
	for t in times:
		exact = (vectors * np.exp(-1j * values * t)) @ vectors.conj().T[:, chain]
		reduced = (eff_vectors * np.exp(-1j * eff_values * t)) @ eff_vectors.conj().T
		embedded = np.zeros_like(exact)
		embedded[chain] = reduced
		lhs = float(np.max(np.linalg.norm(exact - embedded, axis=0)))
		records.append(Theorem1Record(float(t), lhs, epsilon * t + 2 * n * math.sqrt(2 / E)))
	return Theorem1Result(n, float(E), epsilon, tuple(records))


@dataclass(frozen=True)
class SelfEnergySample:
	z: complex
	distance: float
	greens_norm: float
	derivative_drift: float


@dataclass(frozen=True)
class SelfEnergyCheck:
	"""
	Self-energy samples on the disk ``|z| <= sqrt(E)``.

	Attributes:
		n: Lattice side.
		E: Binding energy.
		distance_bound: ``4 n^4 / E`` for ``||Sigma_-(z) - H_eff||``.
		greens_bound: ``2 / E`` for ``||G_+(z)||``.
		samples: One record per sampled z.
	"""

	n: int
	E: float
	distance_bound: float
	greens_bound: float
	samples: tuple[SelfEnergySample, ...]

	@property
	def holds(self) -> bool:
		return all(
			s.distance <= self.distance_bound and s.greens_norm <= self.greens_bound and s.derivative_drift <= 1e-6
			for s in self.samples
		)

	def to_dict(self) -> dict[str, Any]:
		samples = [
			{'z_re': s.z.real, 'z_im': s.z.imag, **{k: v for k, v in asdict(s).items() if k != 'z'}}
			for s in self.samples
		]
		return {
			'n': self.n,
			'E': self.E,
			'distance_bound': self.distance_bound,
			'greens_bound': self.greens_bound,
			'samples': samples,
			'holds': self.holds,
		}


def self_energy_check(
	n: int,
	E: float,
	samples: int = 10,
	seed: int = 0,
	h: float = 1e-2,
	limits: Limits = DEFAULT_LIMITS,
) -> SelfEnergyCheck:
	"""
	Sample ``z`` uniformly on ``|z| <= sqrt(E)`` and compare ``Sigma_-(z)`` with ``H_eff``.

	The derivative drift is the distance between central differences with
	steps ``h`` and ``h/2``, relative to the larger of 1 and their size.
	"""
	problem = split_problem(n, E, limits)
	rng = np.random.default_rng(seed)
	radius = math.sqrt(E) * np.sqrt(rng.uniform(size=samples))
	angle = rng.uniform(0.0, 2 * math.pi, size=samples)

	records = []
	for z in radius * np.exp(1j * angle):
		sigma = self_energy(problem.split, problem.hopping, z)
		coarse = self_energy_derivative(problem.split, problem.hopping, z, h)
		fine = self_energy_derivative(problem.split, problem.hopping, z, h / 2)
		drift = float(np.linalg.norm(coarse - fine, 2) / max(1.0, np.linalg.norm(fine, 2)))
		distance = float(np.linalg.norm(sigma.value - problem.effective, 2))
		records.append(SelfEnergySample(complex(z), distance, sigma.greens_norm, drift))
	return SelfEnergyCheck(n, float(E), 4 * n**4 / E, 2 / E, tuple(records))
