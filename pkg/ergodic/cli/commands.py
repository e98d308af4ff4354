"""
One command class per subcommand.

Each command is :class:`~ergodic.tracing.Traced`; its numerical stages are
``@trace`` methods, so the JSON artifact records what was computed. A
command writes its artifacts, prints one verdict line per checked bound and
raises :class:`~ergodic.exceptions.CheckFailedError` if any bound failed.
"""

import json
import math
from pathlib import Path
from typing import Any

import numpy as np

from ergodic.classical_walk import (
	BoardSpec,
	ConfigGraph,
	board_energy,
	build_graph,
	coherent_walk,
	distribution_csv,
	edge_list_text,
	effective_hamiltonian_check,
	evolve_walk,
	is_valid_configuration,
	mixing_time,
	neighbouring_moves,
	node_table_csv,
	outside_probability_stationary,
	point_distribution,
	reflect,
	stationary_distribution,
)
from ergodic.cli.artifacts import Verdict, envelope, write_csv, write_json, write_text
from ergodic.cli.config import RunConfig
from ergodic.configspace import (
	ChainConfiguration,
	LatticeSpec,
	all_outside_region,
	config_count,
	enumerate_configs,
	move_graph_bfs,
)
from ergodic.exceptions import CheckFailedError, PreconditionError, SizeCapError
from ergodic.fermion_walk import (
	PassingTimeResult,
	ReadoutCheck,
	WalkObservables,
	default_time_grid,
	ergodic_readout_check,
	outside_probability_exact,
	passing_time_check,
	walk_observables,
	within_exact_cap,
)
from ergodic.hamiltonian import CompleteEvolution, HermitianOperator, build_complete, evolve_complete, format_number
from ergodic.holonomy import GateReport, one_qubit_gate, phase_stripped_distance, two_qubit_gate
from ergodic.layout import (
	BlockSpec,
	CircuitLayout,
	LogicalCircuit,
	Violation,
	circuit_unitary,
	compile_circuit,
	layout_from_json,
	layout_unitary,
	margolus_tiling,
	random_circuit,
	render_text,
	validate,
)
from ergodic.perturbation import (
	Lemma1Result,
	Lemma1Sweep,
	SelfEnergyCheck,
	Theorem1Result,
	lemma1_check,
	lemma1_sweep,
	self_energy_check,
	theorem1_check,
)
from ergodic.settings import DEFAULT_LIMITS, Limits
from ergodic.tracing import Traced, trace

FIDELITY_TARGET = 0.999
IDENTITY_TOLERANCE = 1e-9
STRUCTURE_TOLERANCE = 1e-12
MIXING_TOLERANCE = 1e-8
WALK_COLUMNS = ['t', 'E', 'V', 'cheb_bound', 'exact_prob']

Outcome = tuple[list[Verdict], dict[str, Any]]


class Command(Traced):
	"""
	Base class of the subcommands.

	Subclasses set ``NAME`` (the subcommand and the JSON artifact stem) and
	implement :meth:`execute`.
	"""

	NAME = ''

	def __init__(self, config: RunConfig, limits: Limits = DEFAULT_LIMITS):
		self.config = config
		self.limits = limits

	@property
	def artifact_stem(self) -> str:
		return self.NAME.replace('-', '_')

	def path(self, name: str) -> Path:
		return self.config.output_dir / name

	def execute(self) -> Outcome:
		raise NotImplementedError

	def run(self) -> list[Verdict]:
		"""
		Execute, write the JSON artifact and print the verdict lines.

		Raises:
			CheckFailedError: If a verdict failed; artifacts are written first.
		"""
		verdicts, results = self.execute()
		payload = envelope(self.config, verdicts, results, self.trace_summary())
		write_json(self.path(f'{self.artifact_stem}.json'), payload)
		for verdict in verdicts:
			print(verdict.line())
		failed = [verdict.to_dict() for verdict in verdicts if not verdict.passed]
		if failed:
			raise CheckFailedError(failed)
		return verdicts


def _lattice(config: RunConfig) -> LatticeSpec:
	return LatticeSpec(n=config.n, k=config.lattice_k)


def _time_grid(config: RunConfig, default_end: float) -> np.ndarray:
	end = default_end if config.t_max is None else config.t_max
	return np.linspace(0.0, end, config.points)


def _schedule(config: RunConfig) -> dict[str, Any]:
	return {'profile': config.profile, 'jitter': config.jitter, 'seed': config.seed}


class ConfigspaceCommand(Command):
	NAME = 'configspace'

	@trace(capture_output=False)
	def enumerate_words(self, spec: LatticeSpec) -> list[ChainConfiguration]:
		count = config_count(spec)
		if count > self.limits.max_sector_dimension:
			raise SizeCapError('configuration space', count, self.limits.max_sector_dimension)
		return enumerate_configs(spec)

	@trace(capture_output=False)
	def close_move_graph(self, spec: LatticeSpec) -> list[ChainConfiguration]:
		return move_graph_bfs(spec)

	def execute(self) -> Outcome:
		spec = _lattice(self.config)
		words = self.enumerate_words(spec)
		closure = self.close_move_graph(spec)
		write_text(self.path('configs.txt'), ''.join(f'{c.word}\n' for c in words))
		if self.config.dump:
			for c in words:
				print(c.word)

		expected = config_count(spec)
		verdicts = [
			Verdict('config-count', len(words) == expected, len(words), expected),
			Verdict('move-graph-closure', closure == words, len(closure), len(words)),
		]
		results = {
			'n': spec.n,
			'k': spec.k,
			'm': spec.m,
			'count': len(words),
			'outside_region': sum(all_outside_region(c, spec) for c in words),
		}
		return verdicts, results


class WalkCommand(Command):
	NAME = 'walk'

	@trace(capture_output=False)
	def observe(self, m: int, k: int, times: np.ndarray) -> WalkObservables:
		return walk_observables(m, k, times, exact=within_exact_cap(m, self.limits), limits=self.limits)

	@trace()
	def passing_time(self, m: int, k: int, times: np.ndarray) -> PassingTimeResult:
		return passing_time_check(m, k, times, self.limits)

	def execute(self) -> Outcome:
		m, k = self.config.m, self.config.walk_k
		if self.config.t_max is None:
			times = default_time_grid(m, self.config.points)
		else:
			times = _time_grid(self.config, 0.0)
		observables = self.observe(m, k, times)
		passing = self.passing_time(m, k, times)
		write_csv(self.path('walk.csv'), WALK_COLUMNS, observables.rows())

		verdicts = [
			Verdict.at_most(
				'variance-below-expectation',
				float(np.max(observables.variance - observables.expectation)),
				STRUCTURE_TOLERANCE,
			),
			Verdict.at_most('passing-time', passing.failure_bound, passing.theorem_bound),
			Verdict.at_most('t-star', passing.t_star, 8 * k),
		]
		if passing.exact_outside_probability is not None:
			verdicts.append(
				Verdict.at_least('exact-outside-probability', passing.exact_outside_probability, max(0.0, 1 - 12 / k))
			)
		results = {'m': m, 'k': k, 'points': len(times), 't_star': passing.t_star, 'passing': passing.to_dict()}
		return verdicts, results


class TimeAverageCommand(Command):
	NAME = 'timeavg'

	@trace()
	def readout(self, m: int) -> ReadoutCheck:
		return ergodic_readout_check(m, self.limits)

	def execute(self) -> Outcome:
		m = self.config.m
		check = self.readout(m)
		measured = check.exact_probability if check.exact_probability is not None else check.bound
		verdicts = [
			Verdict('readout', check.holds, measured, check.bound),
			Verdict.at_most('expectation-offset', abs(check.expectation - m / 2) / math.sqrt(m), 1.0),
			Verdict.at_most('variance-wick-bound', check.variance, check.variance_bound + IDENTITY_TOLERANCE),
		]
		return verdicts, check.to_dict()


class PassingTimeCommand(Command):
	NAME = 'passing-time'

	@trace()
	def passing_time(self, m: int, k: int) -> PassingTimeResult:
		times = None if self.config.t_max is None else _time_grid(self.config, 0.0)
		return passing_time_check(m, k, times, self.limits)

	def execute(self) -> Outcome:
		m, k = self.config.m, self.config.walk_k
		result = self.passing_time(m, k)
		verdicts = [
			Verdict.at_most('passing-time', result.failure_bound, result.theorem_bound),
			Verdict.at_most('t-star', result.t_star, 8 * k),
		]
		if result.exact_outside_probability is not None:
			verdicts.append(
				Verdict.at_least('exact-outside-probability', result.exact_outside_probability, max(0.0, 1 - 12 / k))
			)
		return verdicts, result.to_dict()


class HolonomyCommand(Command):
	NAME = 'holonomy'

	@trace(capture_output=False)
	def integrate(self, phi: float, axis: str, l: int, tau_step: float) -> GateReport:
		return one_qubit_gate(phi, axis, l, tau_step, **_schedule(self.config))

	def execute(self) -> Outcome:
		config = self.config
		ls = sorted(set(config.l))
		reports = [self.integrate(config.phi, config.axis, l, config.tau_step) for l in ls]
		final = reports[-1]
		verdicts = [Verdict.at_least(f'fidelity[l={ls[-1]}]', final.fidelity, FIDELITY_TARGET)]
		if len(ls) > 1:
			rows = [(l, r.fidelity, r.distance, r.leakage) for l, r in zip(ls, reports)]
			write_csv(self.path('holonomy_sweep.csv'), ['l', 'fidelity', 'distance', 'leakage'], rows)
			gains = [b.fidelity - a.fidelity for a, b in zip(reports, reports[1:])]
			verdicts.append(Verdict('fidelity-improves', all(g >= 0 for g in gains), min(gains), 0.0))
		results = {'reports': [r.to_dict() for r in reports]}
		return verdicts, results


class TwoQubitCommand(Command):
	NAME = 'two-qubit'

	@trace(capture_output=False)
	def integrate(self, phi: float, l: int, tau_step: float) -> GateReport:
		return two_qubit_gate(phi, l, tau_step, **_schedule(self.config))

	def execute(self) -> Outcome:
		config = self.config
		report = self.integrate(config.phi, max(config.l), config.tau_step)
		down, up = report.branches['d'], report.branches['u']
		verdicts = [
			Verdict.at_most('control-down-identity', down.distance, IDENTITY_TOLERANCE),
			Verdict.at_least('control-up-fidelity', up.fidelity, FIDELITY_TARGET),
		]
		return verdicts, report.to_dict()


class Lemma1Command(Command):
	NAME = 'lemma1'

	@trace()
	def single(self, n: int, E: float) -> Lemma1Result:
		return lemma1_check(n, E, self.limits)

	@trace()
	def sweep(self, n: int, energies: list[float]) -> Lemma1Sweep:
		return lemma1_sweep(n, energies, self.limits)

	def execute(self) -> Outcome:
		n, energies = self.config.n, self.config.E
		if len(set(energies)) > 1:
			sweep = self.sweep(n, sorted(set(energies)))
			checks, results = list(sweep.results), sweep.to_dict()
		else:
			sweep = None
			single = self.single(n, energies[0])
			checks, results = [single], {'results': [single.to_dict()]}

		write_csv(self.path('lemma1.csv'), ['E', 'lhs', 'rhs'], [(r.E, r.lhs, r.rhs) for r in checks])
		verdicts = [Verdict.at_most(f'lemma1[E={format_number(r.E)}]', r.lhs, r.rhs) for r in checks]
		if sweep is not None:
			verdicts.append(Verdict('lemma1-decay', sweep.holds, sweep.slope, -1.0, 'log-log slope of the distance'))
		return verdicts, results


class Theorem1Command(Command):
	NAME = 'theorem1'

	@trace(capture_output=False)
	def compare(self, n: int, E: float, times: np.ndarray) -> Theorem1Result:
		return theorem1_check(n, E, times, self.limits)

	def execute(self) -> Outcome:
		times = _time_grid(self.config, 10.0)
		result = self.compare(self.config.n, self.config.E[0], times)
		write_csv(self.path('theorem1.csv'), ['t', 'lhs', 'rhs'], [(r.t, r.lhs, r.rhs) for r in result.records])
		verdicts = [Verdict.at_most('theorem1', result.max_deviation, 0.0, 'worst lhs - rhs over the grid')]
		return verdicts, result.to_dict()


class SelfEnergyCommand(Command):
	NAME = 'self-energy'

	@trace(capture_output=False)
	def sample(self, n: int, E: float, samples: int, seed: int) -> SelfEnergyCheck:
		return self_energy_check(n, E, samples, seed, limits=self.limits)

	def execute(self) -> Outcome:
		config = self.config
		check = self.sample(config.n, config.E[0], config.samples, config.seed)
		payload = check.to_dict()
		header = ['z_re', 'z_im', 'distance', 'greens_norm', 'derivative_drift']
		write_csv(self.path('self_energy.csv'), header, [[s[key] for key in header] for s in payload['samples']])
		verdicts = [
			Verdict.at_most('self-energy-distance', max(s.distance for s in check.samples), check.distance_bound),
			Verdict.at_most('greens-norm', max(s.greens_norm for s in check.samples), check.greens_bound),
			Verdict.at_most('derivative-drift', max(s.derivative_drift for s in check.samples), 1e-6),
		]
		return verdicts, payload


class LayoutCommand(Command):
	NAME = 'layout'

	@trace(capture_output=False)
	def place(self, circuit: LogicalCircuit, l: int, spec: LatticeSpec) -> CircuitLayout:
		return compile_circuit(circuit, l, spec)

	@trace()
	def check(self, layout: CircuitLayout) -> list[Violation]:
		return validate(layout)

	@trace()
	def compare(self, layout: CircuitLayout, circuit: LogicalCircuit) -> float:
		return phase_stripped_distance(layout_unitary(layout), circuit_unitary(circuit))

	def execute(self) -> Outcome:
		config = self.config
		spec = _lattice(config)
		rng = np.random.default_rng(config.seed)
		entries, drawings, violations, distances = [], [], 0, []
		for index in range(config.circuits):
			circuit = random_circuit(config.qubits, config.depth, rng)
			layout = self.place(circuit, config.l[0], spec)
			found = self.check(layout)
			distance = self.compare(layout, circuit)
			violations += len(found)
			distances.append(distance)
			drawings.append(f'# circuit {index}\n{render_text(layout)}')
			entries.append(
				{'layout': layout.to_json(), 'violations': [v.to_dict() for v in found], 'distance': distance}
			)
		write_text(self.path('layout.txt'), ''.join(drawings))
		verdicts = [
			Verdict.at_most('layout-violations', violations, 0),
			Verdict.at_most('layout-unitary-distance', max(distances), IDENTITY_TOLERANCE),
		]
		return verdicts, {'layouts': entries}


class MargolusCommand(Command):
	NAME = 'margolus'

	@trace(capture_output=False)
	def tile(self, ca_steps: int, cell_rows: int, width: int, spec: LatticeSpec) -> CircuitLayout:
		return margolus_tiling(ca_steps, cell_rows, BlockSpec('U', width), BlockSpec('V', width), spec)

	def execute(self) -> Outcome:
		config = self.config
		layout = self.tile(config.ca_steps, config.cell_rows, config.block_width, _lattice(config))
		found = validate(layout)
		write_text(self.path('margolus.txt'), render_text(layout))
		verdicts = [Verdict.at_most('margolus-violations', len(found), 0)]
		return verdicts, {'layout': layout.to_json(), 'violations': [v.to_dict() for v in found]}


class ClassicalWalkCommand(Command):
	NAME = 'classical-walk'

	@trace(capture_output=False)
	def build(self, spec: BoardSpec) -> ConfigGraph:
		return build_graph(spec, self.limits)

	@trace(capture_output=False)
	def stationary(self, graph: ConfigGraph) -> np.ndarray:
		return stationary_distribution(graph, self.limits)

	@trace()
	def mixing(self, graph: ConfigGraph) -> float:
		return mixing_time(graph, MIXING_TOLERANCE, self.limits)

	@trace(capture_output=False)
	def relax(self, graph: ConfigGraph, t: float) -> np.ndarray:
		return evolve_walk(graph, point_distribution(graph), t)

	def _conservation(self, graph: ConfigGraph, E: float) -> float:
		shifts = [
			abs(board_energy(result, graph.spec, E) - board_energy(node, graph.spec, E))
			for node in graph.nodes
			for _, _, result, allowed in neighbouring_moves(node, graph.spec)
			if allowed
		]
		return max(shifts, default=0.0)

	def execute(self) -> Outcome:
		config = self.config
		spec = BoardSpec(config.rows, config.cols, config.board_k)
		E = config.E[0]
		graph = self.build(spec)
		stationary = self.stationary(graph)
		t_mix = self.mixing(graph)
		t = t_mix if config.t_max is None else config.t_max
		evolved = self.relax(graph, t)
		coherent = coherent_walk(graph, t)

		write_text(self.path('classical_walk.csv'), distribution_csv(graph, stationary))
		write_text(self.path('classical_walk_nodes.csv'), node_table_csv(graph))
		write_text(self.path('classical_walk_edges.txt'), edge_list_text(graph))

		invalid = sum(not is_valid_configuration(node, spec) for node in graph.nodes)
		mirrored = np.array([stationary[graph.index[reflect(node, spec)]] for node in graph.nodes])
		verdicts = [
			Verdict.at_most('valid-configurations', invalid, 0),
			Verdict.at_most('energy-conservation', self._conservation(graph, E), STRUCTURE_TOLERANCE * max(1.0, E)),
			Verdict.at_most('stationary-uniform', float(np.max(np.abs(stationary - 1 / len(graph)))), 1e-12),
			Verdict.at_most('reflection-invariance', float(np.max(np.abs(stationary - mirrored))), 1e-12),
			Verdict.at_most('probability-conservation', abs(float(evolved.sum()) - 1), 1e-10),
			Verdict.at_most('coherent-norm', abs(coherent.total - 1), 1e-10),
		]
		if config.t_max is None:
			verdicts.append(Verdict.at_most('relaxation', float(np.max(np.abs(evolved - stationary))), MIXING_TOLERANCE))

		results: dict[str, Any] = {
			'rows': spec.rows,
			'cols': spec.cols,
			'k': spec.k,
			'nodes': len(graph),
			'edges': len(graph.edges()),
			'mixing_time': t_mix,
			't': t,
			'coherent_probabilities': coherent.probabilities,
		}
		if spec.k < spec.cols / 2 - spec.rows:
			outside = outside_probability_stationary(graph)
			results['outside_probability'] = outside
			verdicts.append(Verdict.at_least('outside-region-stationary', outside, 0.5))
		if spec.cols**spec.rows <= self.limits.max_sector_dimension:
			check = effective_hamiltonian_check(spec, E, self.limits)
			results['effective_hamiltonian'] = check.to_dict()
			error = max(check.adjacency_error, check.leakage)
			verdicts.append(Verdict('effective-hamiltonian', check.holds, error, STRUCTURE_TOLERANCE))
		return verdicts, results


class FullSimulationCommand(Command):
	NAME = 'full-sim'

	@trace(capture_output=False)
	def build(self, spec: LatticeSpec, E: float, layout: CircuitLayout) -> HermitianOperator:
		return build_complete(spec, E, layout, self.limits)

	@trace(capture_output=False)
	def evolve(self, hamiltonian: HermitianOperator, spec: LatticeSpec, t: float) -> CompleteEvolution:
		return evolve_complete(hamiltonian, spec, t, self.config.spins)

	def _layout(self, spec: LatticeSpec) -> CircuitLayout:
		if self.config.layout_file is None:
			return CircuitLayout(spec)
		return layout_from_json(Path(self.config.layout_file).read_text())

	def execute(self) -> Outcome:
		config = self.config
		spec = _lattice(config)
		layout = self._layout(spec)
		if config.crosscheck and not layout.is_empty:
			raise PreconditionError('empty layout for the crosscheck', f'{len(layout.stripes)} stripes given')

		hamiltonian = self.build(spec, config.E[0], layout)
		write_text(self.path('full_sim_triplets.txt'), hamiltonian.to_triplets())
		evolutions = [self.evolve(hamiltonian, spec, float(t)) for t in _time_grid(config, 4.0)]
		norms = [float(np.linalg.norm(e.state)) for e in evolutions]

		rows = []
		drift = 0.0
		for evolution, norm in zip(evolutions, norms):
			reference = None
			if config.crosscheck:
				reference = outside_probability_exact(spec.m, spec.k, evolution.time, self.limits)
				drift = max(drift, abs(evolution.outside_probability - reference))
			rows.append((evolution.time, evolution.outside_probability, norm, reference))
		write_csv(self.path('full_sim.csv'), ['t', 'outside', 'norm', 'walk_outside'], rows)

		verdicts = [Verdict.at_most('norm', max(abs(norm - 1) for norm in norms), IDENTITY_TOLERANCE)]
		if config.crosscheck:
			verdicts.append(Verdict.at_most('crosscheck', drift, IDENTITY_TOLERANCE))
		results = {
			'n': spec.n,
			'k': spec.k,
			'dimension': hamiltonian.dimension,
			'stripes': len(layout.stripes),
			'final_outside_probability': evolutions[-1].outside_probability,
		}
		return verdicts, results


class ReportCommand(Command):
	NAME = 'report'

	@trace()
	def collect(self, directory: Path) -> dict[str, list[dict[str, Any]]]:
		collected = {}
		for path in sorted(directory.glob('*.json')):
			if path.name == 'report.json':
				continue
			payload = json.loads(path.read_text())
			if isinstance(payload, dict) and 'verdicts' in payload:
				collected[path.stem] = payload['verdicts']
		return collected

	def execute(self) -> Outcome:
		collected = self.collect(self.config.output_dir)
		if not collected:
			raise PreconditionError('artifacts to report', f'no JSON artifacts in {self.config.output_dir}')
		verdicts = [
			Verdict(f'{stem}:{v["name"]}', bool(v['passed']), v.get('value'), v.get('bound'), v.get('detail', ''))
			for stem, entries in collected.items()
			for v in entries
		]
		results = {
			'artifacts': sorted(collected),
			'total': len(verdicts),
			'failed': sum(not v.passed for v in verdicts),
		}
		return verdicts, results


COMMANDS: dict[str, type[Command]] = {
	command.NAME: command
	for command in (
		ConfigspaceCommand,
		WalkCommand,
		TimeAverageCommand,
		PassingTimeCommand,
		HolonomyCommand,
		TwoQubitCommand,
		Lemma1Command,
		Theorem1Command,
		SelfEnergyCommand,
		LayoutCommand,
		MargolusCommand,
		ClassicalWalkCommand,
		FullSimulationCommand,
		ReportCommand,
	)
}
