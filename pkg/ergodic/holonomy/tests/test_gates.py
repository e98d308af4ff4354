"""
Tests for the one- and two-qubit holonomic gates.
"""

import numpy as np
import pytest

from ergodic.exceptions import PreconditionError
from ergodic.holonomy import (
	CodeSpace,
	GateReport,
	axis_rotation,
	controlled_phase,
	gate_fidelity,
	integrate_loop,
	one_qubit_family,
	one_qubit_gate,
	phase_stripped_distance,
	schedule_sweep,
	two_qubit_family,
	two_qubit_gate,
	universality_witness,
)


class TestMetrics:
	def test_global_phase_is_ignored(self):
		target = axis_rotation('x', 0.4)

		assert gate_fidelity(np.exp(0.9j) * target, target) == pytest.approx(1.0)
		assert phase_stripped_distance(np.exp(0.9j) * target, target) == pytest.approx(0.0, abs=1e-12)

	def test_orthogonal_gates(self):
		assert gate_fidelity(axis_rotation('x', np.pi / 2), np.eye(2)) == pytest.approx(0.0, abs=1e-12)

	def test_code_space(self):
		code = CodeSpace.with_suffix('u')

		assert code.labels == ('duu', 'udu')
		assert code.rank == 2
		assert np.allclose(code.projector @ code.projector, code.projector)
		assert code.leakage(np.eye(8)) == pytest.approx(0.0)


class TestOneQubitGate:
	def test_vanishing_rotation(self):
		report = one_qubit_gate(np.pi / 2, 'x')

		assert np.allclose(report.target, np.eye(2), atol=1e-12)
		assert report.fidelity >= 0.999

	def test_quarter_turn(self):
		report = one_qubit_gate(np.arccos(1 / 4), 'x', l=400, tau_step=5.0)

		assert np.allclose(report.target, 1j * np.array([[0, 1], [1, 0]]))
		assert report.fidelity >= 0.999
		assert report.leakage <= 2e-2

	def test_full_turn_is_minus_identity(self):
		report = one_qubit_gate(np.pi / 3, 'x')

		assert np.allclose(report.target, -np.eye(2))
		assert report.fidelity >= 0.999

	def test_y_family_turns_the_other_way(self):
		phi = np.arccos(1 / 8)
		report = one_qubit_gate(phi, 'y')

		assert np.allclose(report.target, axis_rotation('y', -np.pi / 4))
		assert report.fidelity >= 0.999

	def test_family_samples_are_isospectral(self):
		family = one_qubit_family(0.3, 'x', l=60, tau_step=1.0)

		assert np.allclose(family.hamiltonian(1) @ CodeSpace.pair().basis, 0.0, atol=1e-12)
		for j in (1, 20, 60):
			assert np.allclose(np.linalg.eigvalsh(family.hamiltonian(j)), [-2, 0, 0, 2], atol=1e-12)

	@pytest.mark.parametrize('l', [10, 49])
	def test_rejects_short_loops(self, l):
		with pytest.raises(PreconditionError):
			one_qubit_gate(0.3, 'x', l=l)

	def test_rejects_axis(self):
		with pytest.raises(PreconditionError):
			one_qubit_family(0.3, 'z')

	def test_jitter_does_not_change_the_swept_gate(self):
		phi = np.arccos(1 / 4)
		uniform = one_qubit_gate(phi, 'x', l=400, tau_step=5.0, profile='sweep')
		jittered = one_qubit_gate(phi, 'x', l=400, tau_step=5.0, profile='sweep', jitter=0.3, seed=11)

		assert jittered.parameters['jittered']
		assert abs(uniform.fidelity - jittered.fidelity) <= 5e-3
		assert phase_stripped_distance(jittered.implemented, uniform.implemented) <= 5e-3

	def test_off_intervals_do_not_change_the_gate(self):
		phi = np.arccos(1 / 4)
		plain = one_qubit_gate(phi, 'x', l=100, tau_step=5.0)
		gapped = one_qubit_gate(phi, 'x', l=100, tau_step=5.0, off_interval=2.5)

		assert phase_stripped_distance(gapped.implemented, plain.implemented) <= 1e-9

	def test_slower_loops_improve_the_gate(self):
		rows = schedule_sweep(np.arccos(1 / 4), 'x', [100, 200, 400], tau_step=5.0)

		assert [row['l'] for row in rows] == [100, 200, 400]
		assert rows[0]['fidelity'] < rows[1]['fidelity'] < rows[2]['fidelity']
		assert rows[2]['fidelity'] >= 0.999
		assert rows[0]['leakage'] > rows[1]['leakage'] > rows[2]['leakage']

	def test_hold_is_the_default_schedule(self):
		phi = np.arccos(1 / 4)
		default = one_qubit_gate(phi, 'x', l=100, tau_step=5.0)
		held = one_qubit_gate(phi, 'x', l=100, tau_step=5.0, profile='hold')

		assert default.parameters['profile'] == 'hold'
		assert np.allclose(default.implemented, held.implemented)


class TestTwoQubitGate:
	def test_control_down_is_exact_identity(self):
		report = two_qubit_gate(np.pi / 6)

		assert np.allclose(report.branches['d'].implemented, np.eye(2), atol=1e-9)
		assert report.branches['d'].leakage <= 1e-9

	def test_zero_angle(self):
		report = two_qubit_gate(0.0)

		assert report.branches['d'].fidelity >= 0.999
		assert report.branches['u'].fidelity >= 0.999
		assert np.allclose(report.target, np.eye(4))

	def test_controlled_minus_one(self):
		report = two_qubit_gate(np.pi / 6, l=400, tau_step=5.0)

		assert np.allclose(report.branches['u'].target, -np.eye(2))
		assert report.branches['u'].fidelity >= 0.999
		assert report.fidelity >= 0.999
		assert report.branches['u'].leakage <= 2e-2

	def test_quarter_pi_controlled_phase(self):
		report = two_qubit_gate(np.pi / 4, l=400, tau_step=5.0)

		assert np.allclose(report.target, controlled_phase(2 * np.pi * np.sin(np.pi / 4)))
		assert report.branches['u'].fidelity >= 0.999
		assert report.branches['d'].distance <= 1e-9
		assert report.fidelity >= 0.999

	def test_control_down_samples_are_constant(self):
		family = two_qubit_family(0.4, l=60, tau_step=1.0)
		down = [index for index in range(8) if index % 2 == 1]

		for j in (1, 17, 45):
			block = family.hamiltonian(j)[np.ix_(down, down)]
			assert np.allclose(block, family.base[np.ix_(down, down)], atol=1e-12)

	def test_combined_action_layout(self):
		report = two_qubit_gate(np.arcsin(1 / 4))

		assert np.allclose(report.target, controlled_phase(np.pi / 2))
		assert np.allclose(report.target, np.diag([1, 1j, 1, -1j]))


class TestUniversalityWitness:
	@pytest.fixture(scope='class')
	def reports(self) -> dict[str, GateReport]:
		return {report.name: report for report in universality_witness()}

	def test_all_gates_are_accurate(self, reports):
		assert set(reports) == {
			'rot_x',
			'rot_y',
			'hadamard',
			'inverse_pair',
			'cz_equivalent',
			'controlled_minus_one',
		}
		for report in reports.values():
			assert report.fidelity >= 0.999, report.name

	def test_hadamard_composite(self, reports):
		hadamard = np.array([[1, 1], [1, -1]]) / np.sqrt(2)

		assert np.allclose(reports['hadamard'].target, 1j * hadamard)
		assert reports['hadamard'].distance <= 3e-2

	def test_inverse_pair(self, reports):
		assert reports['inverse_pair'].distance <= 3e-2

	def test_cz_equivalent(self, reports):
		cz = np.diag([1, 1, 1, -1])
		s_on_control = np.kron(np.eye(2), np.diag([1, 1j]))

		assert np.allclose(reports['cz_equivalent'].target, cz @ s_on_control)

	def test_reports_serialize(self, reports):
		payload = reports['cz_equivalent'].to_dict()

		assert set(payload['branches']) == {'d', 'u'}
		assert payload['parameters']['l'] == 400
		assert 'sin(phi)' in payload['note']


def test_integration_of_family_is_unitary():
	unitary = integrate_loop(two_qubit_family(0.7, l=80, tau_step=2.0))

	assert np.max(np.abs(unitary.conj().T @ unitary - np.eye(8))) <= 1e-10
