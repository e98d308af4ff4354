"""
Command-line entry point.

``run(argv)`` never raises: invalid parameters exit with 2, failed checks
with 1 and a fully passing run with 0.
"""

import argparse
import json
import sys
from typing import Sequence

from pydantic import ValidationError

from ergodic import __version__
from ergodic.cli.commands import COMMANDS
from ergodic.cli.config import load_config_file, resolve_config
from ergodic.exceptions import CheckFailedError, ErgodicError

HELP = {
	'configspace': 'enumerate the chain configurations and close the move graph',
	'walk': 'counting statistics of the clock walk and the passing time',
	'timeavg': 'time-average readout bound',
	'passing-time': 'passing time of the clock walk',
	'holonomy': 'one-qubit holonomic gate',
	'two-qubit': 'controlled holonomic gate',
	'lemma1': 'low-energy distance to the effective Hamiltonian',
	'theorem1': 'state error of the effective evolution',
	'self-energy': 'self-energy samples on the disk |z| <= sqrt(E)',
	'layout': 'compile random circuits to stripe layouts',
	'margolus': 'Margolus tiling of the circuit region',
	'classical-walk': 'classical random walk on the chessboard model',
	'full-sim': 'complete spinful Hamiltonian at small n',
	'report': 'aggregate the verdicts of the output directory',
}


def _parameters() -> argparse.ArgumentParser:
	parent = argparse.ArgumentParser(add_help=False)
	parent.add_argument('--config', help='JSON file with run parameters')
	parent.add_argument('--output-dir', help='artifact directory (env ERGODIC_OUTPUT_DIR, default ./ergodic-out)')
	parent.add_argument('--seed', type=int, help='seed of every random choice (env ERGODIC_SEED, default 0)')
	parent.add_argument('--n', type=int, help='lattice side')
	parent.add_argument('--m', type=int, help='half word length of the clock walk')
	parent.add_argument('--k', type=int, help='circuit region side')
	parent.add_argument('--E', type=float, nargs='+', help='binding energies')
	parent.add_argument('--phi', help='mixing angle, e.g. 0.25pi')
	parent.add_argument('--axis', choices=['x', 'y'])
	parent.add_argument('--l', type=int, nargs='+', help='loop lengths')
	parent.add_argument('--tau-step', type=float)
	parent.add_argument('--profile', choices=['hold', 'sweep'])
	parent.add_argument('--jitter', type=float)
	parent.add_argument('--t-max', type=float)
	parent.add_argument('--points', type=int)
	parent.add_argument('--samples', type=int)
	parent.add_argument('--rows', type=int, help='board rows (classical walk)')
	parent.add_argument('--cols', type=int, help='board columns (classical walk)')
	parent.add_argument('--ca-steps', type=int)
	parent.add_argument('--cell-rows', type=int)
	parent.add_argument('--block-width', type=int)
	parent.add_argument('--qubits', type=int)
	parent.add_argument('--depth', type=int)
	parent.add_argument('--circuits', type=int)
	parent.add_argument('--spins', help='initial spin word, one u/d per chain row')
	parent.add_argument('--layout-file', help='layout JSON for full-sim')
	parent.add_argument('--crosscheck', action='store_const', const=True, help='compare full-sim with the clock walk')
	parent.add_argument('--dump', action='store_const', const=True, help='print the configurations')
	return parent


def build_parser() -> argparse.ArgumentParser:
	parser = argparse.ArgumentParser(prog='ergodic', description='Ergodic quantum computer simulator and checks.')
	parser.add_argument('--version', action='version', version=f'%(prog)s {__version__}')
	subparsers = parser.add_subparsers(dest='command', required=True, metavar='command')
	parent = _parameters()
	for name in COMMANDS:
		subparsers.add_parser(name, parents=[parent], help=HELP[name])
	return parser


def _validation_message(error: ValidationError) -> str:
	parts = []
	for detail in error.errors():
		location = '.'.join(str(item) for item in detail['loc']) or 'config'
		parts.append(f'{location}: {detail["msg"]}')
	return '; '.join(parts)


def run(argv: Sequence[str] | None = None) -> int:
	"""
	Run one subcommand.

	Returns:
		0 if every verdict passed, 1 on a failed check or numerical failure,
		2 on invalid parameters.
	"""
	try:
		args = build_parser().parse_args(argv)
	except SystemExit as exit:
		return exit.code if isinstance(exit.code, int) else 0 if exit.code is None else 2

	flags = {key: value for key, value in vars(args).items() if key not in ('command', 'config')}
	try:
		file_values = load_config_file(args.config) if args.config else {}
		config = resolve_config(args.command, flags, file_values)
		COMMANDS[config.command](config).run()
	except ValidationError as error:
		print(f'ergodic {args.command}: invalid parameters: {_validation_message(error)}', file=sys.stderr)
		return 2
	except (OSError, json.JSONDecodeError) as error:
		print(f'ergodic {args.command}: cannot read input: {error}', file=sys.stderr)
		return 2
	except CheckFailedError as error:
		print(f'ergodic {args.command}: {error}', file=sys.stderr)
		return error.exit_code
	except ErgodicError as error:
		print(f'ergodic {args.command}: {type(error).__name__}: {error}', file=sys.stderr)
		return error.exit_code
	except Exception as error:
		print(f'ergodic {args.command}: unexpected {type(error).__name__}: {error}', file=sys.stderr)
		return 1
	return 0


def main() -> None:
	sys.exit(run())
