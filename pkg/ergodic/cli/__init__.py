"""
Command-line interface of the ergodic toolkit.

Every verification and sweep is a subcommand writing CSV, JSON and text
artifacts to one output directory and printing a verdict line per bound.
"""

from .artifacts import Verdict, envelope, to_jsonable
from .commands import COMMANDS, Command
from .config import RunConfig, load_config_file, parse_angle, resolve_config
from .main import build_parser, main, run

__all__ = [
	'COMMANDS',
	'Command',
	'RunConfig',
	'Verdict',
	'build_parser',
	'envelope',
	'load_config_file',
	'main',
	'parse_angle',
	'resolve_config',
	'run',
	'to_jsonable',
]
