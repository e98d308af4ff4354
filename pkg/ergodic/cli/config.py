"""
Run configuration of the ``ergodic`` command.

Values are resolved with precedence: explicit flag > ``--config`` JSON file >
environment (``ERGODIC_OUTPUT_DIR``, ``ERGODIC_SEED``) > built-in default.
"""

import json
import math
import os
import re
from pathlib import Path
from typing import Any, Literal, Mapping

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator
from typing_extensions import Self

from ergodic.exceptions import PreconditionError

FORMAT_VERSION = 1
DEFAULT_OUTPUT_DIR = Path('ergodic-out')
ENVIRONMENT = {'output_dir': 'ERGODIC_OUTPUT_DIR', 'seed': 'ERGODIC_SEED'}

COMMANDS = (
	'configspace',
	'walk',
	'timeavg',
	'passing-time',
	'holonomy',
	'two-qubit',
	'lemma1',
	'theorem1',
	'self-energy',
	'layout',
	'margolus',
	'classical-walk',
	'full-sim',
	'report',
)
LATTICE_COMMANDS = {'configspace', 'layout', 'margolus', 'full-sim'}
WALK_COMMANDS = {'walk', 'passing-time'}

_ANGLE = re.compile(r'^\s*([+-])?((?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?)?\s*(pi)?\s*$')


def parse_angle(value: str | float) -> float:
	"""
	Read an angle, accepting a ``pi`` suffix (``0.25pi``, ``-pi``, ``1.5``).

	Raises:
		PreconditionError: If the text is not a number with an optional ``pi``.
	"""
	if isinstance(value, (int, float)):
		return float(value)
	match = _ANGLE.match(value)
	if not match or not (match.group(2) or match.group(3)):
		raise PreconditionError('angle like 0.25pi', repr(value))
	sign, number, pi = match.groups()
	factor = float(number) if number else 1.0
	if sign == '-':
		factor = -factor
	return factor * math.pi if pi else factor


class RunConfig(BaseModel):
	"""
	Validated parameters of one subcommand.

	Fields left at ``None`` take per-command defaults, so the config echo in
	every artifact shows which values were given.
	"""

	model_config = ConfigDict(frozen=True, extra='forbid')

	command: Literal[COMMANDS]  # type: ignore[valid-type]
	n: int = Field(3, ge=2)
	m: int = Field(16, ge=1)
	k: int | None = Field(None, ge=0)
	E: list[float] = Field(default_factory=lambda: [1e4], min_length=1)
	phi: float = math.pi / 4
	axis: Literal['x', 'y'] = 'x'
	l: list[int] = Field(default_factory=lambda: [400], min_length=1)
	tau_step: float = Field(5.0, gt=0)
	profile: Literal['hold', 'sweep'] = 'hold'
	jitter: float = Field(0.0, ge=0, lt=1)
	t_max: float | None = Field(None, ge=0)
	points: int = Field(512, ge=2)
	samples: int = Field(10, ge=1)
	rows: int = Field(2, ge=2)
	cols: int = Field(7, ge=2)
	ca_steps: int = Field(1, ge=0)
	cell_rows: int = Field(1, ge=1)
	block_width: int = Field(1, ge=1)
	qubits: int = Field(1, ge=1)
	depth: int = Field(4, ge=0)
	circuits: int = Field(1, ge=1)
	spins: str | None = None
	layout_file: Path | None = None
	crosscheck: bool = False
	dump: bool = False
	seed: int = Field(0, ge=0, lt=2**64)
	output_dir: Path = DEFAULT_OUTPUT_DIR
	format_version: int = FORMAT_VERSION

	@field_validator('phi', mode='before')
	@classmethod
	def _angle(cls, value: Any) -> float:
		return parse_angle(value) if isinstance(value, str) else value

	@field_validator('E')
	@classmethod
	def _positive_energies(cls, value: list[float]) -> list[float]:
		if any(not math.isfinite(E) or E <= 0 for E in value):
			raise ValueError('E > 0 for every binding energy')
		return value

	@field_validator('l')
	@classmethod
	def _positive_steps(cls, value: list[int]) -> list[int]:
		if any(l < 1 for l in value):
			raise ValueError('l >= 1 for every loop length')
		return value

	@field_validator('rows')
	@classmethod
	def _even_rows(cls, value: int) -> int:
		if value % 2:
			raise ValueError('rows even')
		return value

	@model_validator(mode='after')
	def _command_preconditions(self) -> Self:
		if self.command in LATTICE_COMMANDS and not 1 <= self.lattice_k < self.n:
			raise ValueError(f'1 <= k < n (k={self.lattice_k}, n={self.n})')
		if self.command in WALK_COMMANDS and not 1 <= self.walk_k <= self.m:
			raise ValueError(f'1 <= k <= m (k={self.walk_k}, m={self.m})')
		if self.command == 'timeavg' and self.m % 4:
			raise ValueError(f'm multiple of 4 (m={self.m})')
		if self.command == 'walk' and self.t_max is None and self.points < 66:
			raise ValueError(f'points >= 66 for the default time grid (points={self.points})')
		return self

	@property
	def lattice_k(self) -> int:
		return self.k if self.k is not None else 1

	@property
	def walk_k(self) -> int:
		return self.k if self.k is not None else max(1, self.m // 4)

	@property
	def board_k(self) -> int:
		return self.k if self.k is not None else 0

	def echo(self) -> dict[str, Any]:
		return self.model_dump(mode='json')


def _normalize(values: Mapping[str, Any]) -> dict[str, Any]:
	return {key.replace('-', '_'): value for key, value in values.items()}


def load_config_file(path: Path) -> dict[str, Any]:
	"""
	Read a JSON object of run parameters; dashed keys are accepted.

	Raises:
		PreconditionError: If the file does not hold a JSON object.
	"""
	payload = json.loads(Path(path).read_text())
	if not isinstance(payload, dict):
		raise PreconditionError('config file holds a JSON object', str(path))
	return _normalize(payload)


def resolve_config(
	command: str,
	flags: Mapping[str, Any],
	file_values: Mapping[str, Any] | None = None,
	environ: Mapping[str, str] | None = None,
) -> RunConfig:
	"""
	Merge the configuration sources of a run.

	Args:
		command: The subcommand.
		flags: Flags given on the command line; ``None`` means not given.
		file_values: Contents of the ``--config`` file.
		environ: Environment; defaults to ``os.environ``.

	Raises:
		pydantic.ValidationError: If the merged values break a precondition.
	"""
	environ = os.environ if environ is None else environ
	values: dict[str, Any] = {}
	for key, variable in ENVIRONMENT.items():
		if environ.get(variable):
			values[key] = environ[variable]
	values.update(_normalize(file_values or {}))
	values.update({key: value for key, value in _normalize(flags).items() if value is not None})
	values['command'] = command
	return RunConfig(**values)
