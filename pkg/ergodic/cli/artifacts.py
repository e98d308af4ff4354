"""
Artifact writers: verdicts, JSON envelopes, CSV tables and plain text.

CSV floats are written with 17 significant digits and empty fields for
missing values, so identical runs produce identical bytes. JSON floats use
the shortest repr of the same double; non-finite values become null.
"""

import csv
import io
import json
import math
from dataclasses import asdict, dataclass, is_dataclass
from enum import Enum
from pathlib import Path
from typing import Any, Iterable, Sequence

import numpy as np

from ergodic import __version__
from ergodic.cli.config import RunConfig
from ergodic.hamiltonian import format_number


@dataclass(frozen=True)
class Verdict:
	"""
	Outcome of one checked bound.

	Attributes:
		name: Check name, unique within a run.
		passed: Whether the bound held.
		value: Measured quantity, if the check has one.
		bound: The bound it was compared with.
		detail: Free-form remark.
	"""

	name: str
	passed: bool
	value: float | None = None
	bound: float | None = None
	detail: str = ''

	@classmethod
	def at_most(cls, name: str, value: float, bound: float, detail: str = '') -> 'Verdict':
		return cls(name, bool(value <= bound), float(value), float(bound), detail)

	@classmethod
	def at_least(cls, name: str, value: float, bound: float, detail: str = '') -> 'Verdict':
		return cls(name, bool(value >= bound), float(value), float(bound), detail)

	def line(self) -> str:
		status = 'PASS' if self.passed else 'FAIL'
		return f'{status} {self.name}: value={_text(self.value)} bound={_text(self.bound)}'

	def to_dict(self) -> dict[str, Any]:
		return to_jsonable(asdict(self))


def _text(value: float | None) -> str:
	return '-' if value is None else format_number(value)


def to_jsonable(value: Any) -> Any:
	"""Convert numpy values, complex numbers, dataclasses and paths to plain JSON."""
	if value is None or isinstance(value, (bool, str, int)):
		return value
	if isinstance(value, float):
		return value if math.isfinite(value) else None
	if isinstance(value, complex):
		return {'re': to_jsonable(value.real), 'im': to_jsonable(value.imag)}
	if isinstance(value, np.generic):
		return to_jsonable(value.item())
	if isinstance(value, np.ndarray):
		return to_jsonable(value.tolist())
	if isinstance(value, Enum):
		return to_jsonable(value.value)
	if isinstance(value, Path):
		return str(value)
	if isinstance(value, dict):
		return {str(key): to_jsonable(item) for key, item in value.items()}
	if isinstance(value, (list, tuple)):
		return [to_jsonable(item) for item in value]
	if is_dataclass(value) and not isinstance(value, type):
		return to_jsonable(asdict(value))
	return str(value)


def envelope(
	config: RunConfig,
	verdicts: Sequence[Verdict],
	results: dict[str, Any],
	trace: dict[str, Any],
) -> dict[str, Any]:
	"""The common shape of every JSON artifact."""
	return {
		'tool-version': __version__,
		'format-version': config.format_version,
		'config-echo': config.echo(),
		'verdicts': [verdict.to_dict() for verdict in verdicts],
		'results': to_jsonable(results),
		'trace': to_jsonable(trace),
	}


def write_json(path: Path, payload: dict[str, Any]) -> Path:
	path.parent.mkdir(parents=True, exist_ok=True)
	path.write_text(json.dumps(to_jsonable(payload), indent=2, allow_nan=False) + '\n')
	return path


def csv_field(value: Any) -> str:
	if value is None:
		return ''
	if isinstance(value, (bool, np.bool_)):
		return 'true' if value else 'false'
	if isinstance(value, (int, np.integer)):
		return str(int(value))
	if isinstance(value, (float, np.floating)):
		return format_number(float(value)) if math.isfinite(value) else ''
	return str(value)


def csv_text(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
	buffer = io.StringIO()
	writer = csv.writer(buffer, lineterminator='\n')
	writer.writerow(header)
	writer.writerows([csv_field(value) for value in row] for row in rows)
	return buffer.getvalue()


def write_csv(path: Path, header: Sequence[str], rows: Iterable[Sequence[Any]]) -> Path:
	return write_text(path, csv_text(header, rows))


def write_text(path: Path, text: str) -> Path:
	path.parent.mkdir(parents=True, exist_ok=True)
	path.write_bytes(text.encode())
	return path
