"""Shared fixtures for the command-line test suite."""

import json
from pathlib import Path
from typing import Any, Callable

import pytest

from ergodic.cli import run


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch):
	"""Ensure ambient environment variables don't leak into CLI runs."""
	monkeypatch.delenv('ERGODIC_OUTPUT_DIR', raising=False)
	monkeypatch.delenv('ERGODIC_SEED', raising=False)


@pytest.fixture
def cli(tmp_path) -> Callable[..., int]:
	"""Factory running one subcommand with its artifacts under ``tmp_path`` unless told otherwise."""

	def _cli(command: str, *args: str, output_dir: Path | None = None) -> int:
		return run([command, '--output-dir', str(output_dir or tmp_path), *args])

	return _cli


@pytest.fixture
def read_artifact(tmp_path) -> Callable[..., dict[str, Any]]:
	def _read_artifact(name: str, directory: Path | None = None) -> dict[str, Any]:
		return json.loads(((directory or tmp_path) / name).read_text())

	return _read_artifact
