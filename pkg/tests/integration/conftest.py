# Copyright 2026 Canonical Ltd.
# See LICENSE file for licensing details.
#
# The integration tests run the command line front end in a separate interpreter.

import json
import logging
import os
import pathlib
import subprocess
import sys
from typing import List

import pytest

logger = logging.getLogger(__name__)

REPO_ROOT = pathlib.Path(__file__).resolve().parents[2]

HOLLOW3 = {
    "ambient_dim": 2,
    "vertices": [
        {"id": "A", "coords": ["0", "0"]},
        {"id": "B", "coords": ["1", "0"]},
        {"id": "C", "coords": ["0", "1"]},
    ],
    "simplices": [["A", "B"], ["B", "C"], ["C", "A"]],
    "basepoint": "A",
}

LINE = {
    "ambient_dim": 1,
    "vertices": [{"id": "P", "coords": ["0"]}, {"id": "Q", "coords": ["3"]}],
    "simplices": [["P", "Q"]],
    "basepoint": "P",
}


@pytest.fixture(scope="session")
def cli():
    """Return the path of the command line entry point under test."""
    if "THIN_LOOPS_CLI" in os.environ:
        cli_path = pathlib.Path(os.environ["THIN_LOOPS_CLI"])
        if not cli_path.exists():
            raise FileNotFoundError(f"CLI does not exist: {cli_path}")
        return cli_path
    return REPO_ROOT / "src" / "cli.py"


@pytest.fixture(scope="module")
def workdir(tmp_path_factory):
    """Create a directory holding the reference complex files."""
    directory = tmp_path_factory.mktemp("complexes")
    for name, spec in {"hollow3": HOLLOW3, "line": LINE}.items():
        (directory / f"{name}.json").write_text(json.dumps(spec), encoding="utf-8")
    return directory


@pytest.fixture
def invoke(cli):
    """Return a function running the CLI and returning the completed process."""

    def _invoke(*args: str) -> subprocess.CompletedProcess:
        env = {**os.environ, "PYTHONPATH": str(cli.parent)}
        argv: List[str] = [sys.executable, str(cli), *args]
        logger.info("Running %s", " ".join(argv))
        return subprocess.run(argv, capture_output=True, text=True, env=env, check=False)

    return _invoke
