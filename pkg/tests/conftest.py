# Copyright (c) 2026 Dedalus Labs, Inc. and its contributors
# SPDX-License-Identifier: MIT

"""Shared pytest fixtures for higgs-betti tests."""

from __future__ import annotations

import json
from pathlib import Path
from typing import TYPE_CHECKING, NamedTuple

import pytest

from cli import main
from cohomology.series import PoincareSeries, series_from_json


if TYPE_CHECKING:
    from collections.abc import Callable


GOLDEN_DIR = Path(__file__).parent / "golden"


class CliRun(NamedTuple):
    code: int
    out: str
    err: str


@pytest.fixture(scope="session")
def golden() -> Callable[[str], PoincareSeries]:
    """Load a series from tests/golden/<name>.json."""

    def load(name: str) -> PoincareSeries:
        return series_from_json(json.loads((GOLDEN_DIR / f"{name}.json").read_text(encoding="utf-8")))

    return load


@pytest.fixture
def cache_dir(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> Path:
    """Point the result cache at a fresh temporary directory."""
    directory = tmp_path / "cache"
    monkeypatch.setenv("HIGGS_BETTI_CACHE_DIR", str(directory))
    monkeypatch.delenv("HIGGS_BETTI_NO_CACHE", raising=False)
    monkeypatch.delenv("HIGGS_BETTI_LOG_LEVEL", raising=False)
    return directory


@pytest.fixture
def run_cli(cache_dir: Path, capsys: pytest.CaptureFixture[str]) -> Callable[..., CliRun]:
    """Run the CLI in-process and capture its exit code and streams."""

    def run(*argv: str) -> CliRun:
        code = main(list(argv))
        captured = capsys.readouterr()
        return CliRun(int(code), captured.out, captured.err)

    return run
