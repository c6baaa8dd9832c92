# Copyright (c) 2026 Dedalus Labs, Inc. and its contributors
# SPDX-License-Identifier: MIT

"""Content-addressed JSON cache of rendered command output."""

from __future__ import annotations

import hashlib
import json
import logging
import os
import tempfile
from pathlib import Path
from typing import TYPE_CHECKING

from pydantic import ValidationError

from cohomology.types import CommandOutcome, ExitCode


if TYPE_CHECKING:
    from collections.abc import Mapping


logger = logging.getLogger(__name__)


def cache_key(command: str, params: Mapping[str, object], version: str) -> str:
    """sha256 of the canonical JSON of (command, params, version)."""
    canonical = json.dumps(
        {"command": command, "params": dict(params), "version": version},
        sort_keys=True,
        separators=(",", ":"),
    )
    return hashlib.sha256(canonical.encode()).hexdigest()


def _entry_path(cache_dir: Path, key: str) -> Path:
    """Path of the entry file for ``key``."""
    return cache_dir / f"{key}.json"


def cache_get(cache_dir: Path, key: str) -> CommandOutcome | None:
    """Stored outcome for ``key``; a corrupt entry is reported and treated as a miss."""
    path = _entry_path(cache_dir, key)
    if not path.is_file():
        logger.info("cache miss %s", key[:12])
        return None
    try:
        entry = json.loads(path.read_text(encoding="utf-8"))
        outcome = CommandOutcome(output=entry["output"], exit_code=ExitCode(entry["exit_code"]))
    except (OSError, ValueError, KeyError, TypeError, ValidationError) as exc:
        logger.warning("ignoring corrupt cache entry %s: %s", path, exc)
        return None
    logger.info("cache hit %s", key[:12])
    return outcome


def cache_put(cache_dir: Path, key: str, outcome: CommandOutcome) -> Path:
    """Write the entry atomically: a temporary file in the cache directory, then a rename."""
    cache_dir.mkdir(parents=True, exist_ok=True)
    path = _entry_path(cache_dir, key)
    payload = json.dumps({"exit_code": int(outcome.exit_code), "output": outcome.output}, sort_keys=True)
    with tempfile.NamedTemporaryFile("w", encoding="utf-8", dir=cache_dir, suffix=".tmp", delete=False) as handle:
        handle.write(payload)
        temp_name = handle.name
    try:
        os.replace(temp_name, path)
    except OSError:
        Path(temp_name).unlink(missing_ok=True)
        raise
    logger.debug("cached %s", path)
    return path
