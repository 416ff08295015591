"""On-disk persistence of the structure-constant memo.

The file is JSON: ``{"format": 1, "entries": [["[eps]", "[alpha]", "[beta]", value], ...]}``
with entries sorted, so that the same cache contents always serialize to the
same bytes.  A file with a different format number is ignored.
"""

from __future__ import annotations

import json
import logging
import os
from pathlib import Path

from . import structure_constants
from .partitions import format_cycle_type, parse_cycle_type

FORMAT = 1
ENV_VAR = "HILBRING_CACHE_DIR"
FILENAME = f"theta-v{FORMAT}.json"

log = logging.getLogger(__name__)


def default_dir() -> Path:
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    return Path(os.environ.get("XDG_CACHE_HOME", Path.home() / ".cache")) / "hilbring"


def load(directory: Path | None = None) -> int:
    """Seed the in-memory memo from disk; returns the number of entries read."""
    path = (directory or default_dir()) / FILENAME
    if not path.exists():
        return 0
    try:
        payload = json.loads(path.read_text())
    except (OSError, json.JSONDecodeError) as exc:
        log.warning("ignoring unreadable theta cache %s: %s", path, exc)
        return 0
    if payload.get("format") != FORMAT:
        log.warning("ignoring theta cache %s with format %r", path, payload.get("format"))
        return 0
    entries = [
        ((parse_cycle_type(e), parse_cycle_type(a), parse_cycle_type(b)), int(v))
        for e, a, b, v in payload.get("entries", [])
    ]
    structure_constants.seed_cache(entries)
    return len(entries)


def save(directory: Path | None = None) -> Path:
    directory = directory or default_dir()
    directory.mkdir(parents=True, exist_ok=True)
    path = directory / FILENAME
    entries = [
        [format_cycle_type(e), format_cycle_type(a), format_cycle_type(b), v]
        for (e, a, b), v in structure_constants.cache_items()
    ]
    tmp = path.with_suffix(".tmp")
    tmp.write_text(json.dumps({"format": FORMAT, "entries": entries}, separators=(",", ":")))
    tmp.replace(path)
    return path
