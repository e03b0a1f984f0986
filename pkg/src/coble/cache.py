"""On-disk cache for enumerations.  Keys carry a format version."""
from __future__ import annotations

import json
import os
from pathlib import Path
from typing import Any, Callable

FORMAT_VERSION = 1
ENV_VAR = "COBLE_CACHE_DIR"
DEFAULT_DIR = ".coble-cache"


def cache_dir(override: str | os.PathLike | None = None) -> Path:
    return Path(override or os.environ.get(ENV_VAR) or DEFAULT_DIR)


def cache_key(kind: str, d: int, type_spec: str | None = None) -> str:
    t = (type_spec or "all").replace("+", "p")
    return f"v{FORMAT_VERSION}-{kind}-d{d}-{t}.json"


def load(path: Path) -> Any | None:
    try:
        with path.open() as fh:
            data = json.load(fh)
    except (OSError, ValueError):
        return None
    if not isinstance(data, dict) or data.get("format") != FORMAT_VERSION:
        return None
    return data.get("payload")


def store(path: Path, payload: Any) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(".tmp")
    with tmp.open("w") as fh:
        json.dump({"format": FORMAT_VERSION, "payload": payload}, fh, sort_keys=True)
    tmp.replace(path)


def cached(directory: Path | None, key: str, compute: Callable[[], Any]) -> tuple[Any, bool]:
    """(payload, hit).  A None directory disables caching."""
    if directory is None:
        return compute(), False
    path = directory / key
    hit = load(path)
    if hit is not None:
        return hit, True
    payload = compute()
    store(path, payload)
    return payload, False
