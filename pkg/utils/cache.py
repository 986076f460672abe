"""
File cache for report JSON.

Reports are stored as <cache_dir>/<sha256>.json where the hash covers the
canonical input document and the degree cap. A hit returns the stored text
unchanged.
"""

import hashlib
import os
import tempfile
from pathlib import Path
from typing import Any, Optional

from config import NICHOLS_CACHE
from utils.serialize import canonical_json


def cache_key(doc: Any, cap: int) -> str:
    """sha256 of the canonical input JSON plus the cap."""
    payload = f"{canonical_json(doc)}|cap={cap}"
    return hashlib.sha256(payload.encode("utf-8")).hexdigest()


def _path(key: str, cache_dir: Optional[str]) -> Path:
    return Path(cache_dir or NICHOLS_CACHE) / f"{key}.json"


def cache_get(key: str, cache_dir: Optional[str] = None) -> Optional[str]:
    path = _path(key, cache_dir)
    try:
        return path.read_text(encoding="utf-8")
    except FileNotFoundError:
        return None


def cache_put(key: str, text: str, cache_dir: Optional[str] = None) -> Path:
    """Write atomically: a temporary file in the cache directory, then os.replace."""
    path = _path(key, cache_dir)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=".tmp-", suffix=".json")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    return path
