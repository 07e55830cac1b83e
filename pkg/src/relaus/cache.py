"""On-disk cache of JSON reports, keyed by a hash of everything that determines them."""
from __future__ import annotations

import hashlib
import json
import os
import tempfile
from pathlib import Path

CACHE_VERSION = 1


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def input_hash(inputs: dict) -> str:
    payload = canonical_json({"cache_version": CACHE_VERSION, "inputs": inputs})
    return hashlib.sha256(payload.encode("utf-8")).hexdigest()


class Workspace:
    """A cache directory.  ``cache_dir=None`` disables caching."""

    def __init__(self, cache_dir=None):
        self.cache_dir = Path(cache_dir) if cache_dir else None
        self.hits = 0
        self.misses = 0

    def _path(self, h: str) -> Path:
        return self.cache_dir / h[:2] / f"{h}.json"

    def get(self, inputs: dict):
        if self.cache_dir is None:
            return None
        h = input_hash(inputs)
        p = self._path(h)
        try:
            entry = json.loads(p.read_text(encoding="utf-8"))
        except (OSError, ValueError):
            self.misses += 1
            return None
        # an entry whose recorded hash does not match is stale or corrupt
        if not isinstance(entry, dict) or entry.get("hash") != h or \
                input_hash(entry.get("inputs", {})) != h:
            self.misses += 1
            return None
        self.hits += 1
        return entry["result"]

    def put(self, inputs: dict, result) -> None:
        if self.cache_dir is None:
            return
        h = input_hash(inputs)
        p = self._path(h)
        p.parent.mkdir(parents=True, exist_ok=True)
        data = canonical_json({"hash": h, "inputs": inputs, "result": result})
        fd, tmp = tempfile.mkstemp(dir=p.parent, prefix=".tmp-", suffix=".json")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                fh.write(data)
            os.replace(tmp, p)
        except BaseException:
            try:
                os.unlink(tmp)
            except OSError:
                pass
            raise

    def cached(self, inputs: dict, compute):
        hit = self.get(inputs)
        if hit is not None:
            return hit
        result = compute()
        self.put(inputs, result)
        return result
