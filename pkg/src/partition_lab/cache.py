"""On-disk cache of m -> f(m).

The cache is advisory: a missing, unreadable or inconsistent file is
reported and ignored, never fatal.
"""

from __future__ import annotations

import json
import logging
import os
import random
import tempfile
from pathlib import Path
from typing import Callable

from partition_lab.squared import frequency

log = logging.getLogger(__name__)

FORMAT_VERSION = 1
ENV_VAR = "PARTITION_LAB_CACHE"


class FrequencyCache:
    def __init__(self, path: str | os.PathLike | None, seed_check: int = 8,
                 compute: Callable[[int], int] = frequency):
        self.path = Path(path) if path else None
        self.compute = compute
        self.entries: dict[int, int] = {}
        self._dirty = False
        if self.path is not None:
            self._load(seed_check)

    def _load(self, seed_check: int) -> None:
        if not self.path.exists():
            return
        try:
            raw = json.loads(self.path.read_text())
            if raw.get("version") != FORMAT_VERSION:
                raise ValueError(f"unsupported cache version {raw.get('version')!r}")
            entries = {int(k): int(v) for k, v in raw["entries"].items()}
        except (OSError, ValueError, KeyError, TypeError, AttributeError) as exc:
            log.warning("ignoring cache %s: %s", self.path, exc)
            return
        sample = sorted(entries)
        if seed_check < len(sample):
            sample = sorted(random.Random(0).sample(sample, seed_check))
        for m in sample:
            if self.compute(m) != entries[m]:
                log.warning("ignoring cache %s: stored f(%d) = %d disagrees with recomputation",
                            self.path, m, entries[m])
                return
        self.entries = entries

    def get(self, m: int) -> int:
        if m not in self.entries:
            self.entries[m] = self.compute(m)
            self._dirty = True
        return self.entries[m]

    def update(self, values: dict[int, int]) -> None:
        for m, f in values.items():
            if self.entries.get(m) != f:
                self.entries[m] = f
                self._dirty = True

    def save(self) -> None:
        if self.path is None or not self._dirty:
            return
        payload = {"version": FORMAT_VERSION,
                   "entries": {str(m): f for m, f in sorted(self.entries.items())}}
        try:
            self.path.parent.mkdir(parents=True, exist_ok=True)
            fd, tmp = tempfile.mkstemp(dir=self.path.parent, prefix=".cache-")
            with os.fdopen(fd, "w") as fh:
                json.dump(payload, fh)
            os.replace(tmp, self.path)
        except OSError as exc:
            log.warning("could not write cache %s: %s", self.path, exc)
            return
        self._dirty = False


def resolve_cache_path(flag: str | None) -> str | None:
    return os.environ.get(ENV_VAR) or flag
