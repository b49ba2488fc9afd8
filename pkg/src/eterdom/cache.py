"""Opt-in append-only result cache for expensive oracle runs.

Entries are JSON lines keyed by (canonical form, parameter, method), stored
in the working directory. Re-running a verification sweep with the cache
enabled skips every oracle solve it has already seen.
"""

from __future__ import annotations

import json
import os

DEFAULT_CACHE_FILE = ".eterdom-cache.jsonl"


class ResultCache:
    def __init__(self, path: str = DEFAULT_CACHE_FILE):
        self.path = path
        self._mem: dict[tuple[str, int, str], int] = {}
        if os.path.exists(path):
            with open(path, "r", encoding="utf-8") as fh:
                for line in fh:
                    line = line.strip()
                    if not line:
                        continue
                    entry = json.loads(line)
                    key = (entry["canonical"], int(entry["k"]), entry["method"])
                    self._mem[key] = int(entry["value"])

    def get(self, canonical: str, k: int, method: str) -> int | None:
        return self._mem.get((canonical, k, method))

    def put(self, canonical: str, k: int, method: str, value: int) -> None:
        key = (canonical, k, method)
        if key in self._mem:
            return
        self._mem[key] = value
        with open(self.path, "a", encoding="utf-8") as fh:
            fh.write(
                json.dumps(
                    {"canonical": canonical, "k": k, "method": method, "value": value},
                    sort_keys=True,
                )
                + "\n"
            )

    def __len__(self) -> int:
        return len(self._mem)
