"""Content-addressed on-disk cache of command output.

Keys hash the canonical input text, the command, its parameters and the
package version. Entries are written to a temporary file and renamed into
place, so concurrent readers never see a partial entry.
"""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
from pathlib import Path

DEFAULT_DIR = ".quotkit-cache"


def cache_dir():
    return Path(os.environ.get("QUOTKIT_CACHE", DEFAULT_DIR))


def cache_key(command, canonical_input, params, version):
    blob = json.dumps(
        {"command": command, "input": canonical_input, "params": params, "version": version},
        sort_keys=True,
        separators=(",", ":"),
    )
    return hashlib.sha256(blob.encode()).hexdigest()


class ResultCache:
    def __init__(self, root=None):
        self.root = Path(root) if root is not None else cache_dir()

    def _path(self, key):
        return self.root / key[:2] / f"{key}.json"

    def get(self, key):
        path = self._path(key)
        try:
            return path.read_text(encoding="utf-8")
        except FileNotFoundError:
            return None

    def put(self, key, text):
        path = self._path(key)
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
