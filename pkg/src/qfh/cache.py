"""
Persistent JSON cache for expensive results.

Each record is one file ``<kind>/<key>.json`` holding
``{"format_version": ..., "kind": ..., "key": ..., "value": ...}``. Writes go
to a temporary file that is renamed into place under an exclusive file lock,
so readers never observe partial records. The library starts with the disk
layer disabled; the CLI (or a caller) enables it with `configure`.
"""

from __future__ import annotations

import json
import os
import re
import tempfile
from pathlib import Path
from typing import Any

from filelock import FileLock

FORMAT_VERSION = 1
ENV_VAR = "QFH_CACHE_DIR"


def default_dir() -> Path:
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    base = os.environ.get("XDG_CACHE_HOME") or os.path.join(os.path.expanduser("~"), ".cache")
    return Path(base) / "qfh"


def _slug(key: str) -> str:
    return re.sub(r"[^A-Za-z0-9_.,=-]", "_", key) or "_"


class DiskCache:
    def __init__(self, root: str | os.PathLike):
        self.root = Path(root)

    def _path(self, kind: str, key: str) -> Path:
        return self.root / _slug(kind) / f"{_slug(key)}.json"

    def get(self, kind: str, key: str) -> Any | None:
        path = self._path(kind, key)
        try:
            with open(path, encoding="utf-8") as fh:
                rec = json.load(fh)
        except (OSError, ValueError):
            return None
        if rec.get("format_version") != FORMAT_VERSION or rec.get("key") != key:
            return None
        return rec["value"]

    def put(self, kind: str, key: str, value: Any) -> None:
        path = self._path(kind, key)
        path.parent.mkdir(parents=True, exist_ok=True)
        rec = {"format_version": FORMAT_VERSION, "kind": kind, "key": key, "value": value}
        with FileLock(str(path) + ".lock"):
            fd, tmp = tempfile.mkstemp(dir=path.parent, suffix=".tmp")
            try:
                with os.fdopen(fd, "w", encoding="utf-8") as fh:
                    json.dump(rec, fh, sort_keys=True)
                os.replace(tmp, path)
            except BaseException:
                if os.path.exists(tmp):
                    os.unlink(tmp)
                raise

    def entries(self) -> list[Path]:
        if not self.root.exists():
            return []
        return sorted(self.root.glob("*/*.json"))

    def clear(self) -> int:
        files = self.entries()
        for f in files:
            f.unlink()
        for lock in self.root.glob("*/*.lock"):
            lock.unlink()
        return len(files)


_disk: DiskCache | None = None


def configure(root: str | os.PathLike | DiskCache | None) -> DiskCache | None:
    """Enable the disk layer at root, or disable it with None."""
    global _disk
    if root is None or isinstance(root, DiskCache):
        _disk = root
    else:
        _disk = DiskCache(root)
    return _disk


def disk() -> DiskCache | None:
    return _disk


def lookup(kind: str, key: str) -> Any | None:
    return _disk.get(kind, key) if _disk is not None else None


def store(kind: str, key: str, value: Any) -> None:
    if _disk is not None:
        _disk.put(kind, key, value)


def clear_memory() -> None:
    """Drop every in-process memo so the next computation starts cold."""
    from . import combinat, fhq, symfunc, symmgroup
    from .hecke import grbasis, tables

    grbasis._memory.clear()
    fhq._memory.clear()
    for fn in (combinat._standard_tableaux, fhq.classical_structure_constants, fhq._psi_e_monomial,
               fhq.n_matrix, fhq._n_inverse, fhq.psi_inverse, symfunc._mm_table,
               symfunc._e_monomial, symmgroup._class_elements, grbasis._plan,
               grbasis.gamma_fast, tables.tables):
        fn.cache_clear()
