"""Versioned binary disk cache with lock files.

Keys are content strings; values are pickled with a version header so stale
formats are ignored rather than misread.  Writes go through an exclusive lock
file, so concurrent processes cannot interleave partial writes.
"""

from __future__ import annotations

import hashlib
import os
import pickle
import time

CACHE_VERSION = b"stablehom-cache-v1"


class DiskCache:
    def __init__(self, directory):
        self.directory = directory
        os.makedirs(directory, exist_ok=True)

    def _path(self, key):
        h = hashlib.sha256(key.encode()).hexdigest()
        return os.path.join(self.directory, h + ".bin")

    def get(self, key):
        path = self._path(key)
        try:
            with open(path, "rb") as fh:
                header = fh.read(len(CACHE_VERSION))
                if header != CACHE_VERSION:
                    return None
                return pickle.load(fh)
        except (OSError, pickle.UnpicklingError, EOFError):
            return None

    def put(self, key, value):
        path = self._path(key)
        lock = path + ".lock"
        for _ in range(200):
            try:
                fd = os.open(lock, os.O_CREAT | os.O_EXCL | os.O_WRONLY)
                break
            except FileExistsError:
                time.sleep(0.01)
        else:
            return False
        try:
            tmp = path + ".tmp"
            with open(tmp, "wb") as fh:
                fh.write(CACHE_VERSION)
                pickle.dump(value, fh)
            os.replace(tmp, path)
        finally:
            os.close(fd)
            os.unlink(lock)
        return True


def default_cache():
    directory = os.environ.get("STABLEHOM_CACHE")
    if not directory:
        directory = os.path.join(os.getcwd(), ".stablehom_cache")
    return DiskCache(directory)


def rep_key(rep):
    """Stable content key for a rep: its expression when it has one, else a
    hash of dims and the action on generating morphisms."""
    expr = getattr(rep, "expr", None)
    if expr is not None:
        return f"expr:{expr}"
    h = hashlib.sha256()
    h.update(repr(rep.dims).encode())
    for mid in rep.cat.generators:
        h.update(repr((mid, rep.act(mid).payload())).encode())
    return "rep:" + h.hexdigest()[:24]
