"""Content-addressed disk cache for rank computations.

Keyed by a sha256 of the canonical (field, elements) text; each entry is one
JSON file written atomically via rename, so concurrent writers race benignly
(results are deterministic, last writer wins).  Enabled by pointing
QLFORM_CACHE_DIR at a directory.

Cached entries restore rank, pivot indices, and kernel witnesses; echelon
pivot columns are not persisted (no caller of the cached path needs them).
"""

from __future__ import annotations

import hashlib
import json
import os
import tempfile

from .towers import EchelonData, canonical_rank_key, elem_from_expr, elem_to_expr


class DiskRankCache:
    def __init__(self, directory: str):
        self.directory = directory
        os.makedirs(directory, exist_ok=True)

    def _path(self, K, elems):
        digest = hashlib.sha256(canonical_rank_key(K, elems).encode()).hexdigest()
        return os.path.join(self.directory, f"rank-{digest}.json")

    def get(self, K, elems):
        path = self._path(K, elems)
        try:
            with open(path, encoding="utf-8") as handle:
                obj = json.load(handle)
        except (OSError, ValueError):
            return None
        try:
            witnesses = tuple(
                tuple(elem_from_expr(e, K) for e in wit) for wit in obj["witnesses"]
            )
            return EchelonData(
                rank=obj["rank"],
                pivot_indices=tuple(obj["pivot_indices"]),
                witnesses=witnesses,
                pivots=None,
            )
        except Exception:
            return None

    def put(self, K, elems, data):
        names = K.base_vars
        obj = {
            "rank": data.rank,
            "pivot_indices": list(data.pivot_indices),
            "witnesses": [
                [elem_to_expr(e, names) for e in wit] for wit in data.witnesses
            ],
        }
        path = self._path(K, elems)
        fd, tmp = tempfile.mkstemp(dir=self.directory, suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as handle:
                json.dump(obj, handle)
            os.replace(tmp, path)
        except OSError:
            try:
                os.unlink(tmp)
            except OSError:
                pass
