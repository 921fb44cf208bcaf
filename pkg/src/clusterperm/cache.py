"""Persistent cache for cluster tables, keyed by the canonical overlap graph.

Collections whose graphs are isomorphic (label-preserving on edges, vertex
labels free, distinguished vertex fixed) have identical cluster statistics,
so the canonical form of the graph plus the fill bounds (N, Q) is a sound
cache key.  Tables are stored as JSON files; writes go through a temporary
file in the same directory followed by an atomic rename.
"""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
from itertools import permutations as _it_permutations
from pathlib import Path

from .clusters import ClusterTable, cluster_counts
from .graph import PatternCollection, build_graph

ENV_CACHE_DIR = "CLUSTERPERM_CACHE_DIR"


def _canonical_encoding(graph) -> tuple:
    """Minimal edge encoding over all re-labelings of the non-distinguished
    vertices (vertex permutation labels are discarded; lengths are kept since
    edge labels fix the boundary set sizes)."""
    rest = [v for v in graph.vertices if v != (1,)]
    best = ((), ())
    first = True
    for image in _it_permutations(range(1, len(rest) + 1)):
        index = {(1,): 0}
        index.update({v: i for v, i in zip(rest, image)})
        by_index = sorted(rest, key=lambda v: index[v])
        lens = tuple(len(v) for v in by_index)
        enc = tuple(
            sorted(
                (
                    index[e.source],
                    index[e.target],
                    e.label.mu_i,
                    e.label.mu_f,
                    e.label.length,
                )
                for e in graph.edges
            )
        )
        cand = (lens, enc)
        if first or cand < best:
            best = cand
            first = False
    return best


def cache_key(collection: PatternCollection) -> str:
    """Hex digest identifying the collection's overlap graph up to
    label-preserving isomorphism."""
    graph = build_graph(collection)
    blob = repr(_canonical_encoding(graph)).encode()
    return hashlib.sha256(blob).hexdigest()


def cache_dir() -> Path:
    env = os.environ.get(ENV_CACHE_DIR)
    if env:
        return Path(env)
    return Path.home() / ".cache" / "clusterperm"


def _table_path(key: str, n_max: int, q_max: int, directory: Path) -> Path:
    return directory / f"{key}-N{n_max}-Q{q_max}.json"


def atomic_write_text(path: Path, text: str):
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def save_table(table: ClusterTable, directory: Path | None = None) -> Path:
    directory = directory or cache_dir()
    key = cache_key(table.collection)
    doc = {
        "n_max": table.n_max,
        "q_max": table.q_max,
        "totals": [
            [n, q, str(c)] for (n, q), c in sorted(table.totals.items())
        ],
    }
    path = _table_path(key, table.n_max, table.q_max, directory)
    atomic_write_text(path, json.dumps(doc) + "\n")
    return path


def load_table(
    collection: PatternCollection,
    n_max: int,
    q_max: int,
    directory: Path | None = None,
) -> ClusterTable | None:
    directory = directory or cache_dir()
    path = _table_path(cache_key(collection), n_max, q_max, directory)
    if not path.exists():
        return None
    doc = json.loads(path.read_text())
    totals = {(n, q): int(c) for n, q, c in doc["totals"]}
    return ClusterTable(collection, doc["n_max"], doc["q_max"], totals)


def cached_cluster_counts(
    collection: PatternCollection,
    n_max: int,
    q_max: int,
    directory: Path | None = None,
) -> ClusterTable:
    """Load the table from cache or compute and store it."""
    hit = load_table(collection, n_max, q_max, directory)
    if hit is not None:
        return ClusterTable(collection, hit.n_max, hit.q_max, hit.totals)
    table = cluster_counts(collection, n_max, q_max)
    save_table(table, directory)
    return table
