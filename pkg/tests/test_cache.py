"""Cluster-table cache keyed by the canonical overlap graph."""

import os

from clusterperm.cache import (
    atomic_write_text,
    cache_dir,
    cache_key,
    cached_cluster_counts,
    load_table,
    save_table,
)
from clusterperm.clusters import cluster_counts
from clusterperm.graph import PatternCollection

WILF_PAIR = (
    PatternCollection(((1, 4, 3, 2, 6, 5, 9, 8, 7),)),
    PatternCollection(((1, 3, 4, 2, 6, 5, 8, 9, 7),)),
)


def test_key_deterministic():
    c = PatternCollection(((1, 2, 3), (2, 1, 3)))
    assert cache_key(c) == cache_key(c)
    assert len(cache_key(c)) == 64


def test_isomorphic_graphs_share_key():
    assert cache_key(WILF_PAIR[0]) == cache_key(WILF_PAIR[1])


def test_distinct_graphs_distinct_keys():
    assert cache_key(PatternCollection(((1, 2, 3),))) != cache_key(
        PatternCollection(((1, 3, 2),))
    )


def test_cache_dir_env(monkeypatch, tmp_path):
    monkeypatch.setenv("CLUSTERPERM_CACHE_DIR", str(tmp_path / "c"))
    assert cache_dir() == tmp_path / "c"


def test_save_load_round_trip(tmp_path):
    coll = PatternCollection(((1, 3, 2),))
    table = cluster_counts(coll, 9, 4)
    path = save_table(table, tmp_path)
    assert path.exists()
    hit = load_table(coll, 9, 4, tmp_path)
    assert hit is not None
    assert hit.totals == table.totals
    assert load_table(coll, 10, 4, tmp_path) is None


def test_cached_counts_hit_equals_recompute(tmp_path):
    coll = PatternCollection(((1, 2, 3), (1, 3, 2)))
    first = cached_cluster_counts(coll, 8, 4, tmp_path)
    second = cached_cluster_counts(coll, 8, 4, tmp_path)
    direct = cluster_counts(coll, 8, 4)
    assert first.totals == second.totals == direct.totals


def test_isomorphic_collections_share_cached_table(tmp_path):
    t1 = cached_cluster_counts(WILF_PAIR[0], 11, 2, tmp_path)
    t2 = cached_cluster_counts(WILF_PAIR[1], 11, 2, tmp_path)
    assert t1.totals == t2.totals
    assert len(list(tmp_path.iterdir())) == 1


def test_atomic_write(tmp_path):
    target = tmp_path / "sub" / "out.json"
    atomic_write_text(target, "hello\n")
    assert target.read_text() == "hello\n"
    atomic_write_text(target, "world\n")
    assert target.read_text() == "world\n"
    leftovers = [p for p in target.parent.iterdir() if p.suffix == ".tmp"]
    assert leftovers == []
