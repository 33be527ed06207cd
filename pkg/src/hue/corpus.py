"""Seeded random hypergraphs for cross-validation runs."""

from __future__ import annotations

import numpy as np

from .hypergraph import Hypergraph

__all__ = ["random_hypergraph", "random_corpus", "random_subgraph", "random_shrink"]


def random_hypergraph(rng: np.random.Generator, n: int, num_edges: int, max_tries: int = 200) -> Hypergraph:
    """Up to ``num_edges`` distinct, pairwise non-nested edges of sizes 2..n-1."""
    edges: list[frozenset] = []
    for _ in range(max_tries):
        if len(edges) == num_edges:
            break
        size = int(rng.integers(2, n))
        e = frozenset(int(v) + 1 for v in rng.choice(n, size=size, replace=False))
        if any(e <= f or f <= e for f in edges):
            continue
        edges.append(e)
    return Hypergraph.build(n, [sorted(e) for e in edges], warn=False)


def random_corpus(count: int = 200, seed: int = 20240607, *, min_n: int = 3, max_n: int = 7,
                  max_edges: int = 6) -> list[Hypergraph]:
    rng = np.random.default_rng(seed)
    out = []
    while len(out) < count:
        n = int(rng.integers(min_n, max_n + 1))
        m = int(rng.integers(1, max_edges + 1))
        out.append(random_hypergraph(rng, n, m))
    return out


def random_subgraph(rng: np.random.Generator, hg: Hypergraph) -> Hypergraph:
    """Keep each edge with probability 1/2 (at least one edge survives)."""
    keep = [e for e in hg.edges if rng.random() < 0.5] or [hg.edges[int(rng.integers(hg.num_edges))]]
    return hg.sub(keep)


def random_shrink(rng: np.random.Generator, hg: Hypergraph) -> Hypergraph:
    """Replace every edge by a random subset of size >= 2, then keep the minimal ones.

    Every original edge still contains some edge of the result.
    """
    shrunk = set()
    for e in hg.edges:
        size = int(rng.integers(2, len(e) + 1))
        shrunk.add(tuple(sorted(int(v) for v in rng.choice(e, size=size, replace=False))))
    return Hypergraph.build(hg.n, sorted(shrunk), reduce_to_minimal=True, warn=False)
