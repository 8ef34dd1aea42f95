"""Random instances with a planted twin cover."""

from __future__ import annotations

import itertools
import random

from .graph import Graph, SuccinctGraph, TwinCover, expand_succinct


def random_succinct(k: int, sizes, rng: random.Random, edge_prob: float = 0.5) -> SuccinctGraph:
    """Succinct graph with the given clique sizes and random cover edges and types."""
    cover_edges = frozenset(
        e for e in itertools.combinations(range(1, k + 1), 2) if rng.random() < edge_prob
    )
    cliques = tuple(
        (size, frozenset(v for v in range(1, k + 1) if rng.random() < 0.5)) for size in sizes
    )
    return SuccinctGraph(k, cover_edges, cliques)


def random_clique_sizes(total: int, max_clique: int, rng: random.Random) -> list:
    sizes = []
    while total > 0:
        s = rng.randint(1, min(max_clique, total))
        sizes.append(s)
        total -= s
    return sizes


def random_instance(n: int, k: int, max_clique: int, seed: int,
                    relabel: bool = True) -> tuple[Graph, TwinCover]:
    """Explicit graph on ``n`` vertices with a planted twin cover of size ``k``.

    Cover edges and clique types are uniformly random; clique sizes are
    uniform in ``1..max_clique``. Vertex ids are shuffled unless ``relabel``
    is false. Deterministic for a given seed.
    """
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    if max_clique < 1 and n > k:
        raise ValueError("max_clique must be positive")
    rng = random.Random(seed)
    sg = random_succinct(k, random_clique_sizes(n - k, max_clique, rng), rng)
    g, cover = expand_succinct(sg)
    if not relabel:
        return g, cover
    perm = list(range(1, n + 1))
    rng.shuffle(perm)
    relabelled = Graph(n, frozenset((perm[u - 1], perm[v - 1]) for u, v in g.edges))
    return relabelled, TwinCover(tuple(sorted(perm[v - 1] for v in cover)))
