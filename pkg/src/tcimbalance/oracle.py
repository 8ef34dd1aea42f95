"""Exhaustive reference solvers.

``brute_force_all`` tries every vertex ordering; ``brute_force_clean`` tries
every ordering of blocks (single cover vertices and whole cliques). Both
score orderings in numpy batches through :func:`imbalance_batch`.
"""

from __future__ import annotations

import itertools

import numpy as np

from .errors import TooLarge
from .graph import Decomposition, Graph
from .layout import CleanPlacement

BATCH = 1 << 15


def imbalance_batch(g: Graph, pos: np.ndarray) -> np.ndarray:
    """Imbalance of many orderings at once.

    ``pos[b, v-1]`` is the position of vertex ``v`` in ordering ``b``.
    """
    if not g.edges:
        return np.zeros(len(pos), dtype=np.int64)
    edges = np.array(g.sorted_edges(), dtype=np.int64) - 1
    u, v = edges[:, 0], edges[:, 1]
    # incidence: d_v += sign(pos_u - pos_v), d_u -= the same
    inc = np.zeros((len(edges), g.n), dtype=np.int64)
    inc[np.arange(len(edges)), v] = 1
    inc[np.arange(len(edges)), u] = -1
    sign = np.sign(pos[:, u].astype(np.int64) - pos[:, v])
    return np.abs(sign @ inc).sum(axis=1)


def brute_force_all(g: Graph, max_n: int = 9) -> tuple[int, tuple]:
    """Minimum imbalance over all n! orderings and the lexicographically first optimum."""
    if g.n > max_n:
        raise TooLarge(f"n={g.n} exceeds oracle limit {max_n}")
    if g.n == 0:
        return 0, ()
    best, witness = None, None
    perms = itertools.permutations(range(g.n))
    while True:
        chunk = np.array(list(itertools.islice(perms, BATCH)), dtype=np.int64)
        if not len(chunk):
            break
        vals = imbalance_batch(g, np.argsort(chunk, axis=1))
        i = int(np.argmin(vals))
        if best is None or vals[i] < best:
            best, witness = int(vals[i]), tuple(int(x) + 1 for x in chunk[i])
    return best, witness


def multiset_permutations(items):
    """Distinct permutations of a multiset in lexicographic order."""
    a = sorted(items)
    n = len(a)
    while True:
        yield tuple(a)
        i = n - 2
        while i >= 0 and a[i] >= a[i + 1]:
            i -= 1
        if i < 0:
            return
        j = n - 1
        while a[j] <= a[i]:
            j -= 1
        a[i], a[j] = a[j], a[i]
        a[i + 1:] = reversed(a[i + 1:])


class _Blocks:
    """Block structure of a decomposition for vectorised scoring.

    Labels ``0..k-1`` are cover vertices; cliques with equal (type, size)
    share a label, since swapping them is an automorphism of the graph.
    """

    def __init__(self, d: Decomposition):
        self.d = d
        k = d.k
        groups: dict = {}
        for idx, c in enumerate(d.cliques):
            groups.setdefault((tuple(sorted(c.ctype)), c.size), []).append(idx)
        self.label_cliques = [idx for _, idx in sorted(groups.items())]
        self.labels = list(range(k))
        for j, members in enumerate(self.label_cliques):
            self.labels += [k + j] * len(members)
        # block ids: 0..k-1 cover vertices, k + clique index for cliques
        self.label_block = []  # per label, block ids in occurrence order
        for s in range(k):
            self.label_block.append(np.array([s]))
        for members in self.label_cliques:
            self.label_block.append(np.array([k + i for i in members]))
        nb = k + d.r
        self.block_size = np.ones(nb, dtype=np.int64)
        self.vertex_block = np.zeros(d.graph.n, dtype=np.int64)
        self.vertex_offset = np.zeros(d.graph.n, dtype=np.int64)
        for s, v in enumerate(d.cover.members):
            self.vertex_block[v - 1] = s
        for i, c in enumerate(d.cliques):
            self.block_size[k + i] = c.size
            for off, v in enumerate(c.vertices):
                self.vertex_block[v - 1] = k + i
                self.vertex_offset[v - 1] = off

    def blocks_of(self, seqs: np.ndarray) -> np.ndarray:
        out = np.empty_like(seqs)
        for lab, blocks in enumerate(self.label_block):
            mask = seqs == lab
            occ = np.cumsum(mask, axis=1) - 1
            out[mask] = blocks[occ[mask]]
        return out

    def positions(self, blocks: np.ndarray) -> np.ndarray:
        sizes = self.block_size[blocks]
        starts = np.cumsum(sizes, axis=1) - sizes
        block_start = np.empty_like(starts)
        np.put_along_axis(block_start, blocks, starts, axis=1)
        return block_start[:, self.vertex_block] + self.vertex_offset

    def placement(self, block_row) -> CleanPlacement:
        k = self.d.k
        cover = self.d.cover.members
        order, loc = [], [0] * self.d.r
        for b in block_row:
            b = int(b)
            if b < k:
                order.append(cover[b])
            else:
                loc[b - k] = len(order) + 1
        return CleanPlacement(tuple(order), tuple(loc))


def brute_force_clean(d: Decomposition, max_blocks: int = 10) -> tuple[int, CleanPlacement]:
    """Minimum imbalance over all clean orderings, returned as a placement.

    Block orders whose reversal is lexicographically smaller are skipped;
    reversal does not change imbalance.
    """
    nblocks = d.k + d.r
    if nblocks > max_blocks:
        raise TooLarge(f"k + r = {nblocks} exceeds oracle limit {max_blocks}")
    if nblocks == 0:
        return 0, CleanPlacement((), ())
    bl = _Blocks(d)
    best, witness = None, None
    seqs = (s for s in multiset_permutations(bl.labels) if s <= s[::-1])
    while True:
        chunk = np.array(list(itertools.islice(seqs, BATCH)), dtype=np.int64)
        if not len(chunk):
            break
        blocks = bl.blocks_of(chunk)
        vals = imbalance_batch(d.graph, bl.positions(blocks))
        i = int(np.argmin(vals))
        if best is None or vals[i] < best:
            best, witness = int(vals[i]), bl.placement(blocks[i])
    return best, witness
