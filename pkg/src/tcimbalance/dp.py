"""Dynamic programme over reachable (count, size) specifications.

Cliques are placed one at a time at each of the k+1 locations, and only the
states that can actually be reached are kept. A state stores the count of
every (class, location) and the total size of every large (class, location);
sizes of small classes follow from their counts. The table does not depend
on the cover ordering, so it is built once and then scored for every
ordering of the cover.
"""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .errors import StateBudgetExceeded
from .graph import Decomposition
from .layout import CleanPlacement, SpecPair, class_cost, cover_delta, gamma

DEFAULT_STATE_BUDGET = 10**7


@dataclass
class SpecTable:
    d: Decomposition
    classes: list
    large: list  # indices into classes that are large
    levels: list  # levels[q]: {state: (parent_state, location)} after placing q cliques
    order: list  # final states, sorted by lexicographically smallest location vector

    @property
    def nloc(self):
        return self.d.k + 1

    def spec(self, state) -> SpecPair:
        L = self.nloc
        nc = len(self.classes)
        alpha, beta = {}, {}
        for ci, cls in enumerate(self.classes):
            for q in range(L):
                a = state[ci * L + q]
                if a:
                    alpha[(cls, q + 1)] = a
                    if not cls.is_large:
                        beta[(cls, q + 1)] = a * cls.size
        for j, ci in enumerate(self.large):
            for q in range(L):
                b = state[nc * L + j * L + q]
                if b:
                    beta[(self.classes[ci], q + 1)] = b
        return SpecPair(alpha, beta)

    def locations(self, state) -> tuple:
        locs = []
        for q in range(len(self.levels) - 1, 0, -1):
            state, loc = self.levels[q][state]
            locs.append(loc)
        return tuple(reversed(locs))

    def size_matrix(self) -> np.ndarray:
        """Total clique size per (class, location) for every final state."""
        L, nc = self.nloc, len(self.classes)
        arr = np.array(self.order, dtype=np.int64).reshape(len(self.order), -1)
        sizes = arr[:, : nc * L].copy()
        for ci, cls in enumerate(self.classes):
            if not cls.is_large:
                sizes[:, ci * L:(ci + 1) * L] *= cls.size
        for j, ci in enumerate(self.large):
            sizes[:, ci * L:(ci + 1) * L] = arr[:, nc * L + j * L: nc * L + (j + 1) * L]
        return sizes


def build_table(d: Decomposition, state_budget: int = DEFAULT_STATE_BUDGET) -> SpecTable:
    classes = sorted(set(d.classes))
    cidx = {c: i for i, c in enumerate(classes)}
    large = [i for i, c in enumerate(classes) if c.is_large]
    lidx = {ci: j for j, ci in enumerate(large)}
    L = d.k + 1
    width = (len(classes) + len(large)) * L
    start = (0,) * width
    levels = [{start: None}]
    rank = {start: 0}
    for clique, cls in zip(d.cliques, d.classes):
        ci = cidx[cls]
        best: dict = {}
        nxt: dict = {}
        for state, rk in rank.items():
            for q in range(L):
                new = list(state)
                new[ci * L + q] += 1
                if cls.is_large:
                    new[(len(classes) + lidx[ci]) * L + q] += clique.size
                new = tuple(new)
                key = (rk, q)
                if new not in best or key < best[new]:
                    best[new] = key
                    nxt[new] = (state, q + 1)
        if len(nxt) > state_budget:
            raise StateBudgetExceeded(
                f"{len(nxt)} reachable states exceed the budget of {state_budget}"
            )
        ordered = sorted(nxt, key=best.__getitem__)
        rank = {s: i for i, s in enumerate(ordered)}
        levels.append(nxt)
    return SpecTable(d, classes, large, levels, sorted(rank, key=rank.__getitem__))


def enumerate_reachable_specs(d: Decomposition, state_budget: int = DEFAULT_STATE_BUDGET) -> set:
    """All complete specification pairs realised by some clean placement."""
    table = build_table(d, state_budget)
    return {table.spec(s) for s in table.order}


def _score(table: SpecTable, pi, sizes, counts) -> np.ndarray:
    """Imbalance of every final state under cover order ``pi``."""
    d, L = table.d, table.nloc
    g = d.graph
    cover = set(pi)
    cost = np.array(
        [class_cost(cls, cover_delta(cls.ctype, pi, q)) for cls in table.classes
         for q in range(1, L + 1)],
        dtype=np.int64,
    )
    values = counts @ cost
    for i, s in enumerate(pi, start=1):
        prefix = set(pi[:i])
        cover_nbrs = g.adj[s] & cover
        const = len(cover_nbrs - prefix) - len(cover_nbrs & prefix)
        w = np.array(
            [(1 if q > i else -1) if s in cls.ctype else 0 for cls in table.classes
             for q in range(1, L + 1)],
            dtype=np.int64,
        )
        values = values + np.abs(sizes @ w + const)
    return values


def _best_for_orders(table, orders, target=None):
    nc, L = len(table.classes), table.nloc
    arr = np.array(table.order, dtype=np.int64).reshape(len(table.order), -1)
    counts = arr[:, : nc * L]
    sizes = table.size_matrix()
    best = None
    for pi in orders:
        vals = _score(table, pi, sizes, counts)
        i = int(np.argmin(vals))  # first minimum = smallest location vector
        if best is None or vals[i] < best[0]:
            best = (int(vals[i]), pi, i)
            if target is not None and best[0] <= target:
                break
    return best


@dataclass(frozen=True)
class DPResult:
    imbalance: int
    placement: CleanPlacement
    states: int


def solve_xp(d: Decomposition, target=None, state_budget: int = DEFAULT_STATE_BUDGET,
             threads: int = 1) -> DPResult:
    """Minimum imbalance over all cover orders and reachable specifications.

    With ``target`` the search may stop at the first value not above it.
    Ties go to the smallest cover order, then the smallest location vector.
    """
    table = build_table(d, state_budget)
    intrinsic = sum(gamma(c.size) for c, cls in zip(d.cliques, d.classes) if cls.is_large)
    orders = list(itertools.permutations(sorted(d.cover.members)))
    if threads > 1 and target is None and len(orders) > 2:
        chunk = math.ceil(len(orders) / threads)
        parts = [orders[i:i + chunk] for i in range(0, len(orders), chunk)]
        with ProcessPoolExecutor(threads) as ex:
            results = list(ex.map(_best_for_orders, [table] * len(parts), parts))
        best = min(results, key=lambda b: (b[0], b[1]))
    else:
        best = _best_for_orders(table, orders, None if target is None else target - intrinsic)
    value, pi, i = best
    value += intrinsic
    placement = CleanPlacement(tuple(pi), table.locations(table.order[i]))
    return DPResult(value, placement, sum(len(lv) for lv in table.levels))
