"""Integer programme for a fixed cover order and sign signature.

Variable ``x[tau, p, q]`` counts cliques of type ``tau`` and size ``p`` at
location ``q``. The sign signature ``t`` linearises the cover vertices'
absolute values: ``t_j * (R(j) - L(j))`` is constrained to be nonnegative
and added to the objective. Models are solved exactly by a depth-first
branch and bound over the (type, size) groups.
"""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .graph import Decomposition
from .layout import CleanPlacement, clique_vertex_sum, cover_delta


@dataclass
class IlpModel:
    cover_order: tuple
    signs: tuple
    groups: list  # (type tuple, size) with at least one clique, sorted
    census: dict  # group -> number of cliques
    cost: dict  # group -> [c at location 1..k+1]
    sign_const: list  # per cover position j: constant part of R(j) - L(j)
    sign_coef: list  # per j: {group: [coefficient of x at location q]}

    @property
    def nloc(self):
        return len(self.cover_order) + 1

    def objective(self, x: dict) -> int:
        """Objective of an assignment ``x[(group, q)]`` (q is 1-based)."""
        val = sum(self.cost[g][q - 1] * x.get((g, q), 0)
                  for g in self.groups for q in range(1, self.nloc + 1))
        return val + sum(t * s for t, s in zip(self.signs, self.sign_values(x)))

    def sign_values(self, x: dict) -> list:
        """``R(j) - L(j)`` for each cover position under ``x``."""
        out = []
        for const, coef in zip(self.sign_const, self.sign_coef):
            out.append(const + sum(c[q - 1] * x.get((g, q), 0)
                                   for g, c in coef.items()
                                   for q in range(1, self.nloc + 1)))
        return out

    def feasible(self, x: dict) -> bool:
        for g in self.groups:
            if sum(x.get((g, q), 0) for q in range(1, self.nloc + 1)) != self.census[g]:
                return False
        if any(v < 0 for v in x.values()):
            return False
        return all(t * s >= 0 for t, s in zip(self.signs, self.sign_values(x)))

    def dump(self) -> str:
        lines = [f"# cover order {' '.join(map(str, self.cover_order))}",
                 f"# signs {' '.join('+1' if t > 0 else '-1' for t in self.signs)}",
                 "minimize"]
        for g in self.groups:
            tau, p = g
            for q in range(1, self.nloc + 1):
                lines.append(f"  var x[{{{','.join(map(str, tau))}}},{p},{q}]"
                             f" in [0,{self.census[g]}] cost {self.cost[g][q - 1]}")
        lines.append("subject to")
        for g in self.groups:
            tau, p = g
            terms = " + ".join(f"x[{{{','.join(map(str, tau))}}},{p},{q}]"
                               for q in range(1, self.nloc + 1))
            lines.append(f"  {terms} = {self.census[g]}")
        for j, (t, const, coef) in enumerate(
                zip(self.signs, self.sign_const, self.sign_coef), start=1):
            terms = " ".join(f"{c[q - 1]:+d}*x[{{{','.join(map(str, g[0]))}}},{g[1]},{q}]"
                             for g, c in coef.items() for q in range(1, self.nloc + 1)
                             if c[q - 1])
            lines.append(f"  {t:+d} * ({const:+d} {terms}) >= 0   # R({j}) - L({j})")
        return "\n".join(lines) + "\n"


def build_ilp(d: Decomposition, pi, t) -> IlpModel:
    pi, t = tuple(pi), tuple(t)
    if sorted(pi) != sorted(d.cover.members):
        raise ValueError("cover order must be a permutation of the cover")
    if len(t) != d.k or any(s not in (1, -1) for s in t):
        raise ValueError("sign signature must be a +-1 vector of length k")
    census: dict = {}
    for c in d.cliques:
        g = (tuple(sorted(c.ctype)), c.size)
        census[g] = census.get(g, 0) + 1
    groups = sorted(census)
    nloc = d.k + 1
    cost = {
        (tau, p): [clique_vertex_sum(p, cover_delta(tau, pi, q)) for q in range(1, nloc + 1)]
        for tau, p in groups
    }
    cover = set(pi)
    g = d.graph
    sign_const, sign_coef = [], []
    for j, s in enumerate(pi, start=1):
        nb = g.adj[s] & cover
        after = set(pi[j:])
        before = set(pi[: j - 1])
        sign_const.append(len(nb & after) - len(nb & before))
        sign_coef.append({
            (tau, p): [p if q > j else -p for q in range(1, nloc + 1)]
            for tau, p in groups if s in tau
        })
    return IlpModel(pi, t, groups, census, cost, sign_const, sign_coef)


def compositions(total: int, parts: int):
    """All ways to write ``total`` as an ordered sum of ``parts`` nonnegative ints."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


@dataclass
class IlpSolution:
    status: str  # "optimal" or "infeasible"
    value: int | None = None
    x: dict = field(default_factory=dict)
    nodes: int = 0


def _search(m: IlpModel, cutoff=None) -> IlpSolution:
    L = m.nloc
    k = len(m.signs)
    # per group: list of (distribution, c-cost, signed contribution per j)
    options = []
    for g in m.groups:
        opts = []
        for dist in compositions(m.census[g], L):
            cc = sum(a * b for a, b in zip(m.cost[g], dist))
            sv = tuple(
                m.signs[j] * sum(a * b for a, b in zip(m.sign_coef[j][g], dist))
                if g in m.sign_coef[j] else 0
                for j in range(k)
            )
            opts.append((cc + sum(sv), cc, sv, dist))
        opts.sort(key=lambda o: o[:2])
        options.append((g, opts))
    # branch on the groups with the widest cost spread first
    options.sort(key=lambda go: -m.census[go[0]] * (max(m.cost[go[0]]) - min(m.cost[go[0]])))
    n = len(options)
    # suffix bounds: min c-cost, and per j the min / max signed contribution
    rem_c = [0] * (n + 1)
    rem_lo = [[0] * k for _ in range(n + 1)]
    rem_hi = [[0] * k for _ in range(n + 1)]
    for i in range(n - 1, -1, -1):
        opts = options[i][1]
        rem_c[i] = rem_c[i + 1] + min(o[1] for o in opts)
        for j in range(k):
            rem_lo[i][j] = rem_lo[i + 1][j] + min(o[2][j] for o in opts)
            rem_hi[i][j] = rem_hi[i + 1][j] + max(o[2][j] for o in opts)
    start_sign = [m.signs[j] * m.sign_const[j] for j in range(k)]

    best = [math.inf if cutoff is None else cutoff, None]
    nodes = 0
    chosen = [None] * n

    def bound(i, acc_c, acc_s):
        lb = acc_c + rem_c[i]
        for j in range(k):
            if acc_s[j] + rem_hi[i][j] < 0:
                return None
            lb += max(0, acc_s[j] + rem_lo[i][j])
        return lb

    def dfs(i, acc_c, acc_s):
        nonlocal nodes
        nodes += 1
        if i == n:
            val = acc_c + sum(acc_s)
            if val < best[0]:
                best[0] = val
                best[1] = list(chosen)
            return
        for _, cc, sv, dist in options[i][1]:
            nxt_s = [a + b for a, b in zip(acc_s, sv)]
            lb = bound(i + 1, acc_c + cc, nxt_s)
            if lb is None or lb >= best[0]:
                continue
            chosen[i] = dist
            dfs(i + 1, acc_c + cc, nxt_s)

    lb0 = bound(0, 0, start_sign)
    if lb0 is not None and lb0 < best[0]:
        dfs(0, 0, start_sign)
    if best[1] is None:
        return IlpSolution("infeasible", nodes=nodes)
    x = {}
    for (g, _), dist in zip(options, best[1]):
        for q, v in enumerate(dist, start=1):
            x[(g, q)] = v
    return IlpSolution("optimal", best[0], x, nodes)


def solve_ilp_model(m: IlpModel) -> IlpSolution:
    """Exact optimum of the model, or status ``"infeasible"``."""
    return _search(m)


def realize(d: Decomposition, m: IlpModel, x: dict) -> CleanPlacement:
    """Clean placement of an assignment: each group fills locations in index order."""
    locs = [0] * d.r
    members: dict = {}
    for i, c in enumerate(d.cliques):
        members.setdefault((tuple(sorted(c.ctype)), c.size), []).append(i)
    for g, idx in members.items():
        it = iter(idx)
        for q in range(1, m.nloc + 1):
            for _ in range(x.get((g, q), 0)):
                locs[next(it)] = q
    return CleanPlacement(tuple(m.cover_order), tuple(locs))


@dataclass(frozen=True)
class FptResult:
    imbalance: int
    placement: CleanPlacement
    nodes: int


def _solve_orders(d, orders, cutoff=None):
    best, nodes = None, 0
    for pi in orders:
        for t in itertools.product((1, -1), repeat=d.k):
            m = build_ilp(d, pi, t)
            sol = _search(m, cutoff if best is None else best[0])
            nodes += sol.nodes
            if sol.status == "optimal":
                best = (sol.value, pi, t, sol.x)
    return best, nodes


def solve_fpt(d: Decomposition, threads: int = 1) -> FptResult:
    """Minimum over all cover orders and sign signatures of the model optimum."""
    orders = list(itertools.permutations(sorted(d.cover.members)))
    if threads > 1 and len(orders) > 2:
        chunk = math.ceil(len(orders) / threads)
        parts = [orders[i:i + chunk] for i in range(0, len(orders), chunk)]
        with ProcessPoolExecutor(threads) as ex:
            results = list(ex.map(_solve_orders, [d] * len(parts), parts))
        nodes = sum(r[1] for r in results)
        found = [r[0] for r in results if r[0] is not None]
        best = min(found, key=lambda b: (b[0], b[1], [-s for s in b[2]]))
    else:
        best, nodes = _solve_orders(d, orders)
    value, pi, t, x = best
    m = build_ilp(d, pi, t)
    return FptResult(value, realize(d, m, x), nodes)
