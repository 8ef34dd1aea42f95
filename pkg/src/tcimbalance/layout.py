"""Imbalance of layouts, clean placements and specifications.

A location ``q`` in ``1..k+1`` places a clique after the first ``q-1`` cover
vertices of the cover ordering. For a clique of type ``T`` at location ``q``,
``delta = |T - S_{q-1}| - |T & S_{q-1}|`` is (right minus left) cover
neighbours, and the ``j``-th vertex of a clique of size ``p`` has imbalance
``|delta + (p - j) - (j - 1)|``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import IncompleteSpec, InvalidLayout
from .graph import LARGE_EVEN, LARGE_ODD, SMALL, CliqueInfo, Decomposition, Graph


def check_layout(g: Graph, order) -> tuple:
    order = tuple(order)
    if len(order) != g.n or set(order) != set(g.vertices):
        raise InvalidLayout(f"layout is not a permutation of 1..{g.n}")
    return order


def vertex_imbalances(g: Graph, order) -> dict[int, int]:
    order = check_layout(g, order)
    pos = {v: i for i, v in enumerate(order)}
    out = {}
    for v in order:
        pv = pos[v]
        after = sum(1 for u in g.adj[v] if pos[u] > pv)
        out[v] = abs(after - (len(g.adj[v]) - after))
    return out


def imbalance_of_layout(g: Graph, order) -> int:
    return sum(vertex_imbalances(g, order).values())


def is_clean(order, d: Decomposition) -> bool:
    """True iff every clique of G - S occupies consecutive positions."""
    pos = {v: i for i, v in enumerate(order)}
    for c in d.cliques:
        ps = [pos[v] for v in c.vertices]
        if max(ps) - min(ps) + 1 != len(ps):
            return False
    return True


def gamma(ell: int) -> int:
    """Intrinsic imbalance of a clique on ``ell`` vertices (exact integer)."""
    if ell < 1:
        raise ValueError("clique size must be positive")
    return ell * ell // 2


def cover_delta(ctype, cover_order, location: int) -> int:
    """Right-minus-left count of a type's cover neighbours at ``location``."""
    left = set(cover_order[: location - 1])
    t = set(ctype)
    return len(t - left) - len(t & left)


def clique_vertex_sum(size: int, delta: int) -> int:
    return sum(abs(delta + (size - j) - (j - 1)) for j in range(1, size + 1))


def clique_total_and_excess(c: CliqueInfo, cover_order, location: int) -> tuple[int, int]:
    """Total and excess imbalance of a consecutive clique, by per-vertex summation."""
    total = clique_vertex_sum(c.size, cover_delta(c.ctype, cover_order, location))
    return total, total - gamma(c.size)


def excess_closed_form(parity: str, delta: int) -> int:
    """Excess imbalance of a large clique: floor(delta^2/2) if even, ceil if odd."""
    sq = delta * delta
    if parity == LARGE_EVEN:
        return sq // 2
    if parity == LARGE_ODD:
        return (sq + 1) // 2
    raise ValueError(f"parity must be 'even' or 'odd', got {parity!r}")


def class_cost(cls, delta: int) -> int:
    """Per-clique cost of a class at a location with cover difference ``delta``.

    Small classes carry their full imbalance, large ones only the excess.
    """
    if cls.kind == SMALL:
        return clique_vertex_sum(cls.size, delta)
    return excess_closed_form(cls.kind, delta)


@dataclass(frozen=True)
class CleanPlacement:
    cover_order: tuple
    locations: tuple

    def validate(self, d: Decomposition):
        if sorted(self.cover_order) != sorted(d.cover.members):
            raise InvalidLayout("cover order is not a permutation of the cover")
        if len(self.locations) != d.r:
            raise InvalidLayout(f"expected {d.r} locations, got {len(self.locations)}")
        for q in self.locations:
            if not 1 <= q <= d.k + 1:
                raise InvalidLayout(f"location {q} outside 1..{d.k + 1}")


class SpecPair:
    """Count (alpha) and size (beta) specification over (class, location).

    Zero entries may be omitted; equality and hashing ignore them.
    """

    __slots__ = ("alpha", "beta")

    def __init__(self, alpha=None, beta=None):
        self.alpha = dict(alpha or {})
        self.beta = dict(beta or {})

    def _key(self):
        return (
            frozenset((k, v) for k, v in self.alpha.items() if v),
            frozenset((k, v) for k, v in self.beta.items() if v),
        )

    def __eq__(self, other):
        return isinstance(other, SpecPair) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        a = {k: v for k, v in sorted(self.alpha.items()) if v}
        return f"SpecPair(alpha={a})"

    def count(self, cls, loc):
        return self.alpha.get((cls, loc), 0)

    def size(self, cls, loc):
        return self.beta.get((cls, loc), 0)


def spec_of_placement(d: Decomposition, cp: CleanPlacement) -> SpecPair:
    cp.validate(d)
    alpha: dict = {}
    beta: dict = {}
    for c, cls, q in zip(d.cliques, d.classes, cp.locations):
        alpha[(cls, q)] = alpha.get((cls, q), 0) + 1
        beta[(cls, q)] = beta.get((cls, q), 0) + c.size
    return SpecPair(alpha, beta)


def build_layout_from_placement(d: Decomposition, cp: CleanPlacement) -> tuple:
    """Canonical clean layout: cliques sharing a location go in index order."""
    cp.validate(d)
    buckets = [[] for _ in range(d.k + 1)]
    for c, q in zip(d.cliques, cp.locations):
        buckets[q - 1].extend(c.vertices)
    order = []
    for q in range(d.k + 1):
        order.extend(buckets[q])
        if q < d.k:
            order.append(cp.cover_order[q])
    return tuple(order)


def _check_complete(d: Decomposition, spec: SpecPair):
    locs = range(1, d.k + 2)
    census = d.census()
    sizes: dict = {}
    for c, cls in zip(d.cliques, d.classes):
        sizes[cls] = sizes.get(cls, 0) + c.size
    for key, v in list(spec.alpha.items()) + list(spec.beta.items()):
        cls, q = key
        if v < 0 or (v and (cls not in census or q not in locs)):
            raise IncompleteSpec(f"entry {key} -> {v} does not fit the instance")
    for cls, cnt in census.items():
        if sum(spec.count(cls, q) for q in locs) != cnt:
            raise IncompleteSpec(f"count census mismatch for {cls}")
        if sum(spec.size(cls, q) for q in locs) != sizes[cls]:
            raise IncompleteSpec(f"size census mismatch for {cls}")
        if cls.kind == SMALL:
            for q in locs:
                if spec.size(cls, q) != cls.size * spec.count(cls, q):
                    raise IncompleteSpec(f"small class {cls} has inconsistent sizes")


def imbalance_from_spec(d: Decomposition, pi, spec: SpecPair) -> int:
    """Imbalance shared by all clean layouts consistent with ``pi`` and ``spec``.

    Sums, over cover vertices, the absolute right-minus-left neighbour count
    (cover edges plus specified clique sizes), then the per-class clique
    costs and the intrinsic imbalance of the large cliques.
    """
    _check_complete(d, spec)
    k = d.k
    pi = tuple(pi)
    g = d.graph
    cover = set(pi)
    total = 0
    for i in range(1, k + 1):
        s = pi[i - 1]
        prefix = set(pi[:i])
        cover_nbrs = g.adj[s] & cover
        bal = len(cover_nbrs - prefix) - len(cover_nbrs & prefix)
        for (cls, q), b in spec.beta.items():
            if s in cls.ctype:
                bal += b if q > i else -b
        total += abs(bal)
    for (cls, q), a in spec.alpha.items():
        if a:
            total += a * class_cost(cls, cover_delta(cls.ctype, pi, q))
    total += sum(gamma(c.size) for c, cls in zip(d.cliques, d.classes) if cls.is_large)
    return total
