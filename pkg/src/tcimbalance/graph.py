"""Explicit graphs, twin covers and the succinct representation.

Vertices are the integers ``1..n``. A twin cover ``S`` splits ``G - S`` into
cliques of true twins; the decomposition records these cliques in a fixed
order (by smallest vertex id) together with their type ``N(C) & S`` and class.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property

from .errors import InvalidGraph, NotATwinCover, TooLarge, TooLargeToExpand

EXPAND_LIMIT = 10**6

SMALL = "small"
LARGE_EVEN = "even"
LARGE_ODD = "odd"


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 0:
            raise InvalidGraph(f"vertex count must be nonnegative, got {self.n}")
        norm = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise InvalidGraph(f"self-loop at {u}")
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise InvalidGraph(f"edge ({u}, {v}) out of range 1..{self.n}")
            norm.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", frozenset(norm))

    @classmethod
    def from_edges(cls, n, edges):
        edges = list(edges)
        seen = set()
        for u, v in edges:
            key = (min(u, v), max(u, v))
            if key in seen:
                raise InvalidGraph(f"duplicate edge {key}")
            seen.add(key)
        return cls(n, frozenset(seen))

    @property
    def vertices(self):
        return range(1, self.n + 1)

    @cached_property
    def adj(self) -> dict[int, frozenset]:
        nbrs = {v: set() for v in self.vertices}
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return {v: frozenset(s) for v, s in nbrs.items()}

    def neighbors(self, v):
        return self.adj[v]

    def has_edge(self, u, v):
        return (min(u, v), max(u, v)) in self.edges

    def sorted_edges(self):
        return sorted(self.edges)


@dataclass(frozen=True)
class TwinCover:
    members: tuple

    def __post_init__(self):
        members = tuple(self.members)
        if len(set(members)) != len(members):
            raise InvalidGraph(f"duplicate twin cover members: {members}")
        object.__setattr__(self, "members", members)

    @property
    def k(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.members)


@dataclass(frozen=True, order=True)
class CliqueClass:
    """Interchangeability class of a clique.

    ``kind`` is ``"small"`` (then ``size`` is the clique size, at most k),
    ``"even"`` or ``"odd"`` for large cliques (``size`` is 0).
    ``ctype`` is the clique's type as a sorted tuple of cover vertex ids.
    """

    ctype: tuple
    kind: str
    size: int = 0

    @property
    def is_large(self):
        return self.kind != SMALL


@dataclass(frozen=True)
class CliqueInfo:
    vertices: tuple
    ctype: frozenset

    @property
    def size(self):
        return len(self.vertices)


def classify_clique(c: CliqueInfo | int, k: int, ctype=None) -> CliqueClass:
    """Class of a clique: small(size) when ``size <= k``, else large even/odd.

    Accepts either a :class:`CliqueInfo` or a bare size together with ``ctype``.
    """
    if isinstance(c, CliqueInfo):
        size, ctype = c.size, c.ctype
    else:
        size = c
    if size < 1:
        raise ValueError("clique size must be positive")
    t = tuple(sorted(ctype or ()))
    if size <= k:
        return CliqueClass(t, SMALL, size)
    return CliqueClass(t, LARGE_EVEN if size % 2 == 0 else LARGE_ODD)


@dataclass(frozen=True)
class Decomposition:
    graph: Graph
    cover: TwinCover
    cliques: tuple
    classes: tuple

    @property
    def k(self):
        return self.cover.k

    @property
    def r(self):
        return len(self.cliques)

    @property
    def max_clique_size(self):
        return max((c.size for c in self.cliques), default=0)

    def census(self) -> dict:
        """Number of cliques per class."""
        out: dict = {}
        for cls in self.classes:
            out[cls] = out.get(cls, 0) + 1
        return out


def _components(g: Graph, removed: set):
    seen = set(removed)
    comps = []
    for s in g.vertices:
        if s in seen:
            continue
        stack, comp = [s], []
        seen.add(s)
        while stack:
            v = stack.pop()
            comp.append(v)
            for u in g.adj[v]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        comps.append(tuple(sorted(comp)))
    comps.sort(key=lambda c: c[0])
    return comps


def validate_twin_cover(g: Graph, s) -> Decomposition:
    """Check that ``s`` is a twin cover of ``g`` and decompose ``g - s``.

    Raises :class:`NotATwinCover` naming a vertex pair that violates the
    true-twin condition.
    """
    cover = s if isinstance(s, TwinCover) else TwinCover(tuple(s))
    for v in cover:
        if not 1 <= v <= g.n:
            raise InvalidGraph(f"cover vertex {v} not in graph")
    cset = set(cover.members)
    cliques = []
    for comp in _components(g, cset):
        first = comp[0]
        t = g.adj[first] & cset
        for u, v in itertools.combinations(comp, 2):
            if not g.has_edge(u, v):
                raise NotATwinCover((u, v), "same component but not adjacent")
        for v in comp[1:]:
            if g.adj[v] & cset != t:
                raise NotATwinCover((first, v), "different neighbourhoods in the cover")
        cliques.append(CliqueInfo(comp, frozenset(t)))
    k = cover.k
    classes = tuple(classify_clique(c, k) for c in cliques)
    return Decomposition(g, cover, tuple(cliques), classes)


def is_twin_cover(g: Graph, s) -> bool:
    try:
        validate_twin_cover(g, s)
    except NotATwinCover:
        return False
    return True


def find_min_twin_cover(g: Graph, max_n: int = 16) -> TwinCover:
    """Smallest twin cover by brute-force subset enumeration.

    Subsets are tried by increasing size, then lexicographically.
    """
    if g.n > max_n:
        raise TooLarge(f"n={g.n} exceeds brute-force limit {max_n}")
    for size in range(g.n + 1):
        for subset in itertools.combinations(g.vertices, size):
            if is_twin_cover(g, subset):
                return TwinCover(subset)
    raise AssertionError("the full vertex set is always a twin cover")


@dataclass(frozen=True)
class SuccinctGraph:
    """Cover graph on ``1..k`` plus a list of ``(size, attachments)`` cliques."""

    k: int
    cover_edges: frozenset
    cliques: tuple

    def __post_init__(self):
        if self.k < 0:
            raise InvalidGraph("k must be nonnegative")
        edges = set()
        for u, v in self.cover_edges:
            if u == v or not (1 <= u <= self.k and 1 <= v <= self.k):
                raise InvalidGraph(f"bad cover edge ({u}, {v})")
            edges.add((min(u, v), max(u, v)))
        cl = []
        for size, att in self.cliques:
            size = int(size)
            if size < 1:
                raise InvalidGraph(f"clique size must be positive, got {size}")
            att = frozenset(att)
            if any(not 1 <= a <= self.k for a in att):
                raise InvalidGraph(f"attachment set {sorted(att)} not within 1..{self.k}")
            cl.append((size, att))
        object.__setattr__(self, "cover_edges", frozenset(edges))
        object.__setattr__(self, "cliques", tuple(cl))

    @property
    def r(self):
        return len(self.cliques)

    @property
    def sizes(self):
        return [s for s, _ in self.cliques]

    def total_vertices(self):
        return self.k + sum(self.sizes)

    def cover_neighbors(self, i):
        return {v if u == i else u for u, v in self.cover_edges if i in (u, v)}


def expand_succinct(sg: SuccinctGraph, limit: int = EXPAND_LIMIT):
    """Explicit graph of a succinct representation.

    Cover vertices are ``1..k``; clique vertices follow consecutively in
    clique order. Returns ``(graph, cover)``.
    """
    total = sg.total_vertices()
    if total > limit:
        raise TooLargeToExpand(f"expansion needs {total} vertices, limit is {limit}")
    edges = set(sg.cover_edges)
    nxt = sg.k + 1
    for size, att in sg.cliques:
        block = range(nxt, nxt + size)
        edges.update(itertools.combinations(block, 2))
        edges.update((a, v) for a in att for v in block)
        nxt += size
    return Graph(total, frozenset(edges)), TwinCover(tuple(range(1, sg.k + 1)))


def compress_to_succinct(d: Decomposition) -> SuccinctGraph:
    """Succinct form of a decomposed graph; cover member ``i`` becomes ``i+1``."""
    index = {v: i + 1 for i, v in enumerate(d.cover.members)}
    g = d.graph
    cover_edges = {
        (index[u], index[v]) for u, v in g.edges if u in index and v in index
    }
    cliques = tuple((c.size, frozenset(index[v] for v in c.ctype)) for c in d.cliques)
    return SuccinctGraph(d.k, frozenset(cover_edges), cliques)
