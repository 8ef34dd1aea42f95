"""Succinct-input routines: bounds, the Partition reduction, the k = 1 solver
and a certificate verifier that never expands a clique.

All arithmetic is on Python ints, so clique sizes may be arbitrarily large.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BudgetExceeded, MalformedCertificate
from .graph import LARGE_EVEN, LARGE_ODD, SuccinctGraph
from .layout import clique_vertex_sum, excess_closed_form, gamma

DEFAULT_K1_BUDGET = 10**8


@dataclass(frozen=True)
class Certificate:
    """Cover order over ``1..k`` and a location in ``1..k+1`` per clique."""

    cover_order: tuple
    locations: tuple

    def validate(self, sg: SuccinctGraph):
        if sorted(self.cover_order) != list(range(1, sg.k + 1)):
            raise MalformedCertificate(f"cover order must be a permutation of 1..{sg.k}")
        if len(self.locations) != sg.r:
            raise MalformedCertificate(f"expected {sg.r} locations, got {len(self.locations)}")
        for q in self.locations:
            if not 1 <= q <= sg.k + 1:
                raise MalformedCertificate(f"location {q} outside 1..{sg.k + 1}")


def iota(sg: SuccinctGraph) -> int:
    return sum(gamma(size) for size, _ in sg.cliques)


def _attached(sg: SuccinctGraph):
    return [i for i, (_, att) in enumerate(sg.cliques) if att]


def lower_bound(sg: SuccinctGraph) -> int:
    """Sum of intrinsic imbalances; with k = 1 every attached odd clique adds one.

    Unattached cliques see no cover vertex, so they never pay the parity term.
    """
    bound = iota(sg)
    if sg.k == 1:
        bound += sum(sg.cliques[i][0] % 2 for i in _attached(sg))
    return bound


def reduce_partition(numbers) -> tuple[SuccinctGraph, int]:
    """Imbalance instance and target equivalent to a Partition instance."""
    numbers = [int(a) for a in numbers]
    if not numbers:
        raise ValueError("Partition instance must be nonempty")
    if any(a < 1 for a in numbers):
        raise ValueError("Partition numbers must be positive")
    sg = SuccinctGraph(1, frozenset(), tuple((a, frozenset({1})) for a in numbers))
    return sg, lower_bound(sg)


@dataclass(frozen=True)
class K1Solution:
    imbalance: int
    left: tuple
    right: tuple

    def certificate(self, r: int) -> Certificate:
        right = set(self.right)
        return Certificate((1,), tuple(2 if i in right else 1 for i in range(r)))


def _lex_smallest_subset(sizes, suffix, target):
    chosen, rem, j = [], target, 0
    while rem:
        for i in range(j, len(sizes)):
            a = sizes[i]
            if a <= rem and (suffix[i + 1] >> (rem - a)) & 1:
                chosen.append(i)
                rem -= a
                j = i + 1
                break
        else:
            return None
    return tuple(chosen)


def solve_k1(sg: SuccinctGraph, budget: int = DEFAULT_K1_BUDGET) -> K1Solution:
    """Exact optimum for a single cover vertex via subset-sum.

    The witness lists clique indices (0-based) left and right of the cover
    vertex; among optimal splits the left set is the lexicographically
    smallest. Unattached cliques go left. Raises :class:`BudgetExceeded`
    when the suffix bitset table (cliques x total size bits) is too big.
    """
    if sg.k != 1:
        raise ValueError(f"solve_k1 needs k = 1, got k = {sg.k}")
    att = _attached(sg)
    sizes = [sg.cliques[i][0] for i in att]
    total = sum(sizes)
    if len(sizes) * (total + 1) > budget:
        raise BudgetExceeded(
            f"subset-sum table of {len(sizes)} x {total + 1} exceeds budget {budget}"
        )
    # suffix[i]: bitset of sums reachable using sizes[i:]
    suffix = [1] * (len(sizes) + 1)
    for i in range(len(sizes) - 1, -1, -1):
        suffix[i] = suffix[i + 1] | (suffix[i + 1] << sizes[i])
    best = next(s for s in range(total // 2, -1, -1) if (suffix[0] >> s) & 1)
    picks = [_lex_smallest_subset(sizes, suffix, t) for t in {best, total - best}]
    left_att = min(p for p in picks if p is not None)
    left_set = {att[i] for i in left_att}
    unattached = [i for i in range(sg.r) if not sg.cliques[i][1]]
    left = tuple(sorted(left_set | set(unattached)))
    right = tuple(i for i in att if i not in left_set)
    value = lower_bound(sg) + (total - 2 * best)
    return K1Solution(value, left, right)


def verify_certificate(sg: SuccinctGraph, cert: Certificate) -> int:
    """Exact imbalance of the clean layout described by ``cert``.

    Runs in time polynomial in k, r and the bit length of the sizes: cover
    vertices use per-location sums of attached sizes, small cliques (size
    at most k) are summed vertex by vertex, large ones in closed form.
    """
    cert.validate(sg)
    k = sg.k
    pi = tuple(cert.cover_order)
    rank = {s: i + 1 for i, s in enumerate(pi)}
    total = 0
    for i, s in enumerate(pi, start=1):
        nbrs = sg.cover_neighbors(s)
        bal = sum(1 if rank[u] > i else -1 for u in nbrs)
        for (size, att), q in zip(sg.cliques, cert.locations):
            if s in att:
                bal += size if q > i else -size
        total += abs(bal)
    for (size, att), q in zip(sg.cliques, cert.locations):
        left = set(pi[: q - 1])
        delta = len(att - left) - len(att & left)
        if size <= k:
            total += clique_vertex_sum(size, delta)
        else:
            total += gamma(size) + excess_closed_form(
                LARGE_EVEN if size % 2 == 0 else LARGE_ODD, delta
            )
    return total
