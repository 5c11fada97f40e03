"""Exact maximum average degree.

``mad(G) = max 2|E(H)|/|V(H)|`` is twice the edge density of a densest
subgraph.  :func:`mad_exact` finds it with the closure formulation of the
densest-subgraph problem: for a trial density ``p/q`` the quantity
``max_S q|E(S)| - p|S|`` equals ``q|E| - mincut`` in a network with one node
per edge and one per vertex.  All values are ``fractions.Fraction``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ._caps import scale_cap
from .errors import EmptyGraph, ScaleExceeded
from .flow import FlowNetwork
from .graph import Graph, bits, to_mask

BRUTEFORCE_CAP = 20


@dataclass(frozen=True)
class DensityCertificate:
    vertices: frozenset[int]
    density: Fraction

    def __post_init__(self):
        if not self.vertices:
            raise ValueError("certificate subgraph must be nonempty")


def induced_edge_count(g: Graph, vertices) -> int:
    mask = to_mask(vertices)
    return sum(bin(g.masks[v] & mask).count("1") for v in bits(mask)) // 2


def average_degree(g: Graph, vertices) -> Fraction:
    vs = set(vertices)
    return Fraction(2 * induced_edge_count(g, vs), len(vs))


def _denser_than(g: Graph, rate: Fraction) -> frozenset[int] | None:
    """A vertex set with |E(S)|/|S| > rate, or None if none exists."""
    p, q = rate.numerator, rate.denominator
    m = g.m
    source, sink = m + g.n, m + g.n + 1
    net = FlowNetwork(m + g.n + 2)
    big = q * m + 1
    for i, (u, v) in enumerate(g.sorted_edges()):
        net.add_edge(source, i, q)
        net.add_edge(i, m + u, big)
        net.add_edge(i, m + v, big)
    for v in range(g.n):
        net.add_edge(m + v, sink, p)
    cut = net.max_flow(source, sink)
    if q * m - cut <= 0:
        return None
    side = net.source_side(source)
    return frozenset(x - m for x in side if m <= x < m + g.n)


def mad_exact(g: Graph) -> DensityCertificate:
    """Maximum average degree with a witnessing vertex set."""
    if g.n == 0:
        raise EmptyGraph("mad of the empty graph is undefined")
    best = frozenset(range(g.n))
    lo = Fraction(g.m, g.n)
    hi = Fraction(g.max_degree(), 2)
    # distinct achievable densities a/b, c/d with b, d <= n differ by >= 1/n^2
    gap = Fraction(1, g.n * g.n)
    while hi - lo >= gap:
        mid = (lo + hi) / 2
        found = _denser_than(g, mid)
        if found is None:
            hi = mid
        else:
            best = found
            lo = Fraction(induced_edge_count(g, found), len(found))
    if _denser_than(g, lo) is not None:
        raise AssertionError("density search failed to certify optimality")
    return DensityCertificate(best, 2 * lo)


def mad(g: Graph) -> Fraction:
    return mad_exact(g).density


def mad_bruteforce(g: Graph, cap: int | None = None) -> DensityCertificate:
    """Subset enumeration over all nonempty vertex sets; test oracle."""
    if g.n == 0:
        raise EmptyGraph("mad of the empty graph is undefined")
    limit = scale_cap(BRUTEFORCE_CAP) if cap is None else cap
    if g.n > limit:
        raise ScaleExceeded(f"mad_bruteforce capped at {limit} vertices, got {g.n}")
    edges = [0] * (1 << g.n)
    best_mask, best = 1, Fraction(0)
    for mask in range(1, 1 << g.n):
        low = (mask & -mask).bit_length() - 1
        rest = mask ^ (1 << low)
        edges[mask] = edges[rest] + bin(g.masks[low] & rest).count("1")
        value = Fraction(2 * edges[mask], bin(mask).count("1"))
        if value > best:
            best, best_mask = value, mask
    return DensityCertificate(frozenset(bits(best_mask)), best)


def check_mad_threshold(g: Graph, bound) -> bool:
    """True iff mad(g) < bound, compared exactly with one flow.

    A set has density e/s >= bound/2 iff it beats bound/2 - 1/(4qn), since
    e/s and bound/2 = p/(2q) differ by at least 1/(2qn) when unequal.
    """
    if g.n == 0:
        raise EmptyGraph("mad of the empty graph is undefined")
    bound = Fraction(bound)
    if bound <= 0:
        return False
    rate = bound / 2 - Fraction(1, 4 * bound.denominator * g.n)
    return _denser_than(g, rate) is None
