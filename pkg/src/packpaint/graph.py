"""Simple undirected graphs on vertices ``0..n-1`` and their distance primitives.

Adjacency is kept twice: as sorted neighbor tuples for iteration and as
integer bit masks for the set arithmetic the searches lean on.  Graphs are
immutable once built.
"""

from __future__ import annotations

import enum
from collections import deque
from itertools import combinations
from typing import Iterable, Sequence

from ._caps import scale_cap
from .errors import LoopEdge, NotAPermutation, ScaleExceeded, VertexOutOfRange


class _Unreachable(enum.Enum):
    UNREACHABLE = "unreachable"

    def __repr__(self):
        return "UNREACHABLE"


class _Acyclic(enum.Enum):
    ACYCLIC = "acyclic"

    def __repr__(self):
        return "ACYCLIC"


UNREACHABLE = _Unreachable.UNREACHABLE
ACYCLIC = _Acyclic.ACYCLIC

MIS_CAP = 40


def bits(mask: int) -> Iterable[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


class Graph:
    """A simple undirected graph.  Build with :func:`from_edge_list`."""

    __slots__ = ("n", "edges", "adj", "masks", "_balls")

    def __init__(self, n: int, edges: frozenset[tuple[int, int]]):
        self.n = n
        self.edges = edges
        nbrs: list[list[int]] = [[] for _ in range(n)]
        for u, v in edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        self.adj = tuple(tuple(sorted(x)) for x in nbrs)
        self.masks = tuple(to_mask(x) for x in self.adj)
        self._balls: dict[int, tuple[int, ...]] = {}

    def __repr__(self):
        return f"Graph(n={self.n}, m={len(self.edges)})"

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.masks[u] >> v & 1)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def ball_masks(self, radius: int) -> tuple[int, ...]:
        """Per vertex, the mask of other vertices at distance 1..radius."""
        if radius not in self._balls:
            out = []
            for v in range(self.n):
                seen = 1 << v
                frontier = 1 << v
                for _ in range(radius):
                    nxt = 0
                    for w in bits(frontier):
                        nxt |= self.masks[w]
                    frontier = nxt & ~seen
                    if not frontier:
                        break
                    seen |= frontier
                out.append(seen & ~(1 << v))
            self._balls[radius] = tuple(out)
        return self._balls[radius]

    def check_vertex(self, v: int) -> None:
        if not (isinstance(v, int) and 0 <= v < self.n):
            raise VertexOutOfRange(f"vertex {v!r} not in 0..{self.n - 1}")


def from_edge_list(n: int, pairs: Iterable[Sequence[int]]) -> Graph:
    """Build a simple graph; repeated pairs collapse, loops are rejected."""
    if n < 0:
        raise VertexOutOfRange(f"negative vertex count {n}")
    edges = set()
    for pair in pairs:
        u, v = int(pair[0]), int(pair[1])
        for x in (u, v):
            if not 0 <= x < n:
                raise VertexOutOfRange(f"vertex {x} not in 0..{n - 1}")
        if u == v:
            raise LoopEdge(f"loop at vertex {u}")
        edges.add((u, v) if u < v else (v, u))
    return Graph(n, frozenset(edges))


def induced_subgraph(g: Graph, keep: Iterable[int]) -> tuple[Graph, list[int]]:
    """Return ``(h, old)`` where vertex ``i`` of ``h`` is ``old[i]`` of ``g``."""
    old = sorted(set(keep))
    new = {v: i for i, v in enumerate(old)}
    edges = [(new[u], new[v]) for u, v in g.edges if u in new and v in new]
    return from_edge_list(len(old), edges), old


def remove_vertices(g: Graph, drop: Iterable[int]) -> tuple[Graph, list[int]]:
    dropped = set(drop)
    return induced_subgraph(g, (v for v in range(g.n) if v not in dropped))


def add_edges(g: Graph, pairs: Iterable[Sequence[int]]) -> Graph:
    return from_edge_list(g.n, list(g.edges) + [tuple(p) for p in pairs])


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Image of ``g`` under the vertex map ``v -> perm[v]``."""
    return from_edge_list(g.n, [(perm[u], perm[v]) for u, v in g.edges])


def bfs_distances(g: Graph, source: int) -> list[int | None]:
    dist: list[int | None] = [None] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        x = queue.popleft()
        for y in g.adj[x]:
            if dist[y] is None:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def distance(g: Graph, u: int, v: int):
    """Hop distance between ``u`` and ``v``, or ``UNREACHABLE``."""
    g.check_vertex(u)
    g.check_vertex(v)
    d = bfs_distances(g, u)[v]
    return UNREACHABLE if d is None else d


def connected_components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in g.adj[x]:
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
                    queue.append(y)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(connected_components(g)) == 1


def power(g: Graph, i: int) -> Graph:
    """The graph on V(g) joining every pair at distance 1..i."""
    if i < 1:
        raise ValueError("power exponent must be >= 1")
    balls = g.ball_masks(i)
    edges = [(v, w) for v in range(g.n) for w in bits(balls[v]) if v < w]
    return from_edge_list(g.n, edges)


def square(g: Graph) -> Graph:
    return power(g, 2)


def girth(g: Graph):
    """Length of a shortest cycle, or ``ACYCLIC`` for forests."""
    best = None
    for root in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[root] = 0
        queue = deque([root])
        while queue:
            x = queue.popleft()
            if best is not None and 2 * dist[x] + 1 >= best:
                break
            for y in g.adj[x]:
                if dist[y] < 0:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif parent[x] != y:
                    length = dist[x] + dist[y] + 1
                    if best is None or length < best:
                        best = length
    return ACYCLIC if best is None else best


def is_i_independent(g: Graph, s: Iterable[int], i: int) -> bool:
    """True iff every two members of ``s`` are at distance >= i + 1 in ``g``."""
    members = sorted(set(s))
    for v in members:
        g.check_vertex(v)
    if i < 1:
        raise ValueError("radius must be >= 1")
    balls = g.ball_masks(i)
    mask = to_mask(members)
    return all(not (balls[v] & mask) for v in members)


def independent_in(g: Graph, s: Iterable[int]) -> bool:
    m = to_mask(s)
    return all(not (g.masks[v] & m) for v in bits(m))


def max_independent_set(g: Graph, cap: int | None = None) -> frozenset[int]:
    """A maximum independent set by branch and bound on bit masks."""
    limit = scale_cap(MIS_CAP) if cap is None else cap
    if g.n > limit:
        raise ScaleExceeded(f"max_independent_set capped at {limit} vertices, got {g.n}")
    masks = g.masks
    best = [0, 0]  # size, mask

    def popcount(x):
        return bin(x).count("1")

    def greedy_bound(cand):
        # clique cover of the candidate set bounds any independent subset
        bound = 0
        while cand:
            v = (cand & -cand).bit_length() - 1
            clique = 1 << v
            common = cand & masks[v]
            while common:
                w = (common & -common).bit_length() - 1
                clique |= 1 << w
                common &= masks[w]
            cand &= ~clique
            bound += 1
        return bound

    def search(cand, chosen, size):
        # forced picks: vertices with at most one candidate neighbor
        changed = True
        while changed:
            changed = False
            for v in bits(cand):
                if not cand >> v & 1:
                    continue
                if popcount(masks[v] & cand) <= 1:
                    chosen |= 1 << v
                    size += 1
                    cand &= ~(masks[v] | (1 << v))
                    changed = True
        if not cand:
            if size > best[0]:
                best[0], best[1] = size, chosen
            return
        if size + greedy_bound(cand) <= best[0]:
            return
        v = max(bits(cand), key=lambda x: (popcount(masks[x] & cand), -x))
        search(cand & ~(masks[v] | (1 << v)), chosen | (1 << v), size + 1)
        search(cand & ~(1 << v), chosen, size)

    search((1 << g.n) - 1, 0, 0)
    return frozenset(bits(best[1]))


def max_independent_set_bruteforce(g: Graph) -> int:
    """Independence number by subset enumeration; test oracle only."""
    for size in range(g.n, 0, -1):
        for sub in combinations(range(g.n), size):
            if independent_in(g, sub):
                return size
    return 0


def degeneracy_check(g: Graph, order: Sequence[int]) -> int:
    """Largest number of neighbors a vertex has *later* in ``order``.

    Coloring greedily from the end of ``order`` backwards therefore needs at
    most ``result + 1`` colors.
    """
    if sorted(order) != list(range(g.n)):
        raise NotAPermutation("order must list every vertex exactly once")
    pos = {v: i for i, v in enumerate(order)}
    return max((sum(1 for w in g.adj[v] if pos[w] > pos[v]) for v in order), default=0)


def degeneracy(g: Graph) -> tuple[int, list[int]]:
    """Degeneracy and a witnessing elimination order (min-degree peeling)."""
    deg = g.degrees()
    alive = [True] * g.n
    order = []
    best = 0
    for _ in range(g.n):
        v = min((x for x in range(g.n) if alive[x]), key=lambda x: (deg[x], x))
        best = max(best, deg[v])
        order.append(v)
        alive[v] = False
        for w in g.adj[v]:
            if alive[w]:
                deg[w] -= 1
    return best, order


def is_regular(g: Graph, d: int) -> bool:
    return all(len(a) == d for a in g.adj)


def is_bipartite(g: Graph) -> bool:
    side = [-1] * g.n
    for s in range(g.n):
        if side[s] >= 0:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in g.adj[x]:
                if side[y] < 0:
                    side[y] = 1 - side[x]
                    queue.append(y)
                elif side[y] == side[x]:
                    return False
    return True


def is_complete(g: Graph) -> bool:
    return g.m == g.n * (g.n - 1) // 2
