"""Coloring-extension recipes for the reducible configurations.

All recipes work with the spec (1^2, 2^k): class 0 is the 1-color ``a``,
class 1 the 1-color ``b`` and classes ``2..k+1`` the 2-colors.  Given a
configuration and a coloring ``phi`` of ``G - D`` (``D`` the deleted set of
that configuration), :func:`apply_reduction` checks the degree hypothesis
and then walks the case analysis of the matching proof, recoloring only
the vertices that proof touches.

Steps the proofs call "greedy" are run as a lowest-first backtracking over
the vertices they name, in the order they are named; a strict one-pass
greedy can paint itself into a corner where the proof only asserts that
some completion exists.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Mapping, Sequence

from .errors import BadPartialColoring, InconsistentForcing, SiteMismatch
from .graph import Graph, bits, from_edge_list, induced_subgraph, relabel
from .solver import PackingColoring, PackingSpec, solve, verify

A, B = 0, 1


class Kind(enum.Enum):
    PendantVertex = "PendantVertex"
    TwoThread = "TwoThread"
    AllTwoNeighbors = "AllTwoNeighbors"
    ThreeThread = "ThreeThread"
    OnlyTwoThreads = "OnlyTwoThreads"
    TwoTwoNeighbors3Vertex = "TwoTwoNeighbors3Vertex"
    OneTwoNeighbor3Vertex = "OneTwoNeighbor3Vertex"


@dataclass(frozen=True)
class Configuration:
    kind: Kind
    sites: Mapping[str, int] = field(hash=False)

    def __getitem__(self, role):
        return self.sites[role]

    def indexed(self, name: str) -> list[int]:
        out, i = [], 0
        while f"{name}[{i}]" in self.sites:
            out.append(self.sites[f"{name}[{i}]"])
            i += 1
        return out


@dataclass(frozen=True)
class Extended:
    coloring: PackingColoring
    trace: tuple[str, ...]
    recolored: frozenset[int]

    def __bool__(self):
        return True


@dataclass(frozen=True)
class HypothesisViolated:
    condition: str

    def __bool__(self):
        return False


class ReductionFailed(AssertionError):
    """A recipe step the proof guarantees did not go through."""


def spec_for(k: int) -> PackingSpec:
    return PackingSpec.ones_twos(2, k)


def _other(g: Graph, v: int, not_this: int) -> int:
    rest = [w for w in g.adj[v] if w != not_this]
    return rest[0]


# ------------------------------------------------------------ site matching


def _match(g: Graph, kind: Kind, core: Sequence[int]) -> dict[str, int] | None:
    """Full site map grown from the core vertices, or None if the pattern fails."""
    deg = g.degree
    try:
        if kind is Kind.PendantVertex:
            (u,) = core
            return {"u": u, "v": g.adj[u][0]} if deg(u) == 1 else None
        if kind is Kind.TwoThread:
            u1, u2 = core
            if not (deg(u1) == deg(u2) == 2 and g.has_edge(u1, u2)):
                return None
            return {"u1": u1, "u2": u2, "v1": _other(g, u1, u2), "v2": _other(g, u2, u1)}
        if kind is Kind.AllTwoNeighbors:
            (u,) = core
            if deg(u) == 0 or any(deg(w) != 2 for w in g.adj[u]):
                return None
            sites = {"u": u}
            for i, w in enumerate(g.adj[u]):
                sites[f"u[{i}]"] = w
                sites[f"v[{i}]"] = _other(g, w, u)
            return sites
        if kind is Kind.ThreeThread:
            u1, u2, u3 = core
            if not (deg(u1) == deg(u2) == deg(u3) == 2 and g.has_edge(u1, u2) and g.has_edge(u2, u3)):
                return None
            if u1 == u3 or g.has_edge(u1, u3):
                return None
            return {"u1": u1, "u2": u2, "u3": u3, "v1": _other(g, u1, u2), "v3": _other(g, u3, u2)}
        if kind is Kind.OnlyTwoThreads:
            (u,) = core
            if deg(u) == 0:
                return None
            sites = {"u": u}
            for i, w in enumerate(g.adj[u]):
                if deg(w) != 2:
                    return None
                far = _other(g, w, u)
                if deg(far) != 2:
                    return None
                sites[f"v[{i}]"] = w
                sites[f"v'[{i}]"] = far
            return sites
        if kind is Kind.TwoTwoNeighbors3Vertex:
            u, u1, u2 = core
            if deg(u) != 3 or not (g.has_edge(u, u1) and g.has_edge(u, u2)) or u1 == u2:
                return None
            if deg(u1) != 2 or deg(u2) != 2:
                return None
            (v3,) = [w for w in g.adj[u] if w not in (u1, u2)]
            return {"u": u, "u1": u1, "u2": u2, "v1": _other(g, u1, u), "v2": _other(g, u2, u), "v3": v3}
        if kind is Kind.OneTwoNeighbor3Vertex:
            u, u1 = core
            if deg(u) != 3 or not g.has_edge(u, u1) or deg(u1) != 2:
                return None
            u2, u3 = [w for w in g.adj[u] if w != u1]
            return {"u": u, "u1": u1, "u2": u2, "u3": u3, "v1": _other(g, u1, u)}
    except (ValueError, IndexError):
        return None
    raise ValueError(f"unknown kind {kind!r}")


def _core(cfg: Configuration) -> tuple[int, ...]:
    s = cfg.sites
    roles = {
        Kind.PendantVertex: ("u",),
        Kind.TwoThread: ("u1", "u2"),
        Kind.AllTwoNeighbors: ("u",),
        Kind.ThreeThread: ("u1", "u2", "u3"),
        Kind.OnlyTwoThreads: ("u",),
        Kind.TwoTwoNeighbors3Vertex: ("u", "u1", "u2"),
        Kind.OneTwoNeighbor3Vertex: ("u", "u1"),
    }[cfg.kind]
    try:
        return tuple(s[r] for r in roles)
    except KeyError as exc:
        raise SiteMismatch(f"{cfg.kind.value} needs role {exc.args[0]!r}") from None


def find_configurations(g: Graph, kind: Kind | str) -> list[Configuration]:
    kind = Kind(kind)
    cores: list[tuple[int, ...]] = []
    if kind in (Kind.PendantVertex, Kind.AllTwoNeighbors, Kind.OnlyTwoThreads):
        cores = [(u,) for u in range(g.n)]
    elif kind is Kind.TwoThread:
        cores = [e for e in g.sorted_edges()]
    elif kind is Kind.ThreeThread:
        cores = [(a, b, c) for b in range(g.n) for a, c in combinations(g.adj[b], 2)]
    elif kind is Kind.TwoTwoNeighbors3Vertex:
        cores = [(u, a, b) for u in range(g.n) if g.degree(u) == 3 for a, b in combinations(g.adj[u], 2)]
    elif kind is Kind.OneTwoNeighbor3Vertex:
        cores = [(u, a) for u in range(g.n) if g.degree(u) == 3 for a in g.adj[u]]
    out = []
    for core in cores:
        sites = _match(g, kind, core)
        if sites is not None:
            out.append(Configuration(kind, sites))
    return out


def deleted_set(cfg: Configuration) -> frozenset[int]:
    kind, s = cfg.kind, cfg.sites
    if kind is Kind.PendantVertex:
        return frozenset({s["u"]})
    if kind is Kind.TwoThread:
        return frozenset({s["u1"], s["u2"]})
    if kind is Kind.AllTwoNeighbors:
        return frozenset([s["u"], *cfg.indexed("u")])
    if kind is Kind.ThreeThread:
        return frozenset({s["u1"], s["u2"], s["u3"]})
    if kind is Kind.OnlyTwoThreads:
        return frozenset([*cfg.indexed("v"), *cfg.indexed("v'")])
    if kind is Kind.TwoTwoNeighbors3Vertex:
        return frozenset({s["u"], s["u1"], s["u2"]})
    return frozenset({s["u1"]})


# ------------------------------------------------------------ working state


class _Work:
    def __init__(self, g: Graph, k: int, colors: list[int | None]):
        self.g, self.k = g, k
        self.col = colors
        self.ball2 = g.ball_masks(2)
        self.twos = list(range(2, k + 2))
        self.trace: list[str] = []
        self.touched: set[int] = set()

    def is1(self, v) -> bool:
        c = self.col[v]
        return c is not None and c < 2

    def is2(self, v) -> bool:
        c = self.col[v]
        return c is not None and c >= 2

    def ok(self, v: int, c: int) -> bool:
        if c < 2:
            return all(self.col[w] != c for w in self.g.adj[v])
        return all(self.col[w] != c for w in bits(self.ball2[v]))

    def free1(self, v: int) -> list[int]:
        return [c for c in (A, B) if self.ok(v, c)]

    def free2(self, v: int, avoid=()) -> list[int]:
        return [c for c in self.twos if c not in avoid and self.ok(v, c)]

    def put(self, v: int, c: int) -> None:
        if not self.ok(v, c):
            raise ReductionFailed(f"class {c} is not available at vertex {v}")
        self.col[v] = c
        self.touched.add(v)

    def clear(self, v: int) -> None:
        self.col[v] = None
        self.touched.add(v)

    def greedy1(self, order: Sequence[int]) -> bool:
        """(Re)color ``order`` with 1-colors, lowest first, backtracking."""
        seq = list(dict.fromkeys(order))
        saved = [self.col[v] for v in seq]
        for v in seq:
            self.col[v] = None

        def rec(i):
            if i == len(seq):
                return True
            v = seq[i]
            for c in (A, B):
                if self.ok(v, c):
                    self.col[v] = c
                    if rec(i + 1):
                        return True
                    self.col[v] = None
            return False

        if rec(0):
            self.touched.update(seq)
            return True
        for v, c in zip(seq, saved):
            self.col[v] = c
        return False

    def note(self, text: str) -> None:
        self.trace.append(text)


# ------------------------------------------------------------ recipes


def _pendant(w: _Work, s) -> None:
    u, v = s["u"], s["v"]
    c = next(c for c in (A, B) if c != w.col[v])
    w.note("color u with a 1-color other than phi(v)")
    w.put(u, c)


def _two_thread(w: _Work, s) -> None:
    u1, u2, v1, v2 = s["u1"], s["u2"], s["v1"], s["v2"]
    if not w.is1(v1) or not w.is1(v2):
        first = (u2, u1) if not w.is1(v1) else (u1, u2)
        w.note("an outer vertex is not 1-colored: greedy 1-colors on the thread")
        if not w.greedy1(first):
            raise ReductionFailed("greedy 1-coloring of the thread failed")
        return
    if w.col[v1] != w.col[v2]:
        w.note("outer 1-colors differ: cross them onto the thread")
        c1, c2 = w.col[v1], w.col[v2]
        w.put(u1, c2)
        w.put(u2, c1)
        return
    same = w.col[v1]
    other = 1 - same
    # the outer vertex of small degree plays the role of v1
    if w.g.degree(v1) > w.k + 1:
        u1, u2, v1, v2 = u2, u1, v2, v1
    if v1 == v2:
        w.note("v1 = v2: u1 gets the other 1-color, u2 a free 2-color")
        w.put(u1, other)
        free = w.free2(u2)
        if not free:
            raise ReductionFailed("no 2-color left for u2")
        w.put(u2, free[0])
        return
    if w.ok(v1, other):
        w.note("recolor v1 with the other 1-color, then cross")
        w.put(v1, other)
        w.put(u1, same)
        w.put(u2, other)
        return
    blocker = min(x for x in w.g.adj[v1] if w.col[x] == other)
    w.note(f"v1 has a neighbor {blocker} with the other 1-color: u1 takes a 2-color, u2 the other 1-color")
    free = w.free2(u1)
    if not free:
        raise ReductionFailed("no 2-color left for u1")
    w.put(u1, free[0])
    w.put(u2, other)


def _all_two(w: _Work, u: int, us: list[int], vs: list[int]) -> None:
    on_v = {w.col[v] for v in vs}
    missing2 = [c for c in w.twos if c not in on_v]
    if missing2:
        w.note("a 2-color is missing on the v_i: it goes on u")
        w.put(u, missing2[0])
        for ui, vi in zip(us, vs):
            w.put(ui, next(c for c in (A, B) if c != w.col[vi]))
        return
    missing1 = [c for c in (A, B) if c not in on_v]
    if missing1:
        x = missing1[0]
        w.note("a 1-color is missing on the v_i: it goes on every u_i")
        w.put(u, 1 - x)
        for ui in us:
            w.put(ui, x)
        return
    raise ReductionFailed("every color appears on the v_i although d(u) <= k+1")


def _only_two_threads(w: _Work, cfg: Configuration) -> None:
    u = cfg["u"]
    w.note("u takes a 2-color, the threads are 1-colored outside-in")
    w.clear(u)
    free = w.free2(u)
    if not free:
        raise ReductionFailed("no 2-color for u")
    w.put(u, free[0])
    order = []
    for v, far in zip(cfg.indexed("v"), cfg.indexed("v'")):
        order += [far, v]
    if not w.greedy1(order):
        raise ReductionFailed("greedy 1-coloring of the threads failed")


def _two_two_triangle(w: _Work, s) -> None:
    u, u1, u2, v3 = s["u"], s["u1"], s["u2"], s["v3"]
    if w.k >= 2:
        # u1u2 is a 2-thread whose outer vertices are both u, of degree 3 <= k+1
        w.note("u1u2 is a 2-thread with both ends at u: color u, then run the thread recipe")
        w.put(u, next(c for c in (A, B) if c != w.col[v3]))
        _two_thread(w, {"u1": u1, "u2": u2, "v1": u, "v2": u})
        return
    if w.is2(v3):
        free = w.free1(v3)
        if not free:
            raise ReductionFailed("v3 cannot be recolored with a 1-color")
        w.note("recolor v3 with a 1-color")
        w.put(v3, free[0])
    w.note("u1 takes a 2-color, then greedy 1-colors on u, u2")
    free = w.free2(u1)
    if not free:
        raise ReductionFailed("no 2-color for u1")
    w.put(u1, free[0])
    if not w.greedy1([u, u2]):
        raise ReductionFailed("greedy 1-coloring of u, u2 failed")


def _two_two(w: _Work, s, depth: int = 0) -> None:
    u, u1, u2, v1, v2, v3 = (s[r] for r in ("u", "u1", "u2", "v1", "v2", "v3"))
    k = w.k
    if depth > 3:
        raise ReductionFailed("recoloring did not settle")
    if sum(w.is2(v) for v in (v1, v2, v3)) >= 2:
        w.note("two outer vertices carry 2-colors: greedy 1-colors on u, u1, u2")
        if w.greedy1([u, u1, u2]):
            return
        raise ReductionFailed("greedy 1-coloring of u, u1, u2 failed")
    free = w.free2(u)
    if free:
        w.note("u takes a free 2-color, greedy 1-colors on u1, u2")
        w.put(u, free[0])
        if w.greedy1([u1, u2]):
            return
        raise ReductionFailed("greedy 1-coloring of u1, u2 failed")
    deg = w.g.degree
    if deg(v3) <= k:
        if w.is2(v3):
            old = w.col[v3]
            ones = w.free1(v3)
            if not ones:
                raise ReductionFailed("v3 of small degree cannot take a 1-color")
            w.note("d(v3) <= k, v3 2-colored: v3 takes a 1-color and u its old 2-color")
            w.put(v3, ones[0])
            w.put(u, old)
            if w.greedy1([u1, u2]):
                return
            raise ReductionFailed("greedy 1-coloring of u1, u2 failed")
        # v3 is 1-colored: exactly one of v1, v2 carries a 2-color
        if w.is2(v2) and not w.is2(v1):
            u1, u2, v1, v2 = u2, u1, v2, v1
        if not w.is2(v1):
            raise ReductionFailed("no outer 2-color although u admits no 2-color")
        if w.col[v2] != w.col[v3]:
            w.note("d(v3) <= k, phi(v2) differs from phi(v3): greedy 1-colors on u, u1, u2")
            if w.greedy1([u, u1, u2]):
                return
            raise ReductionFailed("greedy 1-coloring of u, u1, u2 failed")
        w.note("d(v3) <= k, phi(v2) = phi(v3): uncolor v3, greedy 1-colors on u, u1, u2, v3")
        if w.greedy1([u, u1, u2, v3]):
            return
        raise ReductionFailed("greedy 1-coloring of u, u1, u2, v3 failed")
    # all outer vertices are (k+1)^- here
    if not any(w.is2(v) for v in (v1, v2, v3)):
        _two_two_plain(w, u, u1, u2, v1, v2, v3)
        return
    if w.is2(v3):
        ones = w.free1(v3)
        if not ones:
            raise ReductionFailed("v3 is stuck on its 2-color although u admits no 2-color")
        w.note("v3 carries the 2-color: recolor it with a 1-color and start over")
        w.put(v3, ones[0])
        _two_two(w, s, depth + 1)
        return
    if w.is2(v2):
        u1, u2, v1, v2 = u2, u1, v2, v1
    if w.col[v2] != w.col[v3]:
        w.note("v1 carries the 2-color, phi(v2) != phi(v3): greedy 1-colors on u2, u, u1")
        if w.greedy1([u2, u, u1]):
            return
        raise ReductionFailed("greedy 1-coloring of u2, u, u1 failed")
    free = w.free2(u2)
    if free:
        w.note("v1 carries the 2-color, phi(v2) = phi(v3): u2 takes a 2-color, greedy 1-colors on u, u1")
        w.put(u2, free[0])
        if w.greedy1([u, u1]):
            return
        raise ReductionFailed("greedy 1-coloring of u, u1 failed")
    a = w.col[v3]
    w.note("v1 carries the 2-color, N(v2) - u2 holds every 2-color: flip v2, color u2, u, u1")
    w.put(v2, 1 - a)
    w.put(u2, a)
    w.put(u, 1 - a)
    w.put(u1, a)


def _two_two_plain(w: _Work, u, u1, u2, v1, v2, v3) -> None:
    """No outer vertex is 2-colored and every outer vertex is (k+1)^-."""
    if w.col[v1] == w.col[v2]:
        x = w.col[v1]
        w.note("outer 1-colors agree on v1, v2: v3 takes the other 1-color, then greedy on u, u1, u2")
        if w.col[v3] != 1 - x:
            w.put(v3, 1 - x)
        if w.greedy1([u, u1, u2]):
            return
        raise ReductionFailed("greedy 1-coloring of u, u1, u2 failed")
    for a1, a2, b1, b2 in ((u1, u2, v1, v2), (u2, u1, v2, v1)):
        free = w.free2(a1)
        if free:
            w.note("outer 1-colors differ: a 2-color fits on one thread vertex, greedy 1-colors on the rest")
            w.put(a1, free[0])
            if w.greedy1([a2, u, v3]):
                return
            raise ReductionFailed("greedy 1-coloring after the 2-color failed")
    w.note("outer 1-colors differ and both v1, v2 see every 2-color: greedy 1-colors on u2, u, v2, u1, v1, v3")
    if w.greedy1([u2, u, v2, u1, v1, v3]):
        return
    raise ReductionFailed("greedy 1-coloring around u failed")


def _one_two(w: _Work, s) -> None:
    u, u1, u2, u3, v1 = s["u"], s["u1"], s["u2"], s["u3"], s["v1"]
    avoid_u = {x for x in bits(w.ball2[u]) if x != u1}
    if w.is1(v1):
        a = w.col[v1]
        b = 1 - a
        if w.col[u] != b:
            w.note("phi(v1) is a 1-color and u does not hold the other one: u1 takes it")
            w.put(u1, b)
            return
        if w.ok(u, a):
            w.note("u holds the other 1-color and can switch: swap u, then color u1")
            w.put(u, a)
            w.put(u1, b)
            return
        w.note("u is pinned on its 1-color: u takes a 2-color, u1 the other 1-color")
        w.clear(u)
        free = w.free2(u)
        if not free:
            raise ReductionFailed(f"no 2-color for u among {len(avoid_u)} nearby vertices")
        w.put(u, free[0])
        w.put(u1, b)
        return
    x = w.col[v1]
    if w.col[u] != x:
        w.note("phi(v1) is a 2-color unlike phi(u): u1 takes a 1-color")
        if not w.greedy1([u1]):
            raise ReductionFailed("u1 has no 1-color")
        return
    ones = w.free1(u)
    if ones:
        w.note("u shares v1's 2-color but can switch to a 1-color")
        w.put(u, ones[0])
    else:
        w.note("u shares v1's 2-color and sees both 1-colors: u takes another 2-color")
        w.clear(u)
        free = w.free2(u, avoid={x})
        if not free:
            raise ReductionFailed("no second 2-color for u")
        w.put(u, free[0])
    if not w.greedy1([u1]):
        raise ReductionFailed("u1 has no 1-color")


# ------------------------------------------------------------ driver


def hypothesis(g: Graph, k: int, cfg: Configuration) -> str | None:
    """The violated degree condition, or None when the recipe applies."""
    d = g.degree
    s = cfg.sites
    if cfg.kind is Kind.TwoThread:
        if min(d(s["v1"]), d(s["v2"])) > k + 1:
            return "(k+2)+ outer degrees"
    elif cfg.kind is Kind.AllTwoNeighbors:
        if d(s["u"]) > k + 1:
            return "u is a (k+2)+-vertex"
        if any(g.has_edge(a, b) for a, b in combinations(cfg.indexed("u"), 2)):
            return "two 2-neighbors of u are adjacent"
    elif cfg.kind is Kind.ThreeThread:
        if 2 > k + 1:
            return "middle vertex exceeds k+1"
    elif cfg.kind is Kind.TwoTwoNeighbors3Vertex:
        if g.has_edge(s["u1"], s["u2"]):
            if k < 2 and d(s["v3"]) > k + 1:
                return "u1u2 is an edge, k = 1 and v3 is a (k+2)+-vertex"
        elif d(s["v3"]) > k and max(d(s["v1"]), d(s["v2"]), d(s["v3"])) > k + 1:
            return "v3 is a (k+1)+-vertex and some v_i is a (k+2)+-vertex"
    elif cfg.kind is Kind.OneTwoNeighbor3Vertex:
        if d(s["u2"]) + d(s["u3"]) > k:
            return "d(u2) + d(u3) >= k+1"
    return None


def designated(cfg: Configuration) -> frozenset[int]:
    """Vertices a recipe may (re)color: the deleted set plus the proof's recolor sites."""
    s = cfg.sites
    extra = {
        Kind.PendantVertex: (),
        Kind.TwoThread: ("v1", "v2"),
        Kind.AllTwoNeighbors: (),
        Kind.ThreeThread: (),
        Kind.OnlyTwoThreads: ("u",),
        Kind.TwoTwoNeighbors3Vertex: ("v1", "v2", "v3"),
        Kind.OneTwoNeighbor3Vertex: ("u",),
    }[cfg.kind]
    return deleted_set(cfg) | {s[r] for r in extra}


def _normalize_phi(g: Graph, k: int, drop: frozenset[int], phi) -> list[int | None]:
    if isinstance(phi, Mapping):
        colors: list[int | None] = [None] * g.n
        for v, c in phi.items():
            g.check_vertex(v)
            colors[v] = c
    else:
        colors = list(phi.assignment if isinstance(phi, PackingColoring) else phi)
        if len(colors) != g.n:
            raise BadPartialColoring(f"coloring has {len(colors)} entries for {g.n} vertices")
    for v, c in enumerate(colors):
        if v in drop:
            if c is not None:
                raise BadPartialColoring(f"vertex {v} is deleted by the configuration but colored")
        elif c is None:
            raise BadPartialColoring(f"vertex {v} is left uncolored")
        elif not (isinstance(c, int) and 0 <= c < k + 2):
            raise BadPartialColoring(f"vertex {v} has class {c!r}; spec has {k + 2} classes")
    rest, old = induced_subgraph(g, [v for v in range(g.n) if v not in drop])
    if not verify(rest, spec_for(k), [colors[v] for v in old]):
        raise BadPartialColoring("phi is not a packing coloring of G minus the deleted set")
    return colors


def apply_reduction(g: Graph, k: int, cfg: Configuration, phi):
    """Extend ``phi`` across ``cfg``, or report the violated hypothesis."""
    if k < 1:
        raise ValueError("k must be positive")
    expected = _match(g, cfg.kind, _core(cfg))
    if expected is None or expected != dict(cfg.sites):
        raise SiteMismatch(f"sites {dict(cfg.sites)} do not form a {cfg.kind.value} in this graph")
    drop = deleted_set(cfg)
    colors = _normalize_phi(g, k, drop, phi)
    failed = hypothesis(g, k, cfg)
    if failed is not None:
        return HypothesisViolated(failed)
    before = list(colors)
    w = _Work(g, k, colors)
    s = cfg.sites
    if cfg.kind is Kind.PendantVertex:
        _pendant(w, s)
    elif cfg.kind is Kind.TwoThread:
        _two_thread(w, s)
    elif cfg.kind is Kind.AllTwoNeighbors:
        _all_two(w, s["u"], cfg.indexed("u"), cfg.indexed("v"))
    elif cfg.kind is Kind.ThreeThread:
        middle = Configuration(Kind.AllTwoNeighbors, _match(g, Kind.AllTwoNeighbors, (s["u2"],)))
        if hypothesis(g, k, middle) is not None:
            raise ReductionFailed("middle vertex of a 3-thread fails the all-2-neighbors hypothesis")
        w.note("middle vertex has only 2-neighbors and degree 2 <= k+1")
        _all_two(w, s["u2"], middle.indexed("u"), middle.indexed("v"))
    elif cfg.kind is Kind.OnlyTwoThreads:
        _only_two_threads(w, cfg)
    elif cfg.kind is Kind.TwoTwoNeighbors3Vertex:
        if g.has_edge(s["u1"], s["u2"]):
            _two_two_triangle(w, s)
        else:
            _two_two(w, s)
    else:
        _one_two(w, s)
    if any(c is None for c in w.col):
        raise ReductionFailed(f"recipe left vertex {w.col.index(None)} uncolored")
    result = PackingColoring(tuple(w.col))
    if not verify(g, spec_for(k), result):
        raise ReductionFailed(f"{cfg.kind.value} recipe produced an invalid coloring; trace {w.trace}")
    changed = frozenset(v for v in range(g.n) if before[v] is not None and before[v] != w.col[v])
    allowed = designated(cfg)
    if not changed <= allowed:
        raise ReductionFailed(f"recipe recolored {sorted(changed - allowed)} outside its sites")
    return Extended(result, tuple(w.trace), changed)


# ------------------------------------------------------------ instance planting


@dataclass(frozen=True)
class Planted:
    graph: Graph
    k: int
    config: Configuration
    phi: tuple[int | None, ...]
    satisfied: bool


class _Plant:
    def __init__(self, base: Graph):
        self.n = self.base = base.n
        self.edges = list(base.edges)

    def add(self) -> int:
        self.n += 1
        return self.n - 1

    def edge(self, a, b):
        self.edges.append((a, b))

    def degree(self, v) -> int:
        return sum(1 for e in self.edges if v in e)

    def pad(self, v: int, target: int) -> None:
        """Hang fresh leaves on ``v`` until it has degree ``target``."""
        while self.degree(v) < target:
            self.edge(v, self.add())

    def low(self, rng: random.Random, limit: int) -> int:
        """A base vertex of degree <= limit, or a fresh one hung on the base."""
        pool = [v for v in range(self.base) if self.degree(v) <= limit]
        if pool:
            return rng.choice(pool)
        v = self.add()
        if limit >= 1:
            self.edge(v, rng.randrange(self.base))
        return v

    def graph(self) -> Graph:
        return from_edge_list(self.n, self.edges)


def _base(rng: random.Random, n: int) -> Graph:
    """Sparse connected base: a random tree plus a few chords."""
    edges = [(v, rng.randrange(v)) for v in range(1, n)]
    for _ in range(rng.randint(0, max(1, n // 8))):
        a, b = rng.sample(range(n), 2)
        edges.append((a, b))
    return from_edge_list(n, edges)


def _plant(kind: Kind, k: int, rng: random.Random, satisfy: bool):
    p = _Plant(_base(rng, rng.randint(6, 40)))
    if kind is Kind.PendantVertex:
        u = p.add()
        p.edge(u, rng.randrange(u))
        return p, (u,)
    if kind is Kind.TwoThread:
        share = rng.random() < 0.25
        if satisfy:
            v1 = p.low(rng, k - 1 if share else k)
            v2 = v1 if share else rng.randrange(p.n)
        else:
            v1 = rng.randrange(p.n)
            v2 = v1 if share else rng.choice([v for v in range(p.n) if v != v1])
        u1, u2 = p.add(), p.add()
        p.edge(v1, u1), p.edge(u1, u2), p.edge(u2, v2)
        if not satisfy:
            p.pad(v1, k + 2)
            p.pad(v2, k + 2)
        return p, (u1, u2)
    if kind in (Kind.AllTwoNeighbors, Kind.OnlyTwoThreads):
        d = rng.randint(1, k + 1) if satisfy or kind is Kind.OnlyTwoThreads else k + 2
        u = p.add()
        anchors = [rng.randrange(u) for _ in range(d)]
        for a in anchors:
            x = p.add()
            p.edge(u, x)
            if kind is Kind.OnlyTwoThreads:
                y = p.add()
                p.edge(x, y)
                p.edge(y, a)
            else:
                p.edge(x, a)
        return p, (u,)
    if kind is Kind.ThreeThread:
        v1 = rng.randrange(p.n)
        v3 = v1 if rng.random() < 0.2 else rng.randrange(p.n)
        a, b, c = p.add(), p.add(), p.add()
        p.edge(v1, a), p.edge(a, b), p.edge(b, c), p.edge(c, v3)
        return p, (a, b, c)
    if kind is Kind.TwoTwoNeighbors3Vertex:
        tri = rng.random() < 0.2
        u, u1, u2 = p.add(), p.add(), p.add()
        p.edge(u, u1), p.edge(u, u2)
        if tri:
            p.edge(u1, u2)
            v3 = p.low(rng, k) if satisfy else rng.randrange(u)
            p.edge(u, v3)
            if not satisfy:
                p.pad(v3, k + 2)
            return p, (u, u1, u2)
        small_v3 = rng.random() < 0.5
        if satisfy and small_v3:
            v3 = p.low(rng, k - 1)
            v1, v2 = rng.randrange(u), rng.randrange(u)
        elif satisfy:
            v3 = p.low(rng, k)
            v1 = p.low(rng, k)
            v2 = v1 if rng.random() < 0.2 and p.degree(v1) <= k - 1 else p.low(rng, k)
        else:
            v3, v1, v2 = rng.randrange(u), rng.randrange(u), rng.randrange(u)
        p.edge(u, v3), p.edge(u1, v1), p.edge(u2, v2)
        if not satisfy:
            p.pad(v3, k + 1)
            p.pad(rng.choice([v1, v2, v3]), k + 2)
        return p, (u, u1, u2)
    if kind is Kind.OneTwoNeighbor3Vertex:
        u, u1 = p.add(), p.add()
        v1 = rng.randrange(u)
        p.edge(u, u1), p.edge(u1, v1)
        if satisfy:
            if k < 2:
                return None
            d2 = rng.randint(1, k - 1)
            d3 = rng.randint(1, k - d2)
            sides = []
            for target in (d2, d3):
                x = p.add()
                p.edge(u, x)
                for _ in range(target - 1):
                    p.edge(x, p.add())
                sides.append(x)
        else:
            for _ in range(2):
                x = rng.randrange(u)
                p.edge(u, x)
            p.pad(x, k + 1)
        return p, (u, u1)
    raise ValueError(kind)


def plant_instance(kind: Kind | str, k: int, rng: random.Random, satisfy: bool = True,
                   tries: int = 200) -> Planted | None:
    """A random graph containing ``kind`` plus a coloring of G minus its deleted set.

    ``satisfy`` chooses whether the degree hypothesis holds.  Site colors
    are sometimes forced at random to reach the deeper proof cases.  Returns
    None when no instance exists (for example the 3-vertex one-2-neighbor
    configuration at k = 1, whose hypothesis d(u2)+d(u3) <= 1 is impossible).
    """
    kind = Kind(kind)
    spec = spec_for(k)
    for _ in range(tries):
        made = _plant(kind, k, rng, satisfy)
        if made is None:
            return None
        p, core = made
        g = p.graph()
        sites = _match(g, kind, core)
        if sites is None:
            continue
        cfg = Configuration(kind, sites)
        if (hypothesis(g, k, cfg) is None) != satisfy:
            continue
        drop = deleted_set(cfg)
        rest, old = induced_subgraph(g, [v for v in range(g.n) if v not in drop])
        pos = {v: i for i, v in enumerate(old)}
        perm = list(range(rest.n))
        rng.shuffle(perm)
        shuffled = relabel(rest, perm)
        forced = {}
        for v in set(sites.values()) - drop:
            if rng.random() < 0.5:
                forced[perm[pos[v]]] = rng.randrange(k + 2)
        try:
            found = solve(shuffled, spec, forced)
        except InconsistentForcing:
            found = None
        if not found:
            found = solve(shuffled, spec)
            if not found:
                continue
        swap1 = rng.random() < 0.5
        twos = list(range(2, k + 2))
        rng.shuffle(twos)

        def remap(c):
            if c < 2:
                return 1 - c if swap1 else c
            return twos[c - 2]

        phi: list[int | None] = [None] * g.n
        for v in old:
            phi[v] = remap(found[perm[pos[v]]])
        return Planted(g, k, cfg, tuple(phi), satisfy)
    raise RuntimeError(f"could not plant {kind.value} for k={k}")
