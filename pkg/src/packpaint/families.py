"""Deterministic generators for the counterexample families and named graphs.

Every generator returns a :class:`LabeledGraph` whose ``labels`` name the
distinguished vertices (``"u"``, ``"w'"``, ``"apex[2]"`` ...) and whose
``groups`` name vertex sets such as the copies a family is glued from.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .errors import GadgetUnavailable, InvalidCycleLength
from .graph import Graph, from_edge_list, is_connected
from .metrics import check_mad_threshold


@dataclass(frozen=True)
class LabeledGraph:
    graph: Graph
    labels: dict[str, int] = field(default_factory=dict)
    groups: dict[str, tuple[int, ...]] = field(default_factory=dict)

    def __post_init__(self):
        for role, v in self.labels.items():
            if not 0 <= v < self.graph.n:
                raise ValueError(f"label {role!r} points at missing vertex {v}")

    def __getitem__(self, role: str) -> int:
        return self.labels[role]


class _Builder:
    def __init__(self):
        self.n = 0
        self.edges: list[tuple[int, int]] = []
        self.labels: dict[str, int] = {}
        self.groups: dict[str, tuple[int, ...]] = {}

    def add(self, label: str | None = None) -> int:
        v = self.n
        self.n += 1
        if label is not None:
            self.labels[label] = v
        return v

    def edge(self, a: int, b: int) -> None:
        self.edges.append((a, b))

    def path(self, *vs: int) -> None:
        for a, b in zip(vs, vs[1:]):
            self.edge(a, b)

    def embed(self, part: LabeledGraph, glue: dict[str, int] | None = None) -> dict[int, int]:
        """Copy ``part`` in, identifying its labeled roles in ``glue``."""
        glue = glue or {}
        fixed = {part.labels[role]: v for role, v in glue.items()}
        where = {}
        for v in range(part.graph.n):
            where[v] = fixed[v] if v in fixed else self.add()
        for a, b in part.graph.edges:
            self.edge(where[a], where[b])
        return where

    def build(self) -> LabeledGraph:
        return LabeledGraph(from_edge_list(self.n, self.edges), dict(self.labels), dict(self.groups))


# ---------------------------------------------------------------- named graphs


def complete(n: int) -> LabeledGraph:
    return LabeledGraph(from_edge_list(n, [(a, b) for a in range(n) for b in range(a + 1, n)]))


def cycle(n: int) -> LabeledGraph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return LabeledGraph(from_edge_list(n, [(i, (i + 1) % n) for i in range(n)]))


def path(n: int) -> LabeledGraph:
    return LabeledGraph(from_edge_list(n, [(i, i + 1) for i in range(n - 1)]))


def star(leaves: int) -> LabeledGraph:
    return LabeledGraph(from_edge_list(leaves + 1, [(0, i) for i in range(1, leaves + 1)]), {"center": 0})


def petersen() -> LabeledGraph:
    edges = []
    for i in range(5):
        edges += [(i, (i + 1) % 5), (i, i + 5), (5 + i, 5 + (i + 2) % 5)]
    labels = {f"outer[{i}]": i for i in range(5)} | {f"inner[{i}]": i + 5 for i in range(5)}
    return LabeledGraph(from_edge_list(10, edges), labels)


HEAWOOD_I = ("v3", "v6", "v11", "v14")
# greedy coloring order for Heawood^2 - I; each vertex has <= 5 earlier neighbors
HEAWOOD_ORDER = ("v4", "v5", "v7", "v8", "v9", "v10", "v12", "v13", "v1", "v2")


def heawood() -> LabeledGraph:
    """Heawood graph: Hamiltonian cycle v1..v14 plus chords v_i v_{i+5}, i odd.

    Vertex ``v_i`` is ``i - 1``.
    """
    edges = [(i, (i + 1) % 14) for i in range(14)]
    edges += [(i, (i + 5) % 14) for i in range(0, 14, 2)]
    return LabeledGraph(from_edge_list(14, edges), {f"v{i + 1}": i for i in range(14)})


def named(name: str, n: int | None = None) -> LabeledGraph:
    makers = {"petersen": petersen, "heawood": heawood}
    if name in makers:
        return makers[name]()
    sized = {"complete": complete, "cycle": cycle, "path": path, "star": star}
    if name not in sized:
        raise ValueError(f"unknown named graph {name!r}")
    if n is None or n < 0 or n > 10_000:
        raise ValueError(f"{name} needs a size parameter in 0..10000")
    return sized[name](n)


# ------------------------------------------------------------- F(j, k) family


def family_F0(j: int, k: int) -> LabeledGraph:
    """Join of an apex with ``(k+1)K_j`` plus a pendant vertex ``u``."""
    b = _Builder()
    apex = b.add("apex")
    u = b.add("u")
    b.edge(apex, u)
    for c in range(k + 1):
        clique = [b.add() for _ in range(j)]
        b.groups[f"K[{c}]"] = tuple(clique)
        for i, x in enumerate(clique):
            b.edge(apex, x)
            for y in clique[i + 1:]:
                b.edge(x, y)
    return b.build()


def family_F(j: int, k: int) -> LabeledGraph:
    """k+1 copies of F0(u; j, k) sharing their pendant vertex u."""
    if j < 1 or k < 1:
        raise ValueError("j and k must be positive")
    b = _Builder()
    u = b.add("u")
    part = family_F0(j, k)
    for c in range(k + 1):
        where = b.embed(part, {"u": u})
        b.labels[f"apex[{c}]"] = where[part["apex"]]
        b.groups[f"F0[{c}]"] = tuple(sorted(set(where.values())))
    return b.build()


# ------------------------------------------------------- girth-6 family F1..F4


def family_F1(k: int) -> LabeledGraph:
    """w and w' joined by 2k+1 internally disjoint paths of length 3."""
    if k < 1:
        raise ValueError("k must be positive")
    b = _Builder()
    w, w2 = b.add("w"), b.add("w'")
    for i in range(2 * k + 1):
        a, c = b.add(f"a[{i}]"), b.add(f"b[{i}]")
        b.path(w, a, c, w2)
    return b.build()


def family_F2(k: int) -> LabeledGraph:
    b = _Builder()
    v, u, v2 = b.add("v"), b.add("u"), b.add("v'")
    b.path(v, u, v2)
    part = family_F1(k)
    for i in range(2 * k + 1):
        where = b.embed(part)
        b.labels[f"w[{i}]"] = where[part["w"]]
        b.labels[f"w'[{i}]"] = where[part["w'"]]
        b.edge(v, where[part["w"]])
        b.edge(v2, where[part["w'"]])
    return b.build()


def family_F3(k: int) -> LabeledGraph:
    b = _Builder()
    u = b.add("u")
    part = family_F2(k)
    for c in range(k + 1):
        where = b.embed(part, {"u": u})
        b.labels[f"v[{c}]"] = where[part["v"]]
        b.labels[f"v'[{c}]"] = where[part["v'"]]
    return b.build()


def family_F4(k: int) -> LabeledGraph:
    b = _Builder()
    part = family_F3(k)
    where = b.embed(part)
    u0 = where[part["u"]]
    b.labels["u0"] = u0
    for i in range(1, k + 1):
        where = b.embed(part)
        b.labels[f"u[{i}]"] = where[part["u"]]
        b.edge(u0, where[part["u"]])
    return b.build()


# ------------------------------------------------------------ girth-7 family


def gadget_H11() -> LabeledGraph:
    """The 17-vertex gadget H^1_1(x, y).

    Two mirror-image sides (top/bottom).  Each side has an outer chain
    x-o0-o1-o2-o3-y and an inner chain o0-i0-i1-i2-o3; the middle inner
    vertices ``v1`` (top) and ``v2`` (bottom) are both adjacent to the
    center ``c``.
    """
    b = _Builder()
    c = b.add("c")
    x, y = b.add("x"), b.add("y")
    for side, mid in (("top", "v1"), ("bottom", "v2")):
        outer = [b.add(f"{side}.o{t}") for t in range(4)]
        inner = [b.add(f"{side}.i{t}") for t in range(3)]
        b.labels[mid] = inner[1]
        b.path(x, *outer, y)
        b.path(outer[0], *inner, outer[3])
        b.edge(c, inner[1])
    return b.build()


def _check_cycle_len(n: int) -> None:
    if n < 7 or n % 2 == 0:
        raise InvalidCycleLength(f"cycle length must be odd and >= 7, got {n}")


def family_H21(cycle_len: int) -> LabeledGraph:
    """Odd cycle C plus a vertex z joined to each C-vertex by a copy of H^1_1."""
    _check_cycle_len(cycle_len)
    b = _Builder()
    z = b.add("z")
    ring = [b.add(f"C[{i}]") for i in range(cycle_len)]
    for i in range(cycle_len):
        b.edge(ring[i], ring[(i + 1) % cycle_len])
    gadget = gadget_H11()
    for i, v in enumerate(ring):
        where = b.embed(gadget, {"x": z, "y": v})
        b.groups[f"H11[{i}]"] = tuple(sorted(set(where.values())))
    return b.build()


def family_H1(cycle_len: int, inner_cycle_len: int | None = None) -> LabeledGraph:
    """Odd cycle C' with a copy of H^2_1(C, v) hung at every vertex v."""
    _check_cycle_len(cycle_len)
    inner = cycle_len if inner_cycle_len is None else inner_cycle_len
    part = family_H21(inner)
    b = _Builder()
    ring = [b.add(f"C'[{i}]") for i in range(cycle_len)]
    for i in range(cycle_len):
        b.edge(ring[i], ring[(i + 1) % cycle_len])
    for i, v in enumerate(ring):
        where = b.embed(part, {"z": v})
        b.groups[f"H21[{i}]"] = tuple(sorted(set(where.values())))
    return b.build()


# ------------------------------------------------------- Voigt-style T family

T1_ASSET = "t1_gadget.json"
PAIRS = [(a, b) for a in (1, 2, 3, 4) for b in (5, 6, 7, 8)]


@dataclass(frozen=True)
class T1Gadget:
    """T1(u, u') plus its 1-color list template.

    Template entries are literal colors or the parameters ``"i"``/``"j"``,
    which a copy instantiates with the pair (i, j) it is bad for.
    """

    graph: LabeledGraph
    template: dict[int, tuple]
    source: str

    def lists_for(self, i: int, j: int) -> dict[int, frozenset]:
        sub = {"i": i, "j": j}
        return {v: frozenset(sub.get(c, c) for c in entries) for v, entries in self.template.items()}


def validate_t1(gadget: T1Gadget) -> None:
    g = gadget.graph.graph
    for role in ("u", "u'"):
        if role not in gadget.graph.labels:
            raise GadgetUnavailable(f"T1 asset lacks label {role!r}")
    u, u2 = gadget.graph["u"], gadget.graph["u'"]
    others = set(range(g.n)) - {u, u2}
    if set(gadget.template) != others:
        raise GadgetUnavailable("T1 asset must give a list template to every vertex except u, u'")
    for z in others:
        if not (g.has_edge(z, u) or g.has_edge(z, u2)):
            raise GadgetUnavailable(f"T1 vertex {z} is adjacent to neither u nor u'")
    for i, j in PAIRS:
        for v, lst in gadget.lists_for(i, j).items():
            if len(lst) != 4:
                raise GadgetUnavailable(f"T1 list of vertex {v} has {len(lst)} colors for (i,j)=({i},{j})")


def load_t1_gadget(path: str | Path | None = None) -> T1Gadget:
    """Read and validate the T1 asset (packaged copy unless ``path`` given)."""
    try:
        if path is None:
            text = resources.files("packpaint").joinpath("assets").joinpath(T1_ASSET).read_text()
        else:
            text = Path(path).read_text()
    except (FileNotFoundError, OSError) as exc:
        raise GadgetUnavailable(f"T1 gadget asset not found: {exc}") from exc
    data = json.loads(text)
    g = from_edge_list(data["n"], data["edges"])
    template = {int(v): tuple(entries) for v, entries in data["lists"].items()}
    gadget = T1Gadget(LabeledGraph(g, dict(data["labels"])), template, data.get("source", "unknown"))
    validate_t1(gadget)
    return gadget


def family_T2(k: int, gadget: T1Gadget | None = None) -> LabeledGraph:
    """16(2k+1) copies of T1 with all u identified and all u' identified."""
    if k < 1:
        raise ValueError("k must be positive")
    gadget = gadget or load_t1_gadget()
    b = _Builder()
    u, u2 = b.add("u"), b.add("u'")
    for c in range(16 * (2 * k + 1)):
        where = b.embed(gadget.graph, {"u": u, "u'": u2})
        b.groups[f"T1[{c}]"] = tuple(where[v] for v in range(gadget.graph.graph.n))
    return b.build()


def family_T3(k: int, gadget: T1Gadget | None = None) -> LabeledGraph:
    """2k+1 copies of T2 plus u0 ~ every copy of u and u0' ~ every copy of u'."""
    gadget = gadget or load_t1_gadget()
    part = family_T2(k, gadget)
    b = _Builder()
    u0, u02 = b.add("u0"), b.add("u0'")
    for c in range(2 * k + 1):
        where = b.embed(part)
        b.labels[f"u[{c}]"] = where[part["u"]]
        b.labels[f"u'[{c}]"] = where[part["u'"]]
        b.edge(u0, where[part["u"]])
        b.edge(u02, where[part["u'"]])
        b.groups[f"T2[{c}]"] = tuple(where[v] for v in range(part.graph.n))
        for name, members in part.groups.items():
            b.groups[f"T2[{c}].{name}"] = tuple(where[v] for v in members)
    return b.build()


# ------------------------------------------------------------ random graphs


def random_gnp(n: int, p: float, rng: random.Random) -> Graph:
    return from_edge_list(n, [(a, b) for a in range(n) for b in range(a + 1, n) if rng.random() < p])


def random_gnm(n: int, m: int, rng: random.Random) -> Graph:
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    return from_edge_list(n, rng.sample(pairs, min(m, len(pairs))))


def random_tree(n: int, rng: random.Random) -> Graph:
    return from_edge_list(n, [(v, rng.randrange(v)) for v in range(1, n)])


def random_sparse(n: int, bound, rng: random.Random, attempts: int | None = None) -> Graph:
    """Random tree grown by random edges while mad stays below ``bound``."""
    edges = {(v, rng.randrange(v)) for v in range(1, n)}
    for _ in range(4 * n if attempts is None else attempts):
        if n < 2:
            break
        a, b = rng.sample(range(n), 2)
        e = (max(a, b), min(a, b))
        if e not in edges and check_mad_threshold(from_edge_list(n, edges | {e}), bound):
            edges.add(e)
    return from_edge_list(n, edges)


def random_cubic(n: int, rng: random.Random, connected: bool = True, tries: int = 10_000) -> Graph:
    """Uniform-ish cubic graph from the pairing model with rejection."""
    if n < 4 or n % 2:
        raise ValueError("cubic graphs need an even number >= 4 of vertices")
    for _ in range(tries):
        points = [v for v in range(n) for _ in range(3)]
        rng.shuffle(points)
        pairs = list(zip(points[::2], points[1::2]))
        keys = {(min(a, b), max(a, b)) for a, b in pairs}
        if any(a == b for a, b in pairs) or len(keys) != len(pairs):
            continue
        g = from_edge_list(n, pairs)
        if not connected or is_connected(g):
            return g
    raise RuntimeError("pairing model did not produce a simple cubic graph")
