"""Packing L-colorings: list assignments, exact list search, bounded
choosability, the Example-style adversarial assignment on T3, and the
constructive pipelines for subcubic graphs.

Every color is its own packing class.  A color drawn from a universe of
radius ``r`` may be reused only on vertices pairwise at distance ``> r``;
different colors never constrain each other.
"""

from __future__ import annotations

import enum
import random
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from ._caps import scale_cap
from .errors import PreconditionViolated, ScaleExceeded, UnknownColor
from .families import HEAWOOD_I, HEAWOOD_ORDER, PAIRS, LabeledGraph, T1Gadget, family_T3, heawood, load_t1_gadget
from .graph import (
    Graph,
    bits,
    connected_components,
    girth,
    induced_subgraph,
    is_complete,
    is_connected,
    is_i_independent,
    is_regular,
    max_independent_set,
    square,
    to_mask,
)
from .solver import Unsatisfiable, _Search

CHOOSABLE_CAP = 8
CHOOSABLE_BUDGET = 200_000
THM42_CAP = 20


def _color_key(c):
    return (isinstance(c, str), c)


@dataclass(frozen=True)
class ColorClass:
    radius: int
    colors: frozenset

    def __post_init__(self):
        object.__setattr__(self, "colors", frozenset(self.colors))
        if self.radius < 1:
            raise ValueError(f"class radius must be positive, got {self.radius}")


@dataclass(frozen=True)
class ListAssignment:
    """Disjoint color universes with radii, plus one list per vertex."""

    classes: tuple[ColorClass, ...]
    lists: tuple[frozenset, ...]
    _radius: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "classes", tuple(self.classes))
        object.__setattr__(self, "lists", tuple(frozenset(x) for x in self.lists))
        radius = {}
        for cls in self.classes:
            for c in cls.colors:
                if c in radius:
                    raise ValueError(f"color {c!r} appears in two universes")
                radius[c] = cls.radius
        object.__setattr__(self, "_radius", radius)
        for v, lst in enumerate(self.lists):
            for c in lst:
                if c not in radius:
                    raise UnknownColor(f"vertex {v} lists color {c!r}, which is in no universe")

    @property
    def n(self) -> int:
        return len(self.lists)

    def radius_of(self, color) -> int:
        try:
            return self._radius[color]
        except KeyError:
            raise UnknownColor(f"color {color!r} is in no universe") from None

    def colors(self) -> list:
        return sorted(self._radius, key=_color_key)

    def with_radius(self, v: int, radius: int) -> frozenset:
        """Colors of radius ``radius`` available at ``v``."""
        return frozenset(c for c in self.lists[v] if self._radius[c] == radius)

    @classmethod
    def identical(cls, n: int, sizes: Sequence[tuple[int, int]]) -> "ListAssignment":
        """Every vertex gets the whole universe; ``sizes`` lists (radius, t) pairs.

        Colors are consecutive integers from 0, class by class.
        """
        classes, start = [], 0
        for radius, t in sizes:
            classes.append(ColorClass(radius, frozenset(range(start, start + t))))
            start += t
        everything = frozenset(range(start))
        return cls(tuple(classes), (everything,) * n)


@dataclass(frozen=True)
class ListPackingColoring:
    assignment: tuple
    nodes: int = field(default=0, compare=False)

    def __getitem__(self, v):
        return self.assignment[v]

    def __len__(self):
        return len(self.assignment)

    def __bool__(self):
        # a found coloring is truthy even on the empty graph
        return True


def verify_list(g: Graph, lists: ListAssignment, coloring) -> bool:
    assignment = list(coloring.assignment if isinstance(coloring, ListPackingColoring) else coloring)
    if len(assignment) != g.n or lists.n != g.n:
        raise ValueError(f"coloring covers {len(assignment)} vertices, lists {lists.n}, graph {g.n}")
    members: dict = {}
    for v, c in enumerate(assignment):
        lists.radius_of(c)
        if c not in lists.lists[v]:
            return False
        members.setdefault(c, []).append(v)
    return all(is_i_independent(g, vs, lists.radius_of(c)) for c, vs in members.items())


def _search_for(g: Graph, lists: ListAssignment, forced: Mapping[int, object] | None = None):
    colors = lists.colors()
    index = {c: i for i, c in enumerate(colors)}
    radii = [lists.radius_of(c) for c in colors]
    domains = [sum(1 << index[c] for c in lst) for lst in lists.lists]
    # colors are interchangeable only with equal radius and equal availability
    pattern: dict[tuple, list[int]] = {}
    for i, c in enumerate(colors):
        holders = frozenset(v for v in range(g.n) if domains[v] >> i & 1)
        pattern.setdefault((radii[i], holders), []).append(i)
    forced_idx = {}
    for v, c in (forced or {}).items():
        lists.radius_of(c)
        forced_idx[v] = index[c]
    search = _Search(g, radii, forced_idx, True, list(pattern.values()), domains)
    return search, colors


def solve_list(g: Graph, lists: ListAssignment, forced: Mapping[int, object] | None = None):
    """A packing L-coloring or :class:`Unsatisfiable`.

    ``forced`` pins vertices to colors; a forced color need not be on the
    vertex's list, which lets callers pose "what if" questions.
    """
    if lists.n != g.n:
        raise ValueError(f"assignment has {lists.n} lists for {g.n} vertices")
    forced = dict(forced or {})
    if forced:
        widened = list(lists.lists)
        for v, c in forced.items():
            g.check_vertex(v)
            widened[v] = widened[v] | {c}
        lists = ListAssignment(lists.classes, tuple(widened))
    search, colors = _search_for(g, lists, forced)
    if search.run():
        return ListPackingColoring(tuple(colors[i] for i in search.color), search.nodes)
    return Unsatisfiable(search.nodes)


# ------------------------------------------------------------ choosability


class _Inconclusive(enum.Enum):
    INCONCLUSIVE = "inconclusive"

    def __repr__(self):
        return "INCONCLUSIVE"


INCONCLUSIVE = _Inconclusive.INCONCLUSIVE


@dataclass(frozen=True)
class Choosability:
    """``verdict`` is True, False or INCONCLUSIVE."""

    verdict: object
    counterexample: ListAssignment | None
    checked: int


def _canonical_choices(t: int, used: int, palette: int):
    """Lists of size ``t`` given ``used`` colors seen so far.

    New colors are always the next unseen ones, so each assignment is
    produced once per relabeling orbit representative.
    """
    for a in range(min(t, used), -1, -1):
        fresh = t - a
        if used + fresh > palette:
            continue
        for old in combinations(range(used), a):
            yield frozenset(old) | frozenset(range(used, used + fresh)), used + fresh


def choosable_bounded(
    g: Graph,
    t1: int,
    t2: int,
    palette1: int | None = None,
    palette2: int | None = None,
    cap: int | None = None,
    budget: int | None = None,
) -> Choosability:
    """Check every list assignment with exact sizes ``t1``/``t2``, up to relabeling.

    1-colors are ``0..palette1-1``; 2-colors follow them.  Palettes default
    to ``t_i * n``, the size past which extra colors cannot create new
    assignment patterns; smaller palettes give INCONCLUSIVE instead of True.
    """
    limit = scale_cap(CHOOSABLE_CAP) if cap is None else cap
    if g.n > limit:
        raise ScaleExceeded(f"choosable_bounded capped at {limit} vertices, got {g.n}")
    budget = CHOOSABLE_BUDGET if budget is None else budget
    p1 = t1 * g.n if palette1 is None else palette1
    p2 = t2 * g.n if palette2 is None else palette2
    if t1 > p1 or t2 > p2:
        raise ValueError("a palette is smaller than the list size")
    classes = (ColorClass(1, frozenset(range(p1))), ColorClass(2, frozenset(range(p1, p1 + p2))))
    checked = 0
    current: list[frozenset] = []

    def leaf():
        nonlocal checked
        checked += 1
        if checked > budget:
            raise ScaleExceeded(f"more than {budget} canonical assignments")
        la = ListAssignment(classes, tuple(current))
        return None if solve_list(g, la) else la

    def rec(v, used1, used2):
        if v == g.n:
            return leaf()
        for ones, u1 in _canonical_choices(t1, used1, p1):
            for twos, u2 in _canonical_choices(t2, used2, p2):
                current.append(ones | frozenset(p1 + c for c in twos))
                bad = rec(v + 1, u1, u2)
                current.pop()
                if bad is not None:
                    return bad
        return None

    bad = rec(0, 0, 0)
    if bad is not None:
        return Choosability(False, bad, checked)
    if p1 < t1 * g.n or p2 < t2 * g.n:
        return Choosability(INCONCLUSIVE, None, checked)
    return Choosability(True, None, checked)


def random_lists(g: Graph, t1: int, t2: int, rng: random.Random,
                 palette1: int | None = None, palette2: int | None = None) -> ListAssignment:
    """Random lists of exact sizes; 1-colors are 0..p1-1, 2-colors 100.. onward."""
    p1 = palette1 if palette1 is not None else t1 + 2
    p2 = palette2 if palette2 is not None else t2 + 3
    ones, twos = list(range(p1)), list(range(100, 100 + p2))
    lists = [frozenset(rng.sample(ones, t1)) | frozenset(rng.sample(twos, t2)) for _ in range(g.n)]
    return ListAssignment((ColorClass(1, frozenset(ones)), ColorClass(2, frozenset(twos))), tuple(lists))


# ------------------------------------------------------ adversarial lists

ADV_TWO_BASE = 100


def bad_pair(k: int, copy: int) -> tuple[int, int]:
    """The (i, j) that T1 copy number ``copy`` of a T2 copy is bad for."""
    return PAIRS[copy // (2 * k + 1)]


def adversarial_T3_assignment(k: int, gadget: T1Gadget | None = None) -> tuple[LabeledGraph, ListAssignment]:
    """T3(k) with 1-lists of size 4 and one shared 2-list of size k.

    1-colors are the integers 1..10 (whatever the gadget template uses);
    2-colors are ``101..100+k``.  In every T2 copy, each pair in
    {1..4} x {5..8} is bad for exactly 2k+1 of its T1 copies.
    """
    gadget = gadget or load_t1_gadget()
    lg = family_T3(k, gadget)
    n = lg.graph.n
    ones: list[frozenset] = [frozenset()] * n
    ones[lg["u0"]] = ones[lg["u0'"]] = frozenset({1, 2, 3, 4})
    for c in range(2 * k + 1):
        ones[lg[f"u[{c}]"]] = frozenset({1, 2, 3, 4})
        ones[lg[f"u'[{c}]"]] = frozenset({5, 6, 7, 8})
        for d in range(16 * (2 * k + 1)):
            copy = lg.groups[f"T2[{c}].T1[{d}]"]
            for local, lst in gadget.lists_for(*bad_pair(k, d)).items():
                ones[copy[local]] = lst
    twos = frozenset(range(ADV_TWO_BASE + 1, ADV_TWO_BASE + k + 1))
    universe1 = frozenset().union(*ones)
    assignment = ListAssignment((ColorClass(1, universe1), ColorClass(2, twos)), tuple(x | twos for x in ones))
    return lg, assignment


def copy_is_bad(g: Graph, lists: ListAssignment, copy: Sequence[int], u: int, u2: int, alpha, beta) -> bool:
    """With u=alpha and u'=beta, must this T1 copy use a 2-color off {u, u'}?"""
    sub, old = induced_subgraph(g, copy)
    pos = {v: i for i, v in enumerate(old)}
    restricted = []
    for v in old:
        restricted.append(frozenset(c for c in lists.lists[v] if lists.radius_of(c) == 1))
    la = ListAssignment(lists.classes, tuple(restricted))
    return not solve_list(sub, la, {pos[u]: alpha, pos[u2]: beta})


def bad_copy_census(lg: LabeledGraph, lists: ListAssignment, k: int) -> dict[int, Counter]:
    """Per T2 copy, count how many T1 copies are bad for each (alpha, beta)."""
    census = {}
    for c in range(2 * k + 1):
        u, u2 = lg[f"u[{c}]"], lg[f"u'[{c}]"]
        tally: Counter = Counter()
        for d in range(16 * (2 * k + 1)):
            copy = lg.groups[f"T2[{c}].T1[{d}]"]
            for alpha, beta in PAIRS:
                if copy_is_bad(lg.graph, lists, copy, u, u2, alpha, beta):
                    tally[(alpha, beta)] += 1
        census[c] = tally
    return census


# ---------------------------------------------------------------- pipelines


def _require_connected_cubic(g: Graph) -> None:
    if not is_regular(g, 3):
        bad = next(v for v in range(g.n) if g.degree(v) != 3) if g.n else None
        raise PreconditionViolated(f"input must be cubic (vertex {bad} has degree {g.degree(bad) if g.n else 0})")
    if not is_connected(g):
        raise PreconditionViolated("input must be connected")


def _split(lists: ListAssignment, v: int) -> tuple[list, list]:
    ones = sorted(lists.with_radius(v, 1), key=_color_key)
    twos = sorted(lists.with_radius(v, 2), key=_color_key)
    return ones, twos


def _require_sizes(lists: ListAssignment, g: Graph, t1: int, t2: int) -> None:
    if lists.n != g.n:
        raise PreconditionViolated(f"assignment has {lists.n} lists for {g.n} vertices")
    for v in range(g.n):
        ones, twos = _split(lists, v)
        if len(ones) < t1 or len(twos) < t2:
            raise PreconditionViolated(
                f"vertex {v} has {len(ones)} 1-colors and {len(twos)} 2-colors; need {t1} and {t2}")


def _color_square_rest(g: Graph, lists: ListAssignment, inside: Iterable[int], colors: dict, max_deg: int,
                       clique: int) -> tuple:
    """Color G^2 - I from the 2-lists after asserting its degree and clique facts."""
    inside = set(inside)
    h, old = induced_subgraph(square(g), [v for v in range(g.n) if v not in inside])
    if h.max_degree() > max_deg:
        v = max(range(h.n), key=h.degree)
        raise PreconditionViolated(f"G^2 - I has a vertex ({old[v]}) of degree {h.degree(v)} > {max_deg}")
    for comp in connected_components(h):
        if len(comp) == clique and is_complete(induced_subgraph(h, comp)[0]):
            raise PreconditionViolated(f"G^2 - I has a K{clique} component {[old[v] for v in comp]}")
    twos = [sorted(lists.with_radius(v, 2), key=_color_key) for v in old]
    universe = frozenset().union(*twos) if twos else frozenset()
    # inside H the 2-colors only need to be proper: H already encodes distance 2
    sub = ListAssignment((ColorClass(1, universe),), tuple(frozenset(t) for t in twos))
    found = solve_list(h, sub)
    if not found:
        raise PreconditionViolated("list coloring of G^2 - I failed although its degree facts hold")
    for i, v in enumerate(old):
        colors[v] = found[i]
    result = ListPackingColoring(tuple(colors[v] for v in range(g.n)))
    if not verify_list(g, lists, result):
        raise AssertionError("pipeline produced an invalid coloring")
    return result


def is_heawood_like(g: Graph) -> bool:
    """Cubic, 14 vertices, girth 6: the unique (3,6)-cage, i.e. Heawood."""
    return g.n == 14 and is_regular(g, 3) and girth(g) == 6


def thm41_pipeline(g: Graph, lists: ListAssignment) -> ListPackingColoring:
    """Color a connected cubic graph from 1-lists of size 1 and 2-lists of size 6."""
    _require_connected_cubic(g)
    if is_heawood_like(g):
        raise PreconditionViolated("the Heawood graph goes through heawood_pipeline")
    _require_sizes(lists, g, 1, 6)
    inside = max_independent_set(g)
    colors = {v: _split(lists, v)[0][0] for v in inside}
    return _color_square_rest(g, lists, inside, colors, max_deg=6, clique=7)


def heawood_pipeline(lists: ListAssignment) -> ListPackingColoring:
    """Heawood graph: color I from the 1-lists, then greedily along the fixed order."""
    lg = heawood()
    g = lg.graph
    _require_sizes(lists, g, 1, 6)
    inside = [lg[r] for r in HEAWOOD_I]
    colors = {v: _split(lists, v)[0][0] for v in inside}
    sq = square(g)
    for role in HEAWOOD_ORDER:
        v = lg[role]
        taken = {colors[w] for w in sq.adj[v] if w in colors and w not in inside}
        free = [c for c in _split(lists, v)[1] if c not in taken]
        if not free:
            raise AssertionError(f"greedy step at {role} found no free 2-color")
        colors[v] = free[0]
    result = ListPackingColoring(tuple(colors[v] for v in range(g.n)))
    if not verify_list(g, lists, result):
        raise AssertionError("Heawood pipeline produced an invalid coloring")
    return result


def _one_color(g: Graph, keep: int, ones: list[list]) -> dict | None:
    """Proper coloring of g[keep] from the given 1-lists, or None."""
    order = list(bits(keep))
    colors: dict = {}

    def rec(i):
        if i == len(order):
            return True
        v = order[i]
        for c in ones[v]:
            if all(colors.get(w) != c for w in g.adj[v]):
                colors[v] = c
                if rec(i + 1):
                    return True
                del colors[v]
        return False

    return dict(colors) if rec(0) else None


def _components_in(g: Graph, mask: int) -> int:
    seen, count = 0, 0
    for s in bits(mask):
        if seen >> s & 1:
            continue
        count += 1
        frontier = 1 << s
        seen |= frontier
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= g.masks[v] & mask & ~seen
            seen |= nxt
            frontier = nxt
    return count


def max_one_colorable(g: Graph, ones: list[list]) -> tuple[frozenset, dict]:
    """A maximum set colorable from the 1-lists, fewest components outside it.

    Tries removal sets by increasing size; ties on component count go to
    the lexicographically first removal set.
    """
    full = (1 << g.n) - 1
    for r in range(g.n + 1):
        best = None
        for out in combinations(range(g.n), r):
            out_mask = to_mask(out)
            phi = _one_color(g, full & ~out_mask, ones)
            if phi is None:
                continue
            comps = _components_in(g, out_mask)
            if best is None or comps < best[0]:
                best = (comps, out_mask, phi)
        if best is not None:
            return frozenset(bits(full & ~best[1])), best[2]
    raise AssertionError("the empty set is always colorable")


def _check_thm42_structure(g: Graph, inside: frozenset) -> None:
    outside = [v for v in range(g.n) if v not in inside]
    for v in outside:
        hits = sum(1 for w in g.adj[v] if w in inside)
        if hits < 2:
            raise PreconditionViolated(f"vertex {v} outside I has only {hits} neighbors in I")
    rest, old = induced_subgraph(g, outside)
    for comp in connected_components(rest):
        if len(comp) > 2:
            raise PreconditionViolated(f"G - I has a component {[old[v] for v in comp]} larger than K2")
    for u in inside:
        nbrs = g.adj[u]
        if any(w in inside for w in nbrs):
            continue
        for a, b in combinations(nbrs, 2):
            if g.has_edge(a, b):
                raise PreconditionViolated(f"neighbors {a}, {b} of {u} are adjacent")
        for ui in nbrs:
            for v in g.adj[ui]:
                if v == u:
                    continue
                if v not in inside or any(x not in inside for x in g.adj[v] if x != ui):
                    raise PreconditionViolated(f"vertex {v} next to {ui} breaks the all-in-I pattern")


def thm42_pipeline(g: Graph, lists: ListAssignment, cap: int | None = None) -> ListPackingColoring:
    """Color a connected cubic graph from 1-lists of size 2 and 2-lists of size 3.

    Larger 1-lists are cut down to their two smallest colors so that the
    maximality arguments apply verbatim.
    """
    limit = scale_cap(THM42_CAP) if cap is None else cap
    if g.n > limit:
        raise ScaleExceeded(f"thm42_pipeline capped at {limit} vertices, got {g.n}")
    _require_connected_cubic(g)
    _require_sizes(lists, g, 2, 3)
    ones = [_split(lists, v)[0][:2] for v in range(g.n)]
    inside, phi = max_one_colorable(g, ones)
    _check_thm42_structure(g, inside)
    return _color_square_rest(g, lists, inside, dict(phi), max_deg=3, clique=4)
