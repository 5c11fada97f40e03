"""Exact search for packing S-colorings.

A packing S-coloring for ``S = (s_1, ..., s_k)`` puts every vertex in one
of ``k`` classes so that class ``i`` is ``s_i``-independent: two members are
at distance at least ``s_i + 1`` in the graph.  Classes are 0-based here.

The search is a plain depth-first search: branch on the uncolored vertex
with the fewest feasible classes (lowest index on ties), try classes in
spec order, and prune the domains of every vertex inside the radius ball of
a new assignment.  Classes of equal radius are interchangeable until used,
so only the lowest unused class of each radius is ever tried.
"""

from __future__ import annotations

import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from ._caps import scale_cap
from .errors import ClassOutOfRange, InconsistentForcing, InvalidSpec, ScaleExceeded
from .graph import Graph, bits, is_i_independent

COUNT_CAP = 12


@dataclass(frozen=True)
class PackingSpec:
    radii: tuple[int, ...]

    def __post_init__(self):
        radii = tuple(int(r) for r in self.radii)
        object.__setattr__(self, "radii", radii)
        if any(r < 1 for r in radii):
            raise InvalidSpec(f"radii must be positive, got {radii}")
        if list(radii) != sorted(radii):
            raise InvalidSpec(f"radii must be nondecreasing, got {radii}")

    @classmethod
    def ones_twos(cls, ones: int, twos: int) -> "PackingSpec":
        return cls((1,) * ones + (2,) * twos)

    @classmethod
    def parse(cls, text: str) -> "PackingSpec":
        """Parse ``"1,1,2,2"`` or the exponent form ``"1^2,2^2"``."""
        text = text.strip().strip("()")
        if not text:
            return cls(())
        radii: list[int] = []
        for offset, token in _tokens(text):
            m = re.fullmatch(r"(-?\d+)(?:\^(\d+))?", token)
            if not m:
                raise InvalidSpec(f"offset {offset}: cannot parse {token!r}")
            radius, mult = int(m.group(1)), int(m.group(2) or 1)
            if radius < 1:
                raise InvalidSpec(f"offset {offset}: radius must be positive, got {radius}")
            radii += [radius] * mult
        return cls(tuple(radii))

    def __len__(self):
        return len(self.radii)

    def __str__(self):
        parts = []
        for r in sorted(set(self.radii)):
            t = self.radii.count(r)
            parts.append(f"{r}^{t}" if t > 1 else str(r))
        return "(" + ",".join(parts) + ")"

    def to_text(self) -> str:
        return ",".join(map(str, self.radii))


def _tokens(text):
    offset = 0
    for token in text.split(","):
        yield offset, token.strip()
        offset += len(token) + 1


@dataclass(frozen=True)
class PackingColoring:
    """Total map vertex -> class index, plus the search-node count."""

    assignment: tuple[int, ...]
    nodes: int = field(default=0, compare=False)

    def __getitem__(self, v):
        return self.assignment[v]

    def __len__(self):
        return len(self.assignment)

    def __bool__(self):
        # a found coloring is truthy even on the empty graph
        return True

    def classes(self, k: int) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(k)]
        for v, c in enumerate(self.assignment):
            out[c].append(v)
        return out


@dataclass(frozen=True)
class Unsatisfiable:
    """Exhausted search; ``nodes`` records its size."""

    nodes: int = 0

    def __bool__(self):
        return False


def verify(g: Graph, spec: PackingSpec, coloring) -> bool:
    assignment = list(coloring.assignment if isinstance(coloring, PackingColoring) else coloring)
    if len(assignment) != g.n:
        raise ValueError(f"coloring covers {len(assignment)} vertices, graph has {g.n}")
    members: dict[int, list[int]] = {}
    for v, c in enumerate(assignment):
        if not (isinstance(c, int) and 0 <= c < len(spec)):
            raise ClassOutOfRange(f"vertex {v} has class {c!r}; spec has {len(spec)} classes")
        members.setdefault(c, []).append(v)
    return all(is_i_independent(g, vs, spec.radii[c]) for c, vs in members.items())


class _Search:
    """DFS state over generic "classes": each has a radius, and classes in
    one symmetry group are interchangeable while unused."""

    def __init__(self, g: Graph, radii: Sequence[int], forced: Mapping[int, int], symmetry: bool,
                 groups: Sequence[Sequence[int]] | None = None, domains: Sequence[int] | None = None):
        self.g = g
        k = len(radii)
        self.k = k
        self.ball = [g.ball_masks(r) for r in radii]
        if groups is None:
            by_radius: dict[int, list[int]] = {}
            for c, r in enumerate(radii):
                by_radius.setdefault(r, []).append(c)
            groups = list(by_radius.values())
        self.groups = [list(grp) for grp in groups]
        self.symmetry = symmetry
        self.nodes = 0
        self.color = [-1] * g.n
        self.dom = list(domains) if domains is not None else [(1 << k) - 1] * g.n
        self.uncolored = (1 << g.n) - 1
        self.used = 0
        self.trail: list[tuple[int, int]] = []
        self.ok = all(self.dom)
        for v, c in sorted(forced.items()):
            g.check_vertex(v)
            if not (isinstance(c, int) and 0 <= c < k):
                raise ClassOutOfRange(f"forced class {c!r} for vertex {v}; spec has {k} classes")
            if not self.dom[v] >> c & 1:
                raise InconsistentForcing(f"forcing vertex {v} into class {c} conflicts with other forced vertices")
            if not self.assign(v, c):
                # a domain wiped out: unsatisfiable, but the forcing itself is consistent
                self.ok = False
        self.trail.clear()

    def assign(self, v: int, c: int) -> bool:
        self.color[v] = c
        self.uncolored &= ~(1 << v)
        self.used |= 1 << c
        bit = 1 << c
        dom, trail = self.dom, self.trail
        alive = True
        for w in bits(self.ball[c][v] & self.uncolored):
            d = dom[w]
            if d & bit:
                trail.append((w, d))
                dom[w] = d & ~bit
                if not dom[w]:
                    alive = False
        return alive

    def undo(self, v: int, mark: int, used: int) -> None:
        self.color[v] = -1
        self.uncolored |= 1 << v
        self.used = used
        dom, trail = self.dom, self.trail
        while len(trail) > mark:
            w, d = trail.pop()
            dom[w] = d

    def pick(self) -> int:
        best, best_size = -1, self.k + 1
        for v in bits(self.uncolored):
            size = bin(self.dom[v]).count("1")
            if size < best_size:
                best, best_size = v, size
                if size <= 1:
                    break
        return best

    def options(self, v: int) -> list[int]:
        d = self.dom[v]
        if not self.symmetry:
            return list(bits(d))
        opts = []
        for group in self.groups:
            fresh_taken = False
            for c in group:
                if not d >> c & 1:
                    continue
                if self.used >> c & 1:
                    opts.append(c)
                elif not fresh_taken:
                    opts.append(c)
                    fresh_taken = True
        return sorted(opts)

    def run(self) -> bool:
        """Depth-first search; leaves the solution in ``self.color``."""
        if not self.ok:
            return False
        if not self.uncolored:
            return True
        stack = []
        v = self.pick()
        stack.append([v, self.options(v), 0, len(self.trail), self.used])
        while stack:
            frame = stack[-1]
            v, opts, i, mark, used = frame
            if self.color[v] >= 0:
                self.undo(v, mark, used)
            if i == len(opts):
                stack.pop()
                continue
            frame[2] = i + 1
            self.nodes += 1
            if not self.assign(v, opts[i]):
                continue
            if not self.uncolored:
                return True
            w = self.pick()
            stack.append([w, self.options(w), 0, len(self.trail), self.used])
        return False

    def count(self) -> int:
        if not self.ok:
            return 0
        maxball = [max(col) for col in zip(*self.ball)] if self.k else []
        return self._count(maxball)

    def _count(self, maxball) -> int:
        if not self.uncolored:
            return 1
        free = self.uncolored
        if all(not (maxball[v] & free) for v in bits(free)):
            total = 1
            for v in bits(free):
                total *= bin(self.dom[v]).count("1")
            return total
        v = self.pick()
        total = 0
        for c in bits(self.dom[v]):
            self.nodes += 1
            mark, used = len(self.trail), self.used
            if self.assign(v, c):
                total += self._count(maxball)
            self.undo(v, mark, used)
        return total


def solve(g: Graph, spec: PackingSpec, forced: Mapping[int, int] | None = None, workers: int = 1):
    """A coloring extending ``forced``, or :class:`Unsatisfiable`.

    With ``workers > 1`` the top-level branches are searched in separate
    processes; the verdict is unchanged but the witness may differ from the
    single-process one.
    """
    forced = dict(forced or {})
    if len(spec) == 0:
        return PackingColoring(()) if g.n == 0 else Unsatisfiable(0)
    search = _Search(g, spec.radii, forced, symmetry=True)
    if workers > 1 and search.ok and search.uncolored:
        return _solve_parallel(g, spec, forced, search, workers)
    if search.run():
        return PackingColoring(tuple(search.color), search.nodes)
    return Unsatisfiable(search.nodes)


def _branch_job(args):
    g, spec, forced = args
    try:
        result = solve(g, spec, forced)
    except InconsistentForcing:
        return None
    return result.assignment if result else None


def _solve_parallel(g, spec, forced, search, workers):
    v = search.pick()
    jobs = [(g, spec, {**forced, v: c}) for c in search.options(v)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for found in pool.map(_branch_job, jobs):
            if found is not None:
                return PackingColoring(tuple(found))
    return Unsatisfiable(len(jobs))


def count(g: Graph, spec: PackingSpec, forced: Mapping[int, int] | None = None, cap: int | None = None) -> int:
    """Number of valid total colorings, no symmetry reduction."""
    limit = scale_cap(COUNT_CAP) if cap is None else cap
    if g.n > limit:
        raise ScaleExceeded(f"count capped at {limit} vertices, got {g.n}")
    if len(spec) == 0:
        return 1 if g.n == 0 else 0
    try:
        search = _Search(g, spec.radii, dict(forced or {}), symmetry=False)
    except InconsistentForcing:
        return 0
    return search.count()


def proper_chromatic_check(g: Graph, t: int) -> bool:
    """Does ``g`` have a proper ``t``-coloring?"""
    return bool(solve(g, PackingSpec((1,) * t)))


def coloring_from_classes(n: int, classes: Sequence[Sequence[int]]) -> PackingColoring:
    assignment = [-1] * n
    for c, members in enumerate(classes):
        for v in members:
            if assignment[v] != -1:
                raise ValueError(f"vertex {v} listed in two classes")
            assignment[v] = c
    if -1 in assignment:
        raise ValueError(f"vertex {assignment.index(-1)} has no class")
    return PackingColoring(tuple(assignment))
