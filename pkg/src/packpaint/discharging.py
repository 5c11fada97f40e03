"""Charges, the four discharging rules, and the finite profile check for k = 12.

Every vertex starts with charge ``d(v)``.  The rules, all read off the
*initial* degrees and applied in one simultaneous pass:

* a 14+-vertex sends 4/5 to each neighbor;
* a vertex of degree 5..13 sends 2/5 to each neighbor;
* a 4-vertex sends 2/5 to each 2-neighbor;
* a 3-vertex sends 2/5 to each 2-neighbor whose other neighbor is a 13- vertex.

The goal is a final charge of at least 14/5 everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement, product
from typing import Iterable, Sequence

from .errors import InconsistentProfile
from .graph import Graph

TARGET = Fraction(14, 5)
HIGH = Fraction(4, 5)
MID = Fraction(2, 5)
HIGH_FROM = 14
MID_RANGE = range(5, 14)

FILTERS = (
    "PendantVertex",
    "TwoThread",
    "AllTwoNeighbors",
    "ThreeThread",
    "OnlyTwoThreads",
    "TwoTwoNeighbors3Vertex",
    "OneTwoNeighbor3Vertex",
)


def _sent5(sender_degree: int, receiver_degree: int, receiver_other: int | None) -> int:
    """Charge in fifths that one vertex sends one neighbor."""
    if sender_degree >= HIGH_FROM:
        return 4
    if sender_degree in MID_RANGE:
        return 2
    if receiver_degree == 2:
        if sender_degree == 4:
            return 2
        if sender_degree == 3:
            if receiver_other is None:
                raise InconsistentProfile("rule for 3-vertices needs the far degree of its 2-neighbor")
            if receiver_other <= 13:
                return 2
    return 0


def sent_per_neighbor(sender_degree: int, receiver_degree: int, receiver_other: int | None) -> Fraction:
    """Charge one vertex sends one neighbor.

    ``receiver_other`` is the degree of the receiver's other neighbor, only
    consulted for a 3-vertex sending to a 2-vertex.
    """
    return Fraction(_sent5(sender_degree, receiver_degree, receiver_other), 5)


@dataclass(frozen=True)
class Transfer:
    sender: int
    receiver: int
    amount: Fraction


@dataclass(frozen=True)
class ChargeLedger:
    initial: tuple[Fraction, ...]
    final: tuple[Fraction, ...]
    transfers: tuple[Transfer, ...] = field(repr=False)

    def total(self) -> Fraction:
        return sum(self.final, Fraction(0))

    def minimum(self) -> Fraction | None:
        return min(self.final) if self.final else None


def discharge_graph(g: Graph) -> ChargeLedger:
    deg = g.degrees()
    charge = [Fraction(d) for d in deg]
    initial = tuple(charge)
    moves = []
    for v in range(g.n):
        for w in g.adj[v]:
            other = None
            if deg[w] == 2:
                other = deg[next(x for x in g.adj[w] if x != v)]
            amount = sent_per_neighbor(deg[v], deg[w], other)
            if amount:
                moves.append(Transfer(v, w, amount))
    for t in moves:
        charge[t.sender] -= t.amount
        charge[t.receiver] += t.amount
    return ChargeLedger(initial, tuple(charge), tuple(moves))


@dataclass(frozen=True)
class LocalProfile:
    """Degrees around one center.

    ``far_degrees[i]`` is the degree of the other neighbor of neighbor ``i``
    when that neighbor is a 2-vertex, else None.
    """

    center_degree: int
    neighbor_degrees: tuple[int, ...]
    far_degrees: tuple[int | None, ...]

    def __post_init__(self):
        nd = tuple(self.neighbor_degrees)
        fd = tuple(self.far_degrees)
        object.__setattr__(self, "neighbor_degrees", nd)
        object.__setattr__(self, "far_degrees", fd)
        if self.center_degree < 0 or len(nd) != self.center_degree:
            raise InconsistentProfile(f"center of degree {self.center_degree} with {len(nd)} neighbor degrees")
        if len(fd) != len(nd):
            raise InconsistentProfile("far_degrees must align with neighbor_degrees")
        for e, f in zip(nd, fd):
            if e < 1:
                raise InconsistentProfile(f"neighbor of degree {e}")
            if (e == 2) != (f is not None):
                raise InconsistentProfile("far degree is given exactly for 2-neighbors")
            if f is not None and f < 1:
                raise InconsistentProfile(f"far degree {f}")

    def two_neighbors(self) -> list[int]:
        return [i for i, e in enumerate(self.neighbor_degrees) if e == 2]


def extract_profile(g: Graph, v: int) -> LocalProfile:
    nd, fd = [], []
    for w in g.adj[v]:
        nd.append(g.degree(w))
        fd.append(g.degree(next(x for x in g.adj[w] if x != v)) if g.degree(w) == 2 else None)
    return LocalProfile(g.degree(v), tuple(nd), tuple(fd))


def final_charge_profile(p: LocalProfile) -> Fraction:
    """Final charge of the center from its own profile alone."""
    d = p.center_degree
    fifths = 5 * d
    for e, f in zip(p.neighbor_degrees, p.far_degrees):
        fifths -= _sent5(d, e, f)
    for i, e in enumerate(p.neighbor_degrees):
        # when the center is a 2-vertex, its "other neighbor" seen from
        # neighbor i is the remaining neighbor
        other = p.neighbor_degrees[1 - i] if d == 2 else None
        fifths += _sent5(e, d, other)
    return Fraction(fifths, 5)


# ------------------------------------------------------------ lemma filters


def _violations(p: LocalProfile, k: int, weak_one_two: bool = False) -> set[str]:
    """Names of the structural facts this profile contradicts.

    ``weak_one_two`` replaces the sum condition for a 3-vertex with one
    2-neighbor by its consequence "has a ceil((k+1)/2)+ neighbor".
    """
    out, strict, weak = _violations_both(p, k)
    if strict if not weak_one_two else weak:
        out.add("OneTwoNeighbor3Vertex")
    return out


def _violations_both(p: LocalProfile, k: int) -> tuple[set[str], bool, bool]:
    """Violations other than the one-2-neighbor fact, plus that fact under
    the strict (degree sum) and weak (large neighbor) readings."""
    strict = weak = False
    out = set()
    d, nd, fd = p.center_degree, p.neighbor_degrees, p.far_degrees
    big, huge = k + 1, k + 2
    if d == 1 or any(e == 1 for e in nd) or any(f == 1 for f in fd if f is not None):
        out.add("PendantVertex")
    twos = p.two_neighbors()
    # 2-threads: center-x when the center is a 2-vertex, x-far when far is 2
    for i in twos:
        if d == 2:
            other = nd[1 - i]
            if other < huge or fd[i] < huge:
                out.add("TwoThread")
        if fd[i] == 2 and d < huge:
            out.add("TwoThread")
    if d <= big and all(e < 3 for e in nd):
        out.add("AllTwoNeighbors")
    for i in twos:
        # the 2-neighbor itself is a (k+1)- vertex; it needs a 3+ neighbor
        if d < 3 and fd[i] < 3:
            out.add("AllTwoNeighbors")
    if d == 2 and (len(twos) == 2 or any(fd[i] == 2 for i in twos)):
        out.add("ThreeThread")
    if d >= 1 and all(e == 2 and fd[i] == 2 for i, e in enumerate(nd)):
        out.add("OnlyTwoThreads")
    if d == 3:
        for i, j in ((0, 1), (0, 2), (1, 2)):
            if nd[i] == 2 and nd[j] == 2:
                (t,) = {0, 1, 2} - {i, j}
                v3 = nd[t]
                if v3 < big or max(fd[i], fd[j], v3) < huge:
                    out.add("TwoTwoNeighbors3Vertex")
        for i in twos:
            rest = [nd[j] for j in range(3) if j != i]
            weak = weak or max(rest) < -(-(k + 1) // 2)
            strict = strict or sum(rest) < k + 1
    return out, strict, weak


# ------------------------------------------------------------ enumeration

# representative (degree, far degree) for the neighbor classes used around
# centers of degree >= 4, where only the class matters
_CLASSES = {
    "1": (1, None),
    "2/thread": (2, 2),
    "2/other": (2, 3),
    "3": (3, None),
    "4": (4, None),
    "5..13": (5, None),
    "14+": (14, None),
}


def _exact_profiles(d: int, values: Sequence[int]) -> Iterable[LocalProfile]:
    for nbrs in combinations_with_replacement(values, d):
        slots = [i for i, e in enumerate(nbrs) if e == 2]
        for fars in product(values, repeat=len(slots)):
            fd: list[int | None] = [None] * d
            for i, f in zip(slots, fars):
                fd[i] = f
            yield LocalProfile(d, nbrs, tuple(fd))


def _class_profiles(d: int) -> Iterable[LocalProfile]:
    for combo in combinations_with_replacement(list(_CLASSES), d):
        nd = tuple(_CLASSES[c][0] for c in combo)
        fd = tuple(_CLASSES[c][1] for c in combo)
        yield LocalProfile(d, nd, fd)


def all_profiles(degree_cap: int) -> Iterable[LocalProfile]:
    """Every center of degree 1..degree_cap, exact around 1-, 2- and 3-centers."""
    values = list(range(1, degree_cap + 1))
    for d in (1, 2, 3):
        yield from _exact_profiles(d, values)
    for d in range(4, degree_cap + 1):
        yield from _class_profiles(d)


@dataclass(frozen=True)
class ProfileReport:
    rows: tuple[tuple[LocalProfile, Fraction, bool], ...]
    minimum: Fraction
    failing: tuple[tuple[LocalProfile, Fraction], ...]
    flagged: tuple[tuple[LocalProfile, Fraction], ...]
    filters: tuple[str, ...]
    note: str


def enumerate_profiles(k: int = 12, degree_cap: int = 15, filters: Iterable[str] | None = None) -> ProfileReport:
    """Final charges of every lemma-consistent profile.

    ``filters`` selects which structural facts prune the enumeration (all
    of them by default).  Profiles whose fate depends on reading the
    one-2-neighbor fact as the degree sum or as its "large neighbor"
    consequence are collected in ``flagged``.
    """
    if degree_cap < 15:
        raise ValueError("degree_cap must be at least 15")
    active = tuple(FILTERS if filters is None else filters)
    unknown = set(active) - set(FILTERS)
    if unknown:
        raise ValueError(f"unknown filters {sorted(unknown)}")
    rows, failing, flagged = [], [], []
    use_one_two = "OneTwoNeighbor3Vertex" in active
    others = set(active) - {"OneTwoNeighbor3Vertex"}
    for p in all_profiles(degree_cap):
        common, strict_hit, weak_hit = _violations_both(p, k)
        common &= others
        strict = bool(common) or (use_one_two and strict_hit)
        weak = bool(common) or (use_one_two and weak_hit)
        if strict != weak:
            flagged.append((p, final_charge_profile(p)))
        if strict:
            continue
        charge = final_charge_profile(p)
        ok = charge >= TARGET
        rows.append((p, charge, ok))
        if not ok:
            failing.append((p, charge))
    minimum = min(c for _, c, _ in rows)
    # centers with degree j >= 14 keep at least j - (4/5) j = j/5, increasing in j
    note = f"degrees above {degree_cap} keep at least j/5 > {Fraction(degree_cap, 5)} >= 14/5"
    return ProfileReport(tuple(rows), minimum, tuple(failing), tuple(flagged), active, note)
