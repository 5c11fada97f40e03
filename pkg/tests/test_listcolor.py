import random
from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from packpaint import families as fam
from packpaint.errors import PreconditionViolated, ScaleExceeded, UnknownColor
from packpaint.graph import add_edges, from_edge_list, girth
from packpaint.listcolor import (
    INCONCLUSIVE,
    ColorClass,
    ListAssignment,
    adversarial_T3_assignment,
    bad_copy_census,
    bad_pair,
    choosable_bounded,
    copy_is_bad,
    heawood_pipeline,
    max_one_colorable,
    random_lists,
    solve_list,
    thm41_pipeline,
    thm42_pipeline,
    verify_list,
)
from packpaint.solver import PackingSpec, solve, verify

from conftest import graphs


def identical(n, ones, twos):
    return ListAssignment.identical(n, [(1, ones), (2, twos)])


def test_verify_list_examples():
    one = ListAssignment((ColorClass(1, {0, 1}),), ({0, 1},))
    assert verify_list(from_edge_list(1, []), one, [0]) and verify_list(from_edge_list(1, []), one, [1])
    k2 = ListAssignment((ColorClass(1, {0}),), ({0}, {0}))
    assert not verify_list(fam.path(2).graph, k2, [0, 0])
    with pytest.raises(UnknownColor):
        verify_list(from_edge_list(1, []), one, [7])
    with pytest.raises(UnknownColor):
        ListAssignment((ColorClass(1, {0}),), ({3},))


@given(graphs(max_n=6), st.integers(0, 2), st.integers(0, 2), st.data())
def test_verify_list_specializes(g, ones, twos, data):
    if ones + twos == 0:
        return
    lists = identical(g.n, ones, twos)
    spec = PackingSpec.ones_twos(ones, twos)
    assignment = [data.draw(st.integers(0, ones + twos - 1)) for _ in range(g.n)]
    assert verify_list(g, lists, assignment) == verify(g, spec, assignment)


def test_solve_list_examples():
    p = fam.petersen().graph
    assert solve_list(p, identical(10, 1, 6))
    assert not solve_list(p, identical(10, 2, 2))
    assert not solve_list(p, identical(10, 1, 5))
    assert solve_list(p, identical(10, 2, 3))
    empty = ListAssignment((ColorClass(1, {0}),), (frozenset(),))
    assert not solve_list(from_edge_list(1, []), empty)


@settings(max_examples=60)
@given(graphs(max_n=10), st.integers(0, 3), st.integers(0, 3))
def test_specialization_equivalence(g, ones, twos):
    if ones + twos == 0:
        return
    found = solve_list(g, identical(g.n, ones, twos))
    assert bool(found) == bool(solve(g, PackingSpec.ones_twos(ones, twos)))
    if found:
        assert verify_list(g, identical(g.n, ones, twos), found)


@given(graphs(max_n=7), st.randoms(use_true_random=False))
def test_random_lists_soundness(g, rnd):
    lists = random_lists(g, 1, 2, rnd)
    found = solve_list(g, lists)
    if found:
        assert verify_list(g, lists, found)


def brute_list(g, lists):
    import itertools
    for choice in itertools.product(*[sorted(lst) for lst in lists.lists]):
        if verify_list(g, lists, choice):
            return True
    return False


@given(graphs(max_n=6), st.randoms(use_true_random=False))
def test_solve_list_against_bruteforce(g, rnd):
    lists = random_lists(g, 1, 1, rnd, palette1=2, palette2=2)
    assert bool(solve_list(g, lists)) == brute_list(g, lists)


def test_choosable_examples():
    assert choosable_bounded(fam.path(2).graph, 2, 0).verdict is True
    assert choosable_bounded(from_edge_list(1, []), 1, 0).verdict is True
    c4 = choosable_bounded(fam.cycle(4).graph, 1, 1)
    # (1,2) alone has no coloring of C4, so some assignment must fail
    assert c4.verdict is False
    assert not solve_list(fam.cycle(4).graph, c4.counterexample)
    assert choosable_bounded(fam.cycle(4).graph, 2, 0).verdict is True
    assert choosable_bounded(fam.cycle(4).graph, 1, 0, palette1=1).verdict is False
    small = choosable_bounded(fam.path(3).graph, 2, 0, palette1=3)
    assert small.verdict is INCONCLUSIVE
    with pytest.raises(ScaleExceeded):
        choosable_bounded(fam.cycle(9).graph, 1, 1)


def test_choosable_matches_known_list_chromatic_numbers():
    assert choosable_bounded(fam.cycle(5).graph, 2, 0, budget=10**6).verdict is False
    assert choosable_bounded(fam.cycle(5).graph, 3, 0, budget=10**7, palette1=5).verdict in (True, INCONCLUSIVE)


def test_pipelines_on_petersen(rng):
    p = fam.petersen().graph
    for _ in range(10):
        lists = random_lists(p, 1, 6, rng)
        assert verify_list(p, lists, thm41_pipeline(p, lists))
        lists = random_lists(p, 2, 3, rng)
        assert verify_list(p, lists, thm42_pipeline(p, lists))
    same = identical(10, 2, 3)
    assert verify_list(p, same, thm42_pipeline(p, same))


def test_thm42_on_K4(rng):
    k4 = fam.complete(4).graph
    for _ in range(10):
        lists = random_lists(k4, 2, 3, rng)
        assert verify_list(k4, lists, thm42_pipeline(k4, lists))


def test_pipeline_preconditions(rng):
    not_cubic = add_edges(fam.petersen().graph, [(0, 2)])
    assert not_cubic.degree(0) == 4
    with pytest.raises(PreconditionViolated):
        thm41_pipeline(not_cubic, random_lists(not_cubic, 1, 6, rng))
    h = fam.heawood().graph
    with pytest.raises(PreconditionViolated):
        thm41_pipeline(h, random_lists(h, 1, 6, rng))
    p = fam.petersen().graph
    with pytest.raises(PreconditionViolated):
        thm41_pipeline(p, random_lists(p, 1, 5, rng))
    with pytest.raises(ScaleExceeded):
        thm42_pipeline(fam.random_cubic(22, rng), random_lists(fam.random_cubic(22, rng), 2, 3, rng))


@pytest.mark.parametrize("seed", [1, 2, 3])
def test_pipelines_on_random_cubic(seed):
    print(f"seed={seed}")
    rng = random.Random(seed)
    for _ in range(10):
        n = rng.choice((4, 6, 8, 10, 12, 14, 16))
        g = fam.random_cubic(n, rng)
        lists = random_lists(g, 1, 6, rng)
        out = heawood_pipeline(lists) if n == 14 and girth(g) == 6 else thm41_pipeline(g, lists)
        assert verify_list(g, lists, out)
        lists = random_lists(g, 2, 3, rng)
        assert verify_list(g, lists, thm42_pipeline(g, lists))


@pytest.mark.parametrize("seed", [4, 5])
def test_thm42_outside_vertices_see_two_of_I(seed):
    rng = random.Random(seed)
    for _ in range(10):
        g = fam.random_cubic(rng.choice((8, 10, 12)), rng)
        lists = random_lists(g, 2, 3, rng)
        ones = [sorted(lists.with_radius(v, 1))[:2] for v in range(g.n)]
        inside, phi = max_one_colorable(g, ones)
        assert all(phi[a] != phi[b] for a in inside for b in g.adj[a] if b in inside)
        for v in set(range(g.n)) - inside:
            assert sum(w in inside for w in g.adj[v]) >= 2


def test_heawood_pipeline(rng):
    g = fam.heawood().graph
    for _ in range(20):
        lists = random_lists(g, 1, 6, rng)
        assert verify_list(g, lists, heawood_pipeline(lists))


def test_adversarial_assignment_shape():
    lg, lists = adversarial_T3_assignment(1)
    for v in range(lg.graph.n):
        assert len(lists.with_radius(v, 1)) == 4
        assert len(lists.with_radius(v, 2)) == 1
    assert bad_pair(1, 0) == (1, 5) and bad_pair(1, 47) == (4, 8)


def test_census_is_exact():
    lg, lists = adversarial_T3_assignment(1)
    census = bad_copy_census(lg, lists, 1)
    assert set(census) == {0, 1, 2}
    for tally in census.values():
        assert tally == Counter({pair: 3 for pair in fam.PAIRS})


def test_single_bad_copy_needs_a_two_color():
    gadget = fam.load_t1_gadget()
    g = gadget.graph.graph
    u, u2 = gadget.graph["u"], gadget.graph["u'"]
    classes = (ColorClass(1, frozenset(range(1, 11))), ColorClass(2, frozenset({101})))
    for i, j in fam.PAIRS:
        ones = gadget.lists_for(i, j)
        base = ListAssignment(classes, tuple(ones.get(v, frozenset()) for v in range(g.n)))
        assert copy_is_bad(g, base, range(g.n), u, u2, i, j)
        full = ListAssignment(classes, tuple(x | {101} for x in base.lists))
        found = solve_list(g, full, {u: i, u2: j})
        assert found and any(found[z] == 101 for z in range(g.n) if z not in (u, u2))
        # a pair the copy is not bad for extends with 1-colors alone
        other = (i % 4 + 1, j)
        assert not copy_is_bad(g, base, range(g.n), u, u2, *other)
