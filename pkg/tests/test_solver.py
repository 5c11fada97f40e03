import itertools

import pytest
from hypothesis import given, strategies as st

from packpaint import families as fam
from packpaint.errors import ClassOutOfRange, InconsistentForcing, InvalidSpec, ScaleExceeded
from packpaint.graph import from_edge_list
from packpaint.solver import (
    PackingColoring,
    PackingSpec,
    Unsatisfiable,
    count,
    proper_chromatic_check,
    solve,
    verify,
)

from conftest import graphs

specs = st.lists(st.sampled_from((1, 2)), min_size=1, max_size=4).map(lambda r: PackingSpec(tuple(sorted(r))))


def brute_count(g, spec):
    return sum(verify(g, spec, a) for a in itertools.product(range(len(spec)), repeat=g.n))


def test_spec_parsing():
    assert PackingSpec.parse("1,1,2,2") == PackingSpec.ones_twos(2, 2)
    assert PackingSpec.parse("1^2,2^2").radii == (1, 1, 2, 2)
    assert str(PackingSpec.parse("1,2,2,2")) == "(1,2^3)"
    with pytest.raises(InvalidSpec):
        PackingSpec.parse("1,0,2")
    with pytest.raises(InvalidSpec):
        PackingSpec((2, 1))


def test_verify_examples():
    c6 = fam.cycle(6).graph
    assert verify(c6, PackingSpec((1, 1)), [v % 2 for v in range(6)])
    assert not verify(fam.path(2).graph, PackingSpec((1,)), [0, 0])
    assert not verify(fam.path(3).graph, PackingSpec((1, 2)), [1, 0, 1])
    with pytest.raises(ClassOutOfRange):
        verify(c6, PackingSpec((1, 1)), [0, 1, 2, 0, 1, 0])


def test_solve_examples():
    p = fam.petersen().graph
    assert not solve(p, PackingSpec.ones_twos(1, 5))
    assert verify(p, PackingSpec.ones_twos(1, 6), solve(p, PackingSpec.ones_twos(1, 6)))
    assert not solve(p, PackingSpec.ones_twos(2, 2))
    assert verify(p, PackingSpec.ones_twos(2, 3), solve(p, PackingSpec.ones_twos(2, 3)))
    f11 = fam.family_F(1, 1).graph
    assert not solve(f11, PackingSpec((1, 2)))
    assert solve(f11, PackingSpec((1, 1)))
    h = fam.gadget_H11()
    assert not solve(h.graph, PackingSpec.ones_twos(2, 1), {h["x"]: 2, h["y"]: 2})


def test_unsatisfiable_carries_nodes():
    result = solve(fam.petersen().graph, PackingSpec.ones_twos(1, 5))
    assert isinstance(result, Unsatisfiable) and result.nodes > 0


def test_forcing_errors():
    g = fam.path(3).graph
    with pytest.raises(ClassOutOfRange):
        solve(g, PackingSpec((1, 1)), {0: 5})
    with pytest.raises(InconsistentForcing):
        solve(g, PackingSpec((1, 1)), {0: 0, 1: 0})
    # consistent forcing that cannot be completed is just UNSAT
    assert not solve(g, PackingSpec((1, 2)), {0: 1})


def test_empty_spec():
    assert solve(from_edge_list(0, []), PackingSpec(()))
    assert not solve(from_edge_list(1, []), PackingSpec(()))


def test_count_examples():
    assert count(from_edge_list(1, []), PackingSpec((1,))) == 1
    assert count(fam.path(2).graph, PackingSpec((1,))) == 0
    assert count(fam.path(3).graph, PackingSpec((1, 1))) == 2
    with pytest.raises(ScaleExceeded):
        count(fam.cycle(13).graph, PackingSpec((1, 1)))


def test_proper_chromatic_examples():
    assert proper_chromatic_check(fam.family_F(3, 2).graph, 4)
    assert not proper_chromatic_check(fam.cycle(5).graph, 2)
    assert proper_chromatic_check(fam.family_F4(1).graph, 3)


@given(graphs(max_n=6), specs)
def test_count_matches_bruteforce(g, spec):
    assert count(g, spec) == brute_count(g, spec)


@given(graphs(max_n=10), specs)
def test_soundness_and_completeness(g, spec):
    result = solve(g, spec)
    if result:
        assert verify(g, spec, result)
    assert bool(result) == (count(g, spec, cap=10) > 0)


@given(graphs(max_n=9), specs, st.data())
def test_monotonicity(g, spec, data):
    if not solve(g, spec):
        return
    radii = list(spec.radii)
    i = data.draw(st.integers(0, len(radii) - 1))
    if radii[i] > 1:
        radii[i] -= 1
        assert solve(g, PackingSpec(tuple(sorted(radii))))
    assert solve(g, PackingSpec(tuple(sorted(spec.radii + (data.draw(st.sampled_from((1, 2))),)))))


@given(graphs(max_n=9), specs, st.randoms(use_true_random=False))
def test_equal_radius_permutation(g, spec, rnd):
    result = solve(g, spec)
    if not result:
        return
    perm = list(range(len(spec)))
    for r in set(spec.radii):
        idx = [c for c in perm if spec.radii[c] == r]
        shuffled = idx[:]
        rnd.shuffle(shuffled)
        for a, b in zip(idx, shuffled):
            perm[a] = b
    assert verify(g, spec, [perm[c] for c in result.assignment])


@given(graphs(max_n=8, min_n=1), specs)
def test_forced_witness_resolve(g, spec):
    result = solve(g, spec)
    if not result:
        return
    used = set(result.assignment)
    for c in used:
        v = result.assignment.index(c)
        again = solve(g, spec, {v: c})
        assert again and again[v] == c


def test_parallel_same_verdict():
    p = fam.petersen().graph
    for ones, twos in ((1, 5), (1, 6), (2, 2), (2, 3)):
        spec = PackingSpec.ones_twos(ones, twos)
        fast = solve(p, spec, workers=2)
        assert bool(fast) == bool(solve(p, spec))
        if fast:
            assert verify(p, spec, fast)


def test_deterministic():
    g = fam.heawood().graph
    spec = PackingSpec.ones_twos(2, 3)
    assert solve(g, spec) == solve(g, spec)
    assert isinstance(solve(g, spec), PackingColoring)
