import random

import pytest
from hypothesis import given, settings, strategies as st

from packpaint import families as fam
from packpaint.errors import BadPartialColoring, InconsistentForcing, SiteMismatch
from packpaint.graph import from_edge_list, induced_subgraph
from packpaint.reducibility import (
    Configuration,
    Extended,
    HypothesisViolated,
    Kind,
    apply_reduction,
    deleted_set,
    designated,
    find_configurations,
    hypothesis,
    plant_instance,
    spec_for,
)
from packpaint.solver import solve, verify

from conftest import graphs


def color_rest(g, cfg, k, forced=None):
    drop = deleted_set(cfg)
    rest, old = induced_subgraph(g, [v for v in range(g.n) if v not in drop])
    pos = {v: i for i, v in enumerate(old)}
    found = solve(rest, spec_for(k), {pos[v]: c for v, c in (forced or {}).items()})
    if not found:
        return None
    phi = [None] * g.n
    for v in old:
        phi[v] = found[pos[v]]
    return phi


def test_find_examples():
    assert len(find_configurations(fam.path(4).graph, Kind.TwoThread)) == 1
    assert find_configurations(fam.complete(4).graph, Kind.PendantVertex) == []
    # two K_{1,3} glued at a leaf: four leaves remain
    f11 = fam.family_F(1, 1).graph
    leaves = [v for v in range(f11.n) if f11.degree(v) == 1]
    assert len(find_configurations(f11, "PendantVertex")) == len(leaves) == 4


def test_pendant_on_star():
    g = fam.star(3).graph
    (cfg,) = [c for c in find_configurations(g, Kind.PendantVertex) if c["u"] == 3]
    out = apply_reduction(g, 1, cfg, [0, 1, 1, None])
    assert isinstance(out, Extended) and out.coloring[3] == 1
    assert verify(g, spec_for(1), out.coloring)


def test_two_thread_hypothesis():
    for k in (1, 2, 3):
        # u1 u2 hung between two (k+2)-vertices
        edges = [(0, 1), (1, 2), (2, 3)]
        nxt = 4
        for hub in (0, 3):
            while sum(hub in e for e in edges) < k + 2:
                edges.append((hub, nxt))
                nxt += 1
        g = from_edge_list(nxt, edges)
        (cfg,) = [c for c in find_configurations(g, Kind.TwoThread) if {c["u1"], c["u2"]} == {1, 2}]
        out = apply_reduction(g, k, cfg, color_rest(g, cfg, k))
        assert out == HypothesisViolated("(k+2)+ outer degrees")


@pytest.mark.parametrize("k", [1, 2, 3])
def test_two_thread_in_large_random_graphs(k):
    rng = random.Random(100 + k)
    print(f"seed={100 + k}")
    done = 0
    while done < 30:
        inst = plant_instance(Kind.TwoThread, k, rng)
        if inst.graph.n < 30:
            continue
        out = apply_reduction(inst.graph, k, inst.config, inst.phi)
        assert out and verify(inst.graph, spec_for(k), out.coloring)
        done += 1


def test_three_thread_goes_through_middle_vertex():
    g = fam.path(5).graph
    cfg = find_configurations(g, Kind.ThreeThread)[0]
    out = apply_reduction(g, 1, cfg, color_rest(g, cfg, 1))
    assert out and any("middle vertex" in t for t in out.trace)


def test_errors():
    g = fam.path(4).graph
    (cfg,) = find_configurations(g, Kind.TwoThread)
    with pytest.raises(BadPartialColoring):
        apply_reduction(g, 1, cfg, [0, 1, None, 0])
    with pytest.raises(BadPartialColoring):
        apply_reduction(g, 1, cfg, [0, None, None, None])
    with pytest.raises(BadPartialColoring):
        apply_reduction(g, 1, cfg, [0, None, None, 7])
    with pytest.raises(SiteMismatch):
        apply_reduction(g, 1, Configuration(Kind.TwoThread, {"u1": 0, "u2": 1, "v1": 2, "v2": 3}), [None] * 4)
    with pytest.raises(SiteMismatch):
        apply_reduction(g, 1, Configuration(Kind.PendantVertex, {"u": 1, "v": 0}), [0, None, 1, 0])


@pytest.mark.parametrize("kind", list(Kind))
@pytest.mark.parametrize("k", [1, 2, 3])
def test_planted_instances(kind, k):
    seed = 1000 * k + list(Kind).index(kind)
    rng = random.Random(seed)
    print(f"seed={seed}")
    for satisfy in (True, False):
        for _ in range(15):
            inst = plant_instance(kind, k, rng, satisfy, tries=50) if satisfy or hypothesis_can_fail(kind) else None
            if inst is None:
                break
            out = apply_reduction(inst.graph, k, inst.config, inst.phi)
            if satisfy:
                assert out, out
                assert verify(inst.graph, spec_for(k), out.coloring)
                assert out.recolored <= designated(inst.config)
                # recipe success implies the forced solve succeeds too
                forced = {v: c for v, c in enumerate(inst.phi) if c is not None and v not in out.recolored}
                assert solve(inst.graph, spec_for(k), forced)
            else:
                assert isinstance(out, HypothesisViolated)


def hypothesis_can_fail(kind):
    return kind in (Kind.TwoThread, Kind.AllTwoNeighbors, Kind.TwoTwoNeighbors3Vertex, Kind.OneTwoNeighbor3Vertex)


def test_one_two_neighbor_vacuous_at_k1():
    assert plant_instance(Kind.OneTwoNeighbor3Vertex, 1, random.Random(0)) is None


@settings(max_examples=150)
@given(graphs(max_n=8, min_n=3), st.sampled_from(list(Kind)), st.integers(1, 3), st.randoms(use_true_random=False))
def test_never_an_invalid_coloring(g, kind, k, rnd):
    for cfg in find_configurations(g, kind):
        drop = deleted_set(cfg)
        keep = [v for v in cfg.sites.values() if v not in drop]
        forced = {v: rnd.randrange(k + 2) for v in keep if rnd.random() < 0.5}
        try:
            phi = color_rest(g, cfg, k, forced)
        except InconsistentForcing:
            phi = None
        phi = phi or color_rest(g, cfg, k)
        if phi is None:
            continue
        out = apply_reduction(g, k, cfg, phi)
        if hypothesis(g, k, cfg) is None:
            assert isinstance(out, Extended)
            assert verify(g, spec_for(k), out.coloring)
            assert out.recolored <= designated(cfg)
        else:
            assert isinstance(out, HypothesisViolated)
