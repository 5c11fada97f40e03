import itertools
import random

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from packpaint import families as fam
from packpaint.errors import LoopEdge, NotAPermutation, ScaleExceeded, VertexOutOfRange
from packpaint.graph import (
    ACYCLIC,
    UNREACHABLE,
    connected_components,
    degeneracy,
    degeneracy_check,
    distance,
    from_edge_list,
    girth,
    independent_in,
    induced_subgraph,
    is_i_independent,
    max_independent_set,
    max_independent_set_bruteforce,
    power,
    square,
)

from conftest import graphs


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def test_from_edge_list_examples():
    p3 = from_edge_list(3, [(0, 1), (1, 2)])
    assert p3.m == 2
    assert from_edge_list(2, [(0, 1), (1, 0)]).m == 1
    with pytest.raises(LoopEdge):
        from_edge_list(2, [(0, 0)])
    with pytest.raises(VertexOutOfRange):
        from_edge_list(2, [(0, 2)])


@given(graphs())
def test_adjacency_matches_edges(g):
    for u in range(g.n):
        assert list(g.adj[u]) == sorted(g.adj[u])
        for v in g.adj[u]:
            assert u in g.adj[v] and (min(u, v), max(u, v)) in g.edges
    assert sum(g.degrees()) == 2 * g.m


def test_distance_examples():
    assert distance(fam.path(3).graph, 0, 2) == 2
    g = fam.petersen().graph
    for u, v in itertools.combinations(range(10), 2):
        if not g.has_edge(u, v):
            assert distance(g, u, v) == 2
    h = fam.gadget_H11()
    assert distance(h.graph, h["x"], h["y"]) == 5
    assert distance(from_edge_list(2, []), 0, 1) is UNREACHABLE
    with pytest.raises(VertexOutOfRange):
        distance(g, 0, 10)


@given(graphs(max_n=8))
def test_distance_against_networkx(g):
    lengths = dict(nx.all_pairs_shortest_path_length(to_nx(g)))
    for u in range(g.n):
        for v in range(g.n):
            d = distance(g, u, v)
            assert (d is UNREACHABLE) == (v not in lengths[u])
            if d is not UNREACHABLE:
                assert d == lengths[u][v] == distance(g, v, u)


@given(graphs(max_n=7))
def test_triangle_inequality(g):
    for a, b, c in itertools.product(range(g.n), repeat=3):
        ab, bc, ac = distance(g, a, b), distance(g, b, c), distance(g, a, c)
        if UNREACHABLE not in (ab, bc):
            assert ac is not UNREACHABLE and ac <= ab + bc


def test_power_examples():
    c5 = fam.cycle(5).graph
    assert power(c5, 1) == c5
    assert power(c5, 2) == fam.complete(5).graph
    p4 = power(fam.path(4).graph, 2)
    assert p4.edges == {(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)}


@given(graphs(max_n=8), st.integers(1, 4))
def test_power_against_networkx_and_monotone(g, i):
    ours = power(g, i)
    theirs = nx.power(to_nx(g), i) if g.n else nx.Graph()
    assert ours.edges == {(min(e), max(e)) for e in theirs.edges}
    assert ours.edges <= power(g, i + 1).edges


def test_girth_examples():
    assert girth(fam.cycle(7).graph) == 7
    assert girth(fam.path(6).graph) is ACYCLIC
    assert girth(fam.star(4).graph) is ACYCLIC
    assert girth(fam.petersen().graph) == 5
    assert girth(fam.heawood().graph) == 6


@given(graphs(max_n=9))
def test_girth_against_networkx(g):
    expected = nx.girth(to_nx(g))
    got = girth(g)
    assert (got is ACYCLIC) == (expected == float("inf"))
    if got is not ACYCLIC:
        assert got == expected


@given(graphs(max_n=9))
def test_acyclic_iff_every_component_is_a_tree(g):
    forest = all(induced_subgraph(g, comp)[0].m == len(comp) - 1 for comp in connected_components(g))
    assert (girth(g) is ACYCLIC) == forest


def test_i_independent_examples():
    g = fam.petersen().graph
    assert is_i_independent(g, [], 3)
    assert not is_i_independent(g, [0, 1], 1)
    h = fam.heawood()
    assert is_i_independent(h.graph, [h[r] for r in fam.HEAWOOD_I], 1)
    with pytest.raises(VertexOutOfRange):
        is_i_independent(g, [11], 1)


@given(graphs(max_n=8), st.integers(1, 3), st.data())
def test_i_independent_matches_power(g, i, data):
    s = data.draw(st.lists(st.integers(0, max(g.n - 1, 0)), unique=True, max_size=g.n)) if g.n else []
    assert is_i_independent(g, s, i) == independent_in(power(g, i), s)


def test_mis_examples():
    assert len(max_independent_set(fam.complete(4).graph)) == 1
    assert len(max_independent_set(fam.cycle(5).graph)) == 2
    s = max_independent_set(fam.petersen().graph)
    assert len(s) == 4 and independent_in(fam.petersen().graph, s)
    with pytest.raises(ScaleExceeded):
        max_independent_set(fam.cycle(50).graph)


@given(graphs(max_n=12))
def test_mis_against_bruteforce_and_networkx(g):
    s = max_independent_set(g)
    assert independent_in(g, s)
    assert len(s) == max_independent_set_bruteforce(g)
    clique, _ = nx.max_weight_clique(nx.complement(to_nx(g)), weight=None) if g.n else ([], 0)
    assert len(s) == len(clique)


def test_degeneracy_examples():
    # random_tree attaches v to an earlier vertex, so children-first orders
    # leave each vertex with only its parent later
    tree = fam.random_tree(12, random.Random(3))
    assert degeneracy_check(tree, list(reversed(range(12)))) <= 1
    assert degeneracy_check(tree, degeneracy(tree)[1]) <= 1
    # "any order" is too strong: a star with its center first has back-degree 4
    assert degeneracy_check(fam.star(4).graph, [0, 1, 2, 3, 4]) == 4
    k4 = fam.complete(4).graph
    for order in itertools.permutations(range(4)):
        assert degeneracy_check(k4, list(order)) == 3
    with pytest.raises(NotAPermutation):
        degeneracy_check(k4, [0, 1, 2])


def heawood_h_prime():
    lg = fam.heawood()
    inside = [lg[r] for r in fam.HEAWOOD_I]
    h, old = induced_subgraph(square(lg.graph), [v for v in range(14) if v not in inside])
    pos = {v: i for i, v in enumerate(old)}
    return h, [pos[lg[r]] for r in fam.HEAWOOD_ORDER]


def test_heawood_order_is_greedy_order():
    h, order = heawood_h_prime()
    # as listed, each vertex has at most 5 earlier neighbors; the elimination
    # witness (later neighbors) is therefore read along the reverse
    assert degeneracy_check(h, list(reversed(order))) <= 5
    assert degeneracy_check(h, order) == 6


@given(graphs(max_n=10))
def test_degeneracy_peeling(g):
    d, order = degeneracy(g)
    assert degeneracy_check(g, order) == d
    if g.n:
        nxg = to_nx(g)
        assert d == max(nx.core_number(nxg).values())
