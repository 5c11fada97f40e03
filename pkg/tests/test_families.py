import json

import pytest

from packpaint import families as fam
from packpaint.errors import GadgetUnavailable, InvalidCycleLength
from packpaint.graph import ACYCLIC, distance, girth, is_regular


@pytest.mark.parametrize("j,k", [(1, 1), (1, 2), (1, 3), (2, 1), (2, 2), (3, 4)])
def test_F_size_and_labels(j, k):
    lg = fam.family_F(j, k)
    assert lg.graph.n == (k + 1) * ((k + 1) * j + 1) + 1
    assert lg.graph.degree(lg["u"]) == k + 1
    for c in range(k + 1):
        assert f"apex[{c}]" in lg.labels


def test_F_examples():
    f11 = fam.family_F(1, 1).graph
    assert (f11.n, f11.m) == (7, 6) and girth(f11) is ACYCLIC
    assert fam.family_F(2, 1).graph.n == 11
    for k in (1, 2, 3):
        assert girth(fam.family_F(1, k).graph) is ACYCLIC


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_example_22_size_formulas(k):
    f1, f2, f3, f4 = (getattr(fam, f"family_F{i}")(k).graph.n for i in (1, 2, 3, 4))
    assert f1 == 2 + 2 * (2 * k + 1)
    assert f2 == (2 * k + 1) * f1 + 3
    assert f3 == (k + 1) * f2 - k
    assert f4 == (k + 1) * f3


def test_example_22_instances():
    f1 = fam.family_F1(1)
    assert f1.graph.n == 8 and girth(f1.graph) == 6
    assert distance(f1.graph, f1["w"], f1["w'"]) == 3
    f4 = fam.family_F4(1)
    assert f4.graph.n == 106 and girth(f4.graph) == 6
    assert "u0" in f4.labels
    assert girth(fam.family_F4(2).graph) == 6


def test_H11_gadget():
    h = fam.gadget_H11()
    assert h.graph.n == 17
    assert distance(h.graph, h["x"], h["y"]) == 5
    for role in ("c", "v1", "v2"):
        assert role in h.labels
    assert h.graph.has_edge(h["c"], h["v1"]) and h.graph.has_edge(h["c"], h["v2"])


def test_H_families():
    assert girth(fam.family_H21(7).graph) == 7
    assert girth(fam.family_H1(9).graph) == 7
    for bad in (5, 8, 3):
        with pytest.raises(InvalidCycleLength):
            fam.family_H21(bad)


def test_T_families():
    t2 = fam.family_T2(1)
    assert sum(1 for name in t2.groups if name.startswith("T1[")) == 48
    t3 = fam.family_T3(1)
    copies = [name for name in t3.groups if "." not in name]
    assert len(copies) == 3
    us = [t3[f"u[{c}]"] for c in range(3)]
    for a in us:
        for b in us:
            if a != b:
                assert distance(t3.graph, a, b) == 2


def test_t1_asset_validation(tmp_path):
    gadget = fam.load_t1_gadget()
    fam.validate_t1(gadget)
    data = json.loads((fam.resources.files("packpaint") / "assets" / fam.T1_ASSET).read_text())
    data["edges"] = [e for e in data["edges"] if 4 not in e] + [[2, 4]]
    broken = tmp_path / "bad.json"
    broken.write_text(json.dumps(data))
    with pytest.raises(GadgetUnavailable):
        fam.load_t1_gadget(broken)
    with pytest.raises(GadgetUnavailable):
        fam.load_t1_gadget(tmp_path / "missing.json")


def test_named_graphs():
    p = fam.named("petersen").graph
    assert (p.n, p.m) == (10, 15) and is_regular(p, 3) and girth(p) == 5
    h = fam.named("heawood").graph
    assert h.n == 14 and is_regular(h, 3) and girth(h) == 6
    assert fam.named("cycle", 5).graph == fam.cycle(5).graph
    with pytest.raises(ValueError):
        fam.named("cycle")


def test_generators_are_deterministic():
    assert fam.family_F4(1) == fam.family_F4(1)
    assert fam.family_T3(1).groups == fam.family_T3(1).groups


def test_random_cubic(rng):
    for n in (4, 8, 14):
        g = fam.random_cubic(n, rng)
        assert is_regular(g, 3)
