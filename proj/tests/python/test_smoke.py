import os

import pytest

import hyperzeta as hz

FIXTURES = os.path.join(os.path.dirname(__file__), "..", "fixtures")


def fixture(name):
    return hz.load(os.path.join(FIXTURES, name + ".hg"))


GOLDEN = [1, 0, 0, -6, 0, 0, 9, 0, 0, -4]


def test_parse_and_roundtrip():
    h = hz.parse("vertices 4\nedge 0 1 2\nedge 0 3\nedge 1 3\nedge 2 3\n")
    assert h.n_vertices == 4
    assert h.order_sum() == 9
    assert hz.parse(hz.to_hg(h)) == h
    assert h == fixture("golden4")


def test_validation_and_dual():
    rep = hz.validate(fixture("golden4"))
    assert rep["zeta_ready"]
    assert hz.dual(hz.dual(fixture("golden4"))) == fixture("golden4")
    assert hz.regularity(fixture("k4")) == (3, 2)
    assert hz.regularity(fixture("golden4")) is None


def test_zeta_routes_golden():
    golden4 = fixture("golden4")
    assert hz.zeta_linegraph(golden4) == GOLDEN
    assert hz.zeta_bass(golden4) == GOLDEN
    cv = hz.cross_validate(golden4, seeds=3)
    assert cv["all_ok"]
    assert cv["degree"] == 9
    f1, f2 = hz.zeta_hashimoto(fixture("k4"))
    assert f1 == f2 == hz.zeta_bass(fixture("k4"))
    with pytest.raises(Exception):
        hz.zeta_hashimoto(golden4)


def test_spectral_verdicts():
    rep = hz.ramanujan(fixture("k4"))
    assert rep["verdict"] == "Yes"
    assert rep["q"] == 2
    assert hz.riemann_hypothesis(fixture("k4"))
    assert hz.ramanujan(fixture("nonramanujan14"))["verdict"] == "No"
    assert not hz.riemann_hypothesis(fixture("nonramanujan14"))


def test_distinguish_identical_graphs():
    k4 = fixture("k4")
    assert hz.enumerate_cliques(k4, 3) == [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]]
    collapsed = hz.collapse(k4, [[0, 1, 2]])
    assert len(collapsed.hyperedges) == 4  # one 3-edge plus three uncovered edges
    r = hz.distinguish(k4, k4, k=3, mode="disjoint-pairs")
    assert r["verdict"] == "NotDistinguishedByThisInvariant"
    assert r["cospectral"] and r["same_ihara"]
    assert hz.ihara_zeta(fixture("k3")) == [1, 0, 0, -2, 0, 0, 1]
