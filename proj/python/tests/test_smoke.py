import pytest

import z3flow as z


def complete(n):
    return z.Multigraph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def test_graph_basics():
    g = z.parse_graph("2 2\n0 1\n0 1\n")
    assert g.num_vertices == 2 and g.num_edges == 2
    assert g.multiplicity(0, 1) == 2
    with pytest.raises(z.ModelError):
        z.parse_graph("2 1\n0 0\n")
    assert z.to_graph6(complete(4)) == "C~"


def test_exceptional_graphs():
    for name in ("G3", "G5", "G18"):
        g = z.catalog_get(name)
        assert z.mod3_orientation(g) is None
        assert not z.decide_nz3f(g)
    assert z.catalog_verify("G3")
    assert all(z.catalog_verify_all().values())


def test_orientation_witness():
    k5 = complete(5)
    o = z.mod3_orientation(k5)
    assert o is not None and len(o) == 10
    imb = {v: 0 for v in k5.vertices()}
    for tail, head in o.values():
        imb[tail] += 1
        imb[head] -= 1
    assert all(x % 3 == 0 for x in imb.values())
    assert z.is_z3_connected(k5)
    assert not z.is_z3_connected(z.catalog_get("C", 4))


def test_connectivity():
    assert z.edge_connectivity(complete(5))[0] == 4
    assert z.odd_edge_connectivity(complete(5)) is None
    assert z.independence_number(z.catalog_get("G3"))[0] == 2


def test_reduction():
    g, trace = z.z3_reduce(complete(5))
    assert g.num_vertices == 1
    assert trace["complete"]
    assert z.is_z3_reduced(z.catalog_get("G3"))
    w = z.find_wheel(z.catalog_get("W", 5), "odd")
    assert w is not None and len(w[1]) == 5


def test_verifier():
    row = z.r_row(6)
    assert row["r"] == 11
    assert z.isomorphic(z.parse_graph(row["extremal"][0], "graph6"), z.catalog_get("G3"))
    assert z.family_verdict(z.catalog_get("G3"))["in_F1"]
    report = z.lemma_sweep("hakimi", 50, seed=3, threads=2)
    assert report["pass"] and report["checked"] == 50


def test_errors():
    with pytest.raises(z.LookupError):
        z.catalog_get("nope")
    with pytest.raises(z.CapabilityError):
        z.r_row(9)
