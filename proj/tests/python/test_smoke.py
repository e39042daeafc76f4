"""End-to-end smoke tests for the python bindings."""

import pytest

import rainbowlab as rl


def test_formulas():
    assert rl.turan_edges(10, 2) == 25
    assert rl.moon_ex(57, 0) == 812
    assert rl.moon_ex(60, 1) == 59 + 59 * 59 // 4
    value, proven = rl.ar_formula(57, 0)
    assert (value, proven) == (814, True)
    assert rl.ar_formula(56, 0) == (786, False)
    with pytest.raises(ValueError):
        rl.moon_ex(5, 6)


def test_graph_basics():
    g = rl.Graph(4, [(0, 1), (1, 2), (2, 3)])
    assert g.n == 4 and g.edge_count == 3
    assert g.has_edge(1, 2) and not g.has_edge(0, 3)
    assert g.degree(1) == 2
    assert g.with_edge(0, 3).edge_count == 4

    k5 = rl.Graph.complete(5)
    assert k5.edge_count == 10
    assert rl.Graph.turan(6, 2) == rl.Graph.complete_bipartite(3, 3)
    assert rl.join(rl.Graph.complete(1), rl.Graph.turan(8, 2)).edge_count == rl.moon_ex(9, 1)

    code = rl.graph6_encode(k5)
    assert rl.graph6_decode(code) == k5
    assert rl.are_isomorphic(rl.Graph.turan(5, 2), rl.Graph.complete_bipartite(2, 3))
    with pytest.raises(ValueError):
        rl.graph6_decode("~")


def test_packing():
    k6 = rl.Graph.complete(6)
    assert len(rl.enumerate_triangles(k6)) == 20
    assert len(rl.max_matching(k6)) == 3
    assert len(rl.max_independent_triangles(k6)) == 2
    assert rl.has_k_disjoint_triangles(k6, 2)
    assert not rl.has_k_disjoint_triangles(k6, 3)
    with pytest.raises(rl.ResourceExhausted):
        rl.max_independent_triangles(
            rl.join(rl.Graph.complete(2), rl.Graph.turan(10, 2)), budget=1
        )


def test_coloring_roundtrip():
    c = rl.build_lower_bound_coloring(20, 1)
    assert c.colors == 110
    assert rl.has_rainbow_packing(c, 3) is None

    triples, colors = rl.has_rainbow_packing(c, 2)
    assert len(triples) == 2 and len({c for tri in colors for c in tri}) == 6

    again = rl.EdgeColoring.from_text(c.to_text())
    assert again.values() == c.values()

    merged = rl.merge_color_classes(rl.EdgeColoring.all_distinct(4), 0, 5)
    assert merged.colors == 5


def test_search():
    rep = rl.ar_exact(5, 1)
    assert rep["outcome"] == "exact" and rep["ar"] == 5
    assert rep["witness"].colors == 4
    assert rl.has_rainbow_packing(rep["witness"], 1) is None

    res = rl.exists_avoiding_coloring(5, 5, 1)
    assert res["outcome"] == "absent" and res["witness"] is None

    assert rl.count_canonical_partitions(15, 12) == 106470
    assert rl.count_canonical_partitions(4, 2) == 7


def test_extremal():
    moon = rl.verify_moon(6)
    assert moon["ok"] and moon["graphs_examined"] == 209
    assert [e["n"] for e in moon["extremal"]] == [5, 6]
    assert all(e["matches_reference"] for e in moon["extremal"])

    gamma = rl.verify_gamma(5)
    assert gamma["ok"]

    assert rl.moon_perturbation_failures(9, 1) == []
    g = rl.random_dense_triangle_free(60, 30, seed=7)
    assert len(rl.enumerate_triangles(g)) == 0
    assert rl.lemma_pairs_extract(g, 0)["ok"]
    assert len(rl.generate_graphs(5)) == 34
