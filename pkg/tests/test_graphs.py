import pytest

from hullcert import graphs


def test_wheel_structure():
    g = graphs.wheel(4)
    assert g.n == 5
    assert len(g.edge_list()) == 8  # 4 rim + 4 spokes
    hub = 5
    assert all(g.has_edge(i, hub) for i in range(1, 5))
    assert g.has_edge(1, 2) and g.has_edge(4, 1)
    assert not g.has_edge(1, 3)
    assert graphs.rim_successor(g, 4) == 1
    assert graphs.rim_predecessor(g, 1) == 4
    assert g.family == "wheel"


def test_complete_split_structure():
    g = graphs.complete_split(4, 5)
    assert g.n == 9
    assert len(g.edge_list()) == 6 + 20  # C(4,2) clique + 4*5 join
    assert g.has_edge(1, 2) and g.has_edge(4, 9)
    assert not g.has_edge(5, 6)  # independent part
    assert g.family == "complete_split"


def test_triangles():
    g = graphs.wheel(4)
    tris = graphs.triangles(g)
    assert len(tris) == 4
    assert all(t[2] == 5 for t in tris)  # every triangle uses the hub
    assert graphs.triangles(graphs.complete_split(1, 3)) == []


def test_neighbors():
    g = graphs.wheel(4)
    assert g.neighbors(1) == {2, 4, 5}
    assert g.neighbors(5) == {1, 2, 3, 4}


def test_is_bipartite():
    star = graphs.complete_split(1, 3)
    assert graphs.is_bipartite(star).is_bipartite
    tri = graphs.generic(3, [(1, 2), (2, 3), (1, 3)])
    res_tri = graphs.is_bipartite(tri)
    assert not res_tri.is_bipartite
    assert res_tri.odd_cycle and len(res_tri.odd_cycle) % 2 == 1
    even_cycle = graphs.generic(4, [(1, 2), (2, 3), (3, 4), (1, 4)])
    res = graphs.is_bipartite(even_cycle)
    assert res.is_bipartite
    # the coloring must be proper
    for i, j in even_cycle.edge_list():
        assert res.coloring[i] != res.coloring[j]


def test_pairs_helpers():
    assert graphs.all_pairs(3) == [(1, 2), (1, 3), (2, 3)]
    assert graphs.pair_set([3, 1, 5]) == [(1, 3), (1, 5), (3, 5)]


def test_json_round_trip():
    for g in (graphs.wheel(6), graphs.complete_split(3, 2),
              graphs.generic(4, [(1, 3)])):
        assert graphs.Graph.from_json(g.to_json()) == g


def test_validation():
    with pytest.raises(ValueError):
        graphs.wheel(2)
    with pytest.raises(ValueError):
        graphs.generic(2, [(1, 3)])
