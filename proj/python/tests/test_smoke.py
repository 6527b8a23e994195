import math

import pytest

import graphcore as gc


def test_graph_roundtrip():
    g = gc.Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    assert g.n == 4
    assert g.degree(0) == 2
    assert g.has_edge(0, 3)
    assert not g.has_edge(0, 2)


def test_build_rejects_loops():
    with pytest.raises(gc.GraphError):
        gc.Graph(2, [(0, 0)])


def test_generate_and_count():
    k5 = gc.generate("complete", [5])
    assert gc.spanning_tree_count(k5) == 125  # 5^3


def test_shortest_paths():
    g = gc.Graph(3, [(0, 1), (1, 2)], False, [2.0, 3.0])
    dist, pred = gc.dijkstra(g, 0)
    assert dist == [0.0, 2.0, 5.0]
    assert pred[2] == 1


def test_connectivity():
    cube = gc.generate("hypercube", [3])
    assert gc.vertex_connectivity(cube) == 3
    assert gc.edge_connectivity(cube) == 3


def test_euler():
    c4 = gc.generate("cycle", [4])
    assert gc.eulerian_kind(c4) == "cycle"
    trail = gc.eulerian_cycle(c4)
    assert len(trail) == 4


def test_planarity():
    assert gc.is_planar(gc.generate("grid", [3, 3]))
    assert not gc.is_planar(gc.generate("complete", [5]))


def test_flow():
    value = gc.max_flow_value(4, [(0, 1), (0, 2), (1, 3), (2, 3), (1, 2)],
                              [10, 10, 10, 10, 1], 0, 3)
    assert value == 20


def test_spectrum():
    eigs = gc.spectrum(gc.generate("complete", [5]))
    assert abs(eigs[0]) < 1e-9
    assert abs(eigs[1] - 1.25) < 1e-9


def test_metrics():
    star = gc.Graph(4, [(0, 1), (0, 2), (0, 3)])
    bc = gc.vertex_centrality(star, "betweenness")
    assert bc[0] == 6.0
    assert gc.global_metric(gc.generate("complete", [4]), "density") == 1.0


def test_cli_pipe():
    code, out, err = gc.run_command(["generate", "--family", "hypercube", "--n", "3"])
    assert code == 0, err
    code, out, err = gc.run_command(["analyze", "--metric", "density"], out)
    assert code == 0, err
    assert math.isclose(float(__import__("json").loads(out)["value"]), 12 / 28)
