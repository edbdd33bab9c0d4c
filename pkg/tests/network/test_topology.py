import pytest

from cdadt.network import (
    Topology,
    TopologyError,
    TopologyGenerationError,
    erdos_renyi,
    grid,
    grid_shape,
    ring,
    single,
)


def test_from_edges_normalizes():
    t = Topology.from_edges(3, [(2, 0), (1, 0)])
    assert t.edges == ((0, 1), (0, 2))
    assert list(t.degrees()) == [2, 1, 1]
    assert t.neighbors(0) == [1, 2]


@pytest.mark.parametrize(
    "d,edges",
    [(0, []), (3, [(0, 3)]), (3, [(1, 1)]), (3, [(0, 1), (1, 0)])],
)
def test_from_edges_rejects(d, edges):
    with pytest.raises(TopologyError):
        Topology.from_edges(d, edges)


def test_single():
    t = single()
    assert t.d == 1
    assert t.edges == ()
    assert t.is_connected()


def test_ring():
    t = ring(5)
    assert len(t.edges) == 5
    assert all(deg == 2 for deg in t.degrees())
    assert t.is_connected()
    with pytest.raises(TopologyError):
        ring(2)


def test_grid():
    assert len(grid(2, 3).edges) == 7
    assert len(grid(4, 4).edges) == 24
    assert grid(4, 4).is_connected()
    assert len(grid(1, 2).edges) == 1
    with pytest.raises(TopologyError):
        grid(1, 1)
    with pytest.raises(TopologyError):
        grid(0, 4)


def test_grid_shape():
    assert grid_shape(16) == (4, 4)
    assert grid_shape(32) == (4, 8)
    assert grid_shape(7) == (1, 7)


def test_erdos_renyi():
    a = erdos_renyi(16, 0.5, 7)
    b = erdos_renyi(16, 0.5, 7)
    assert a == b
    assert a.is_connected()
    assert a.kind == "er"
    with pytest.raises(TopologyError):
        erdos_renyi(1, 0.5, 0)
    with pytest.raises(TopologyError):
        erdos_renyi(8, 0.0, 0)


def test_erdos_renyi_gives_up():
    with pytest.raises(TopologyGenerationError):
        erdos_renyi(40, 0.01, 0, max_retries=3)


def test_json_round_trip():
    t = grid(2, 3)
    back = Topology.from_json(t.to_json())
    assert back == t
    assert back.to_dict()["params"] == {"rows": 2, "cols": 3}


def test_from_json_rejects():
    with pytest.raises(TopologyError):
        Topology.from_json("not json")
    with pytest.raises(TopologyError):
        Topology.from_dict({"edges": []})
