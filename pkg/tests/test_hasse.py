import json

import pytest

from degenlab.hasse import HasseDiagram


def divides(a, b):
    return b % a == 0


def test_from_order_is_transitive_reduction():
    nodes = [1, 2, 3, 4, 6, 12]
    h = HasseDiagram.from_order(nodes, lambda u, v: divides(v, u))
    got = {(nodes[a], nodes[b]) for a, b in h.edges}
    assert got == {(12, 6), (12, 4), (6, 3), (6, 2), (4, 2), (3, 1), (2, 1)}


def test_cycle_rejected():
    with pytest.raises(ValueError):
        HasseDiagram.from_order([1, 2], lambda u, v: True)


def test_components_and_dot():
    h = HasseDiagram(["a", "b", "c", "d"], [(0, 1), (2, 3)], ["A", "B", "C", "D"])
    assert h.components() == [[0, 1], [2, 3]]
    dot = h.to_dot()
    assert dot.startswith("digraph")
    assert dot.count("subgraph") == 2
    assert 'n0 [label="A"]' in dot and "n0 -> n1;" in dot


def test_json_shape():
    h = HasseDiagram(["a", "b"], [(0, 1)])
    data = json.loads(h.dumps())
    assert data == {"nodes": ["a", "b"], "edges": [[0, 1]], "labels": ["a", "b"]}


def test_label_count_checked():
    with pytest.raises(ValueError):
        HasseDiagram(["a"], [], ["x", "y"])
