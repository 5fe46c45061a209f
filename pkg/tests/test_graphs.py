import pytest

from halinbox import (
    Classification,
    CycleNotOnLeavesError,
    CycleTooShortError,
    Degree2ViolationError,
    DuplicateCycleVertexError,
    Graph,
    NotATreeError,
    classify_instance,
    compose_graph,
    edge_key,
    validate_instance,
)


def test_edge_key_normalizes_and_rejects_loops():
    assert edge_key("b", "a") == ("a", "b")
    assert edge_key("a", "b") == ("a", "b")
    with pytest.raises(ValueError):
        edge_key("a", "a")


def test_graph_rejects_unknown_endpoints_and_unnormalized_pairs():
    with pytest.raises(ValueError):
        Graph(frozenset({"a"}), frozenset({("a", "b")}))
    with pytest.raises(ValueError):
        Graph(frozenset({"a", "b"}), frozenset({("b", "a")}))


def test_graph_adjacency_and_degree():
    g = Graph.from_edges([("a", "b"), ("b", "c")])
    assert g.neighbors("b") == {"a", "c"}
    assert g.degree("a") == 1
    assert g.has_edge("c", "b")
    assert not g.has_edge("a", "c")
    assert not g.has_edge("a", "a")


def test_validate_h6(h6):
    assert h6.internal_vertices == {"r", "q"}
    assert h6.leaves == {"a", "b", "c", "d"}
    assert h6.k == 4
    # internal vertices have tree-degree 3 on both sides of the strict check
    assert all(h6.tree.degree(v) == 3 for v in h6.internal_vertices)


def test_validate_k4_star(k4):
    assert classify_instance(k4) is Classification.K4
    g = compose_graph(k4)
    assert len(g.vertices) == 4 and g.num_edges == 6  # complete on 4 vertices


def test_validate_two_vertex_tree_is_too_short():
    with pytest.raises(CycleTooShortError):
        validate_instance([("a", "b")], ["a", "b"])


def test_validate_duplicate_cycle_vertex():
    with pytest.raises(DuplicateCycleVertexError):
        validate_instance([("x", "a"), ("x", "b"), ("x", "c")], ["a", "b", "a", "c"])


def test_validate_not_a_tree():
    with pytest.raises(NotATreeError):
        validate_instance(
            [("a", "b"), ("b", "c"), ("c", "a"), ("c", "d")], ["a", "b", "d"]
        )
    with pytest.raises(NotATreeError):  # disconnected
        validate_instance([("a", "b"), ("c", "d")], ["a", "b", "c", "d"])
    with pytest.raises(NotATreeError):  # self-loop in input
        validate_instance([("a", "a"), ("a", "b")], ["a", "b", "c"])
    with pytest.raises(NotATreeError):
        validate_instance([], ["a", "b", "c"])


def test_validate_cycle_not_on_leaves():
    # internal vertex listed on the cycle
    with pytest.raises(CycleNotOnLeavesError):
        validate_instance([("x", "a"), ("x", "b"), ("x", "c")], ["a", "b", "x"])
    # leaf missing from the cycle
    with pytest.raises(CycleNotOnLeavesError):
        validate_instance(
            [("x", "a"), ("x", "b"), ("x", "c"), ("x", "d")], ["a", "b", "c"]
        )
    # cycle vertex that is not in the tree at all
    with pytest.raises(CycleNotOnLeavesError):
        validate_instance([("x", "a"), ("x", "b"), ("x", "c")], ["a", "b", "z"])


def test_validate_strict_degree2():
    edges = [("r", "q"), ("q", "a"), ("q", "b"), ("r", "c")]  # r has degree 2
    validate_instance(edges, ["a", "b", "c"])  # fine without strict
    with pytest.raises(Degree2ViolationError):
        validate_instance(edges, ["a", "b", "c"], strict=True)


def test_compose_h6(h6):
    g = compose_graph(h6)
    assert len(g.vertices) == 6
    expected = {
        ("q", "r"), ("a", "r"), ("b", "r"), ("c", "q"), ("d", "q"),
        ("c", "d"), ("a", "d"), ("a", "b"), ("b", "c"),
    }
    assert g.edges == frozenset(expected)
    # edge count identity: |V(T)| - 1 + k
    assert g.num_edges == len(h6.vertices) - 1 + h6.k
    # deterministic: rebuilding gives the same edge set
    assert compose_graph(h6).edges == g.edges


def test_compose_wheel5(wheel5):
    g = compose_graph(wheel5)
    assert len(g.vertices) == 6 and g.num_edges == 10  # 5 spokes + 5 rim edges


def test_cycle_vertices_have_degree_3(h6, k4, wheel5):
    for inst in (h6, k4, wheel5):
        g = compose_graph(inst)
        assert all(g.degree(v) == 3 for v in inst.cycle)


def test_classify(h6, k4, wheel5):
    assert classify_instance(h6) is Classification.GENERAL
    assert classify_instance(k4) is Classification.K4
    assert classify_instance(wheel5) is Classification.WHEEL
