import pathlib

import pytest

from halinbox import validate_instance

GOLDEN = pathlib.Path(__file__).parent / "golden"


@pytest.fixture
def h6():
    """Six-vertex instance: two internal vertices, four leaves on the cycle."""
    return validate_instance(
        [("r", "q"), ("r", "a"), ("r", "b"), ("q", "c"), ("q", "d")],
        ["c", "d", "a", "b"],
        strict=True,
    )


@pytest.fixture
def k4():
    """Star tree with three leaves: the complete graph on four vertices."""
    return validate_instance([("x", "a"), ("x", "b"), ("x", "c")], ["a", "b", "c"], strict=True)


@pytest.fixture
def wheel5():
    """Star tree with five leaves: a wheel."""
    return validate_instance(
        [("hub", f"m{i}") for i in range(5)], [f"m{i}" for i in range(5)], strict=True
    )


@pytest.fixture
def triangle_two_parents():
    """Triangle cycle whose leaves hang off two different internal vertices."""
    return validate_instance(
        [("r", "q"), ("q", "a"), ("q", "b"), ("r", "c")], ["a", "b", "c"]
    )
