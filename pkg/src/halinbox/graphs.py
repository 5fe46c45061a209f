"""Undirected graphs and the validated tree-plus-leaf-cycle input model.

Vertex identifiers are opaque strings.  Wherever a deterministic choice
between several admissible vertices is needed, lexicographic order of the
identifiers breaks the tie, so identical inputs always give identical
outputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Iterable, Sequence


class HalinError(Exception):
    """Base class for every error raised by this package."""


class NotATreeError(HalinError):
    """The tree edge set is empty, disconnected, or contains a cycle."""


class CycleNotOnLeavesError(HalinError):
    """The cycle vertices are not exactly the degree-1 vertices of the tree."""


class CycleTooShortError(HalinError):
    """A simple cycle needs at least three vertices."""


class DuplicateCycleVertexError(HalinError):
    """A vertex occurs more than once in the cycle sequence."""


class Degree2ViolationError(HalinError):
    """Strict mode forbids tree vertices of degree exactly 2."""


def edge_key(u: str, v: str) -> tuple[str, str]:
    """Normalize an undirected edge to a lexicographically ordered pair."""
    if u == v:
        raise ValueError(f"self-loop at {u!r}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Immutable undirected graph: no self-loops, no parallel edges.

    Edges are stored as normalized (smaller, larger) identifier pairs.
    """

    vertices: frozenset[str]
    edges: frozenset[tuple[str, str]]

    def __post_init__(self) -> None:
        for u, v in self.edges:
            if u >= v:
                raise ValueError(f"edge ({u!r}, {v!r}) is not a normalized pair")
            if u not in self.vertices or v not in self.vertices:
                raise ValueError(f"edge ({u!r}, {v!r}) has an endpoint outside the vertex set")

    @classmethod
    def from_edges(
        cls, edges: Iterable[tuple[str, str]], extra_vertices: Iterable[str] = ()
    ) -> "Graph":
        es = frozenset(edge_key(u, v) for u, v in edges)
        vs = frozenset(v for e in es for v in e) | frozenset(extra_vertices)
        return cls(vs, es)

    @cached_property
    def adjacency(self) -> dict[str, frozenset[str]]:
        adj: dict[str, set[str]] = {v: set() for v in self.vertices}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return {v: frozenset(ns) for v, ns in adj.items()}

    def neighbors(self, u: str) -> frozenset[str]:
        return self.adjacency[u]

    def degree(self, u: str) -> int:
        return len(self.adjacency[u])

    def has_edge(self, u: str, v: str) -> bool:
        return u != v and edge_key(u, v) in self.edges

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def is_connected(self) -> bool:
        if not self.vertices:
            return True
        seen: set[str] = set()
        stack = [next(iter(self.vertices))]
        while stack:
            v = stack.pop()
            if v in seen:
                continue
            seen.add(v)
            stack.extend(self.adjacency[v] - seen)
        return len(seen) == len(self.vertices)


class Classification(Enum):
    """Shape of a valid instance, deciding which construction applies."""

    K4 = "k4"
    WHEEL = "wheel"
    GENERAL = "general"


@dataclass(frozen=True)
class HalinInstance:
    """A tree plus a cyclic sequence of its leaves.

    Build instances through :func:`validate_instance`; direct construction
    skips all structural checks.
    """

    tree_edges: frozenset[tuple[str, str]]
    cycle: tuple[str, ...]
    strict_halin: bool = False

    @cached_property
    def tree(self) -> Graph:
        return Graph.from_edges(self.tree_edges)

    @cached_property
    def leaves(self) -> frozenset[str]:
        return frozenset(v for v in self.tree.vertices if self.tree.degree(v) == 1)

    @cached_property
    def internal_vertices(self) -> frozenset[str]:
        return self.tree.vertices - self.leaves

    @property
    def vertices(self) -> frozenset[str]:
        return self.tree.vertices

    @property
    def k(self) -> int:
        return len(self.cycle)


def validate_instance(
    tree_edges: Iterable[Sequence[str]],
    cycle: Sequence[str],
    strict: bool = False,
) -> HalinInstance:
    """Check raw input and return a structurally valid instance.

    The tree edges must form a connected acyclic graph whose degree-1
    vertices are exactly the cycle vertices; the cycle must list at least
    three distinct vertices.  With ``strict`` set, no tree vertex may have
    degree exactly 2.
    """
    cyc = tuple(cycle)
    if len(cyc) < 3:
        raise CycleTooShortError(f"cycle has {len(cyc)} vertices, need at least 3")
    if len(set(cyc)) != len(cyc):
        dup = sorted(v for v in set(cyc) if cyc.count(v) > 1)
        raise DuplicateCycleVertexError(f"repeated cycle vertex: {', '.join(dup)}")

    try:
        edges = frozenset(edge_key(u, v) for u, v in tree_edges)
    except ValueError as exc:
        raise NotATreeError(str(exc)) from exc
    if not edges:
        raise NotATreeError("no tree edges given")
    verts = frozenset(v for e in edges for v in e)
    if len(edges) != len(verts) - 1:
        raise NotATreeError(f"{len(edges)} edges on {len(verts)} vertices cannot form a tree")
    tree = Graph(verts, edges)
    if not tree.is_connected():
        raise NotATreeError("tree edges form a disconnected graph")

    leaves = {v for v in verts if tree.degree(v) == 1}
    cyc_set = set(cyc)
    if cyc_set != leaves:
        not_leaves = sorted(cyc_set - leaves)
        uncovered = sorted(leaves - cyc_set)
        parts = []
        if not_leaves:
            parts.append(f"cycle vertices that are not leaves of the tree: {', '.join(not_leaves)}")
        if uncovered:
            parts.append(f"leaves missing from the cycle: {', '.join(uncovered)}")
        raise CycleNotOnLeavesError("; ".join(parts))

    if strict:
        bad = sorted(v for v in verts if tree.degree(v) == 2)
        if bad:
            raise Degree2ViolationError(f"tree vertices of degree 2: {', '.join(bad)}")

    return HalinInstance(edges, cyc, strict)


def compose_graph(inst: HalinInstance) -> Graph:
    """Union of the tree edges and the consecutive cycle pairs (with wrap-around)."""
    edges = set(inst.tree_edges)
    k = len(inst.cycle)
    for i in range(k):
        edges.add(edge_key(inst.cycle[i], inst.cycle[(i + 1) % k]))
    return Graph(inst.tree.vertices, frozenset(edges))


def classify_instance(inst: HalinInstance) -> Classification:
    """K4 for a star tree with three leaves, WHEEL for a bigger star, GENERAL otherwise."""
    if len(inst.internal_vertices) >= 2:
        return Classification.GENERAL
    return Classification.K4 if len(inst.cycle) == 3 else Classification.WHEEL
