"""Exact brute-force verification of box representations, plus the
induced-cycle certificate showing that one dimension is never enough for a
non-K4 instance.

Verification deliberately avoids any spatial index: every vertex pair is
tested for closed-interval overlap on every axis.  The pair loop is
vectorized with numpy but stays pure integer arithmetic on the doubled
endpoints, so the result is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .embed import BoxRepresentation
from .graphs import (
    Classification,
    Graph,
    HalinError,
    HalinInstance,
    classify_instance,
    compose_graph,
)


class VertexSetMismatchError(HalinError):
    """The representation does not cover exactly the graph's vertices."""


class CertificateNotInducedError(HalinError):
    """Internal consistency failure: a certificate candidate has a chord."""


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of checking a representation against a graph.

    ``missing_edges`` are in the graph but not realized by the boxes;
    ``extra_edges`` are realized by the boxes but absent from the graph.
    ``supergraph_x`` / ``supergraph_y`` report whether each single axis on
    its own realizes at least all graph edges (the y check is vacuously
    true for one-dimensional representations).
    """

    supergraph_x: bool
    supergraph_y: bool
    missing_edges: tuple[tuple[str, str], ...]
    extra_edges: tuple[tuple[str, str], ...]

    @property
    def exact_match(self) -> bool:
        return not self.missing_edges and not self.extra_edges


@dataclass(frozen=True)
class LowerBoundCertificate:
    """An induced cycle of length at least 4: no chords, so not an interval graph."""

    cycle_vertices: tuple[str, ...]

    def __len__(self) -> int:
        return len(self.cycle_vertices)


def intersection_graph(rep: BoxRepresentation) -> Graph:
    """Graph with an edge for every pair of boxes overlapping on all axes.

    Closed-interval semantics: boxes touching at a single point are
    adjacent.  All pairs are tested; O(n^2).
    """
    order = sorted(rep.boxes)
    n = len(order)
    if n == 0:
        return Graph(frozenset(), frozenset())
    xlo = np.fromiter((rep.boxes[v].x.lo2 for v in order), dtype=np.int64, count=n)
    xhi = np.fromiter((rep.boxes[v].x.hi2 for v in order), dtype=np.int64, count=n)
    overlap = (xlo[:, None] <= xhi[None, :]) & (xlo[None, :] <= xhi[:, None])
    if rep.dimension == 2:
        ylo = np.fromiter((rep.boxes[v].y.lo2 for v in order), dtype=np.int64, count=n)
        yhi = np.fromiter((rep.boxes[v].y.hi2 for v in order), dtype=np.int64, count=n)
        overlap &= (ylo[:, None] <= yhi[None, :]) & (ylo[None, :] <= yhi[:, None])
    ii, jj = np.nonzero(np.triu(overlap, 1))
    edges = frozenset((order[i], order[j]) for i, j in zip(ii.tolist(), jj.tolist()))
    return Graph(frozenset(order), edges)


def verify_representation(g: Graph, rep: BoxRepresentation) -> VerificationReport:
    """Compare the boxes' intersection graph with ``g``, edge set by edge set."""
    if frozenset(rep.boxes) != g.vertices:
        only_rep = sorted(frozenset(rep.boxes) - g.vertices)
        only_g = sorted(g.vertices - frozenset(rep.boxes))
        raise VertexSetMismatchError(
            f"representation and graph cover different vertices "
            f"(only in representation: {only_rep}; only in graph: {only_g})"
        )
    ig = intersection_graph(rep)
    missing = tuple(sorted(g.edges - ig.edges))
    extra = tuple(sorted(ig.edges - g.edges))
    supergraph_x = all(rep.boxes[u].x.overlaps(rep.boxes[v].x) for u, v in g.edges)
    if rep.dimension == 2:
        supergraph_y = all(rep.boxes[u].y.overlaps(rep.boxes[v].y) for u, v in g.edges)
    else:
        supergraph_y = True
    return VerificationReport(
        supergraph_x=supergraph_x,
        supergraph_y=supergraph_y,
        missing_edges=missing,
        extra_edges=extra,
    )


def is_induced_cycle(g: Graph, seq) -> bool:
    """True iff the sequence is a chordless cycle of ``g``.

    Cyclically consecutive entries must be adjacent and nothing else within
    the sequence may be.  Checked via adjacency sets: each member's
    neighbourhood restricted to the sequence must be exactly its two cyclic
    neighbours.
    """
    seq = tuple(seq)
    n = len(seq)
    if n < 3 or len(set(seq)) != n:
        return False
    if any(v not in g.vertices for v in seq):
        return False
    members = set(seq)
    for i, v in enumerate(seq):
        expected = {seq[i - 1], seq[(i + 1) % n]}
        if (g.adjacency[v] & members) != expected:
            return False
    return True


def _tree_path(inst: HalinInstance, a: str, b: str) -> list[str]:
    """Unique path from a to b in the tree, endpoints included."""
    adj = inst.tree.adjacency
    prev: dict[str, str | None] = {a: None}
    frontier = [a]
    while frontier and b not in prev:
        nxt: list[str] = []
        for v in frontier:
            for w in adj[v]:
                if w not in prev:
                    prev[w] = v
                    nxt.append(w)
        frontier = nxt
    path = [b]
    while prev[path[-1]] is not None:
        path.append(prev[path[-1]])
    path.reverse()
    return path


def lower_bound_certificate(inst: HalinInstance) -> LowerBoundCertificate | None:
    """Induced cycle of length >= 4 certifying that no interval representation exists.

    Returns ``None`` exactly for K4 (which is an interval graph).  For a
    cycle of length at least 4 the leaf cycle itself is chordless.  For a
    triangle cycle, two leaves with different tree parents are joined
    through the tree path between those parents, closing into a chordless
    cycle of length at least 4; the lexicographically smallest qualifying
    leaf pair is used.
    """
    if classify_instance(inst) is Classification.K4:
        return None
    g = compose_graph(inst)
    if len(inst.cycle) > 3:
        seq: tuple[str, ...] = inst.cycle
    else:
        adj = inst.tree.adjacency
        parent_of = {leaf: next(iter(adj[leaf])) for leaf in inst.cycle}
        pairs = sorted(
            (x, y)
            for x, y in combinations(sorted(inst.cycle), 2)
            if parent_of[x] != parent_of[y]
        )
        if not pairs:
            raise CertificateNotInducedError(
                "all leaves of a triangle cycle share one parent in a non-K4 instance"
            )
        x, y = pairs[0]
        path = _tree_path(inst, parent_of[x], parent_of[y])
        seq = (x, *path, y)
    if not is_induced_cycle(g, seq):
        raise CertificateNotInducedError(f"candidate certificate {seq} has a chord")
    return LowerBoundCertificate(tuple(seq))
