"""Brute-force oracles and mutation machinery shared by the test modules.

Everything here is deliberately dumb and independent of the library's own
verification path: plain double loops over pairs, no numpy, no shortcuts.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass

from halinbox import Box, BoxRepresentation, Graph, Interval, SplitMix64


def naive_intersection_edges(rep: BoxRepresentation) -> set[tuple[str, str]]:
    """All overlapping box pairs via an O(n^2) pure-python loop."""
    ids = sorted(rep.boxes)
    edges: set[tuple[str, str]] = set()
    for i, u in enumerate(ids):
        bu = rep.boxes[u]
        for v in ids[i + 1 :]:
            bv = rep.boxes[v]
            ok = bu.x.lo2 <= bv.x.hi2 and bv.x.lo2 <= bu.x.hi2
            if ok and rep.dimension == 2:
                ok = bu.y.lo2 <= bv.y.hi2 and bv.y.lo2 <= bu.y.hi2
            if ok:
                edges.add((u, v))
    return edges


def naive_is_induced_cycle(g: Graph, seq) -> bool:
    """Definition-chasing check: consecutive pairs adjacent, all others not."""
    seq = tuple(seq)
    n = len(seq)
    if n < 3 or len(set(seq)) != n or any(v not in g.vertices for v in seq):
        return False
    for i in range(n):
        for j in range(i + 1, n):
            consecutive = j - i == 1 or (i == 0 and j == n - 1)
            if g.has_edge(seq[i], seq[j]) != consecutive:
                return False
    return True


@dataclass(frozen=True)
class Mutation:
    """One endpoint move across a separating gap, guaranteed to change the
    intersection graph: either closing the single separating axis of a
    non-edge ('adds') or cutting an edge apart on one axis ('removes')."""

    vertex: str
    axis: str  # "x" or "y"
    endpoint: str  # "lo" or "hi"
    new_value2: int
    kind: str  # "adds" or "removes"
    pair: tuple[str, str]


def gap_crossing_mutations(rep: BoxRepresentation, g: Graph) -> list[Mutation]:
    """Every single-endpoint move that provably flips one pair's adjacency."""
    axes = ("x", "y") if rep.dimension == 2 else ("x",)

    def side(box: Box, axis: str) -> Interval:
        return box.x if axis == "x" else box.y

    muts: list[Mutation] = []
    ids = sorted(rep.boxes)
    for i, u in enumerate(ids):
        for v in ids[i + 1 :]:
            bu, bv = rep.boxes[u], rep.boxes[v]
            separated = [a for a in axes if not side(bu, a).overlaps(side(bv, a))]
            if g.has_edge(u, v):
                # cut the pair apart on some axis (keeping lo <= hi valid)
                for a in axes:
                    su, sv = side(bu, a), side(bv, a)
                    if su.lo2 < sv.lo2:
                        muts.append(Mutation(u, a, "hi", sv.lo2 - 1, "removes", (u, v)))
                    if sv.lo2 < su.lo2:
                        muts.append(Mutation(v, a, "hi", su.lo2 - 1, "removes", (u, v)))
                    if su.hi2 > sv.hi2:
                        muts.append(Mutation(u, a, "lo", sv.hi2 + 1, "removes", (u, v)))
                    if sv.hi2 > su.hi2:
                        muts.append(Mutation(v, a, "lo", su.hi2 + 1, "removes", (u, v)))
            elif len(separated) == 1:
                # extend across the single separating gap until the boxes touch
                a = separated[0]
                su, sv = side(bu, a), side(bv, a)
                if su.hi2 < sv.lo2:
                    muts.append(Mutation(u, a, "hi", sv.lo2, "adds", (u, v)))
                    muts.append(Mutation(v, a, "lo", su.hi2, "adds", (u, v)))
                else:
                    muts.append(Mutation(v, a, "hi", su.lo2, "adds", (u, v)))
                    muts.append(Mutation(u, a, "lo", sv.hi2, "adds", (u, v)))
    return muts


def apply_mutation(rep: BoxRepresentation, mut: Mutation) -> BoxRepresentation:
    box = rep.boxes[mut.vertex]
    old = box.x if mut.axis == "x" else box.y
    if mut.endpoint == "lo":
        new = Interval(mut.new_value2, old.hi2)
    else:
        new = Interval(old.lo2, mut.new_value2)
    new_box = Box(new, box.y) if mut.axis == "x" else Box(box.x, new)
    boxes = dict(rep.boxes)
    boxes[mut.vertex] = new_box
    return dataclasses.replace(rep, boxes=boxes)


def pick_mutation(rep: BoxRepresentation, g: Graph, rng: SplitMix64) -> Mutation | None:
    muts = gap_crossing_mutations(rep, g)
    if not muts:
        return None
    return muts[rng.randrange(len(muts))]
