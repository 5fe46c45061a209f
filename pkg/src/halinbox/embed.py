"""The constructive rectangle-embedding pipeline.

For a general instance (at least two internal tree vertices) the steps are:

1. pick a *special vertex*: an internal vertex with exactly one internal
   neighbour and at least one leaf neighbour,
2. root the tree at that internal neighbour and index depths and
   descendant-leaf sets,
3. rotate the cycle so it starts inside the special vertex's leaf block,
4. check that every vertex's descendant leaves sit in consecutive cycle
   positions (always true when the composed graph is planar; a violation
   witnesses a non-planar decomposition and aborts the construction),
5. assign one interval per vertex along the cycle-position axis and one
   along the depth axis; the per-vertex products of the two intervals are
   the rectangles.

Star trees bypass the pipeline: three leaves give the complete graph on
four vertices (one dimension suffices), more leaves give a wheel with its
own fixed rectangle layout.

All endpoints are half-integers, stored as integers scaled by 2 so every
comparison is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .graphs import (
    Classification,
    HalinError,
    HalinInstance,
    classify_instance,
)


class NoSpecialVertexError(HalinError):
    """Raised when the tree has fewer than two internal vertices."""


class NotConsecutiveError(HalinError):
    """Some vertex's descendant leaves are scattered in the cycle ordering.

    Carries the offending vertex, the special vertex of the attempted
    construction, and a witness triple (x, z, y) of leaves in increasing
    cycle position where x and y are descendants but z is not.
    """

    def __init__(self, vertex: str, witness: tuple[str, str, str], special_vertex: str):
        self.vertex = vertex
        self.witness = witness
        self.special_vertex = special_vertex
        x, z, y = witness
        super().__init__(
            f"leaf descendants of {vertex!r} are not consecutive in the cycle ordering "
            f"(special vertex {special_vertex!r}; witness {x!r} < {z!r} < {y!r}, "
            f"{z!r} is not a descendant)"
        )


@dataclass(frozen=True, order=True)
class Interval:
    """Closed interval with half-integer endpoints, stored doubled.

    ``Interval(1, 3)`` is the interval [0.5, 1.5].  Degenerate point
    intervals (lo2 == hi2) are allowed.
    """

    lo2: int
    hi2: int

    def __post_init__(self) -> None:
        if self.lo2 > self.hi2:
            raise ValueError(f"empty interval: lo2={self.lo2} > hi2={self.hi2}")

    @classmethod
    def of(cls, lo: int, hi: int) -> "Interval":
        """Interval with whole endpoints, given unscaled."""
        return cls(2 * lo, 2 * hi)

    def overlaps(self, other: "Interval") -> bool:
        """Closed-interval overlap: touching at a single point counts."""
        return self.lo2 <= other.hi2 and other.lo2 <= self.hi2

    def contains(self, other: "Interval") -> bool:
        return self.lo2 <= other.lo2 and other.hi2 <= self.hi2


@dataclass(frozen=True)
class IntervalAssignment:
    """One closed interval per vertex along a single axis."""

    intervals: Mapping[str, Interval]

    def __getitem__(self, vertex: str) -> Interval:
        return self.intervals[vertex]

    def __iter__(self):
        return iter(self.intervals)

    def __len__(self) -> int:
        return len(self.intervals)


@dataclass(frozen=True)
class Box:
    """Axis-parallel box: an x interval and, in two dimensions, a y interval."""

    x: Interval
    y: Interval | None = None

    def overlaps(self, other: "Box") -> bool:
        if (self.y is None) != (other.y is None):
            raise ValueError("cannot intersect boxes of different dimensions")
        if not self.x.overlaps(other.x):
            return False
        return self.y is None or self.y.overlaps(other.y)


@dataclass(frozen=True)
class BoxRepresentation:
    """Vertex-to-box mapping plus how it was constructed.

    ``special_vertex``, ``root`` and ``leaf_order`` record the pipeline's
    tie-break choices so any output can be reproduced and audited; they are
    ``None`` where the construction has no such choice (wheel, K4).
    """

    boxes: Mapping[str, Box]
    dimension: int
    construction_kind: Classification
    special_vertex: str | None = None
    root: str | None = None
    leaf_order: tuple[str, ...] | None = None

    def __post_init__(self) -> None:
        if self.dimension not in (1, 2):
            raise ValueError(f"dimension must be 1 or 2, got {self.dimension}")
        if (self.dimension == 1) != (self.construction_kind is Classification.K4):
            raise ValueError("dimension 1 is used exactly for the K4 construction")
        for v, b in self.boxes.items():
            if (b.y is None) and self.dimension == 2:
                raise ValueError(f"box of {v!r} lacks a y interval in a 2-dimensional representation")
            if (b.y is not None) and self.dimension == 1:
                raise ValueError(f"box of {v!r} has a y interval in a 1-dimensional representation")


@dataclass(frozen=True)
class RootedIndex:
    """Tree metrics after rooting at the special vertex's internal neighbour.

    ``parent`` omits the root; ``depth`` covers every vertex; ``max_depth``
    is the depth of the deepest vertex; ``desc_leaves[u]`` is the set of
    leaves in the subtree under ``u`` (a leaf is its own descendant).
    """

    root: str
    special_vertex: str
    parent: Mapping[str, str]
    depth: Mapping[str, int]
    max_depth: int
    desc_leaves: Mapping[str, frozenset[str]]


@dataclass(frozen=True)
class LeafOrdering:
    """Rotation of the input cycle starting inside the special leaf block.

    The first entry is a descendant leaf of the special vertex and the last
    entry is not; ``index`` maps each leaf to its position.
    """

    order: tuple[str, ...]
    index: Mapping[str, int]

    def __len__(self) -> int:
        return len(self.order)


def find_special_vertex(inst: HalinInstance) -> str:
    """Internal vertex with exactly one internal neighbour and a leaf neighbour.

    At least one exists whenever the tree has two or more internal vertices
    (the internal vertices induce a subtree, which has a degree-1 vertex).
    Ties are broken lexicographically.
    """
    internal = inst.internal_vertices
    if len(internal) < 2:
        raise NoSpecialVertexError(
            "tree has a single internal vertex; use the wheel or K4 construction"
        )
    adj = inst.tree.adjacency
    for u in sorted(internal):
        internal_nbrs = adj[u] & internal
        leaf_nbrs = len(adj[u]) - len(internal_nbrs)
        if len(internal_nbrs) == 1 and leaf_nbrs >= 1:
            return u
    raise NoSpecialVertexError("no qualifying internal vertex found")


def root_tree(inst: HalinInstance, special_vertex: str) -> RootedIndex:
    """Root at the special vertex's unique internal neighbour and index the tree."""
    adj = inst.tree.adjacency
    internal_nbrs = sorted(adj[special_vertex] & inst.internal_vertices)
    if len(internal_nbrs) != 1:
        raise ValueError(
            f"{special_vertex!r} has {len(internal_nbrs)} internal neighbours, expected exactly 1"
        )
    root = internal_nbrs[0]

    parent: dict[str, str] = {}
    depth: dict[str, int] = {root: 0}
    children: dict[str, list[str]] = {root: []}
    bfs = [root]
    head = 0
    while head < len(bfs):
        v = bfs[head]
        head += 1
        for w in sorted(adj[v]):
            if w in depth:
                continue
            parent[w] = v
            depth[w] = depth[v] + 1
            children[v].append(w)
            children[w] = []
            bfs.append(w)

    leaves = inst.leaves
    desc: dict[str, frozenset[str]] = {}
    for v in reversed(bfs):  # children are indexed before their parent
        if v in leaves:
            desc[v] = frozenset((v,))
        else:
            acc: set[str] = set()
            for c in children[v]:
                acc |= desc[c]
            desc[v] = frozenset(acc)

    return RootedIndex(
        root=root,
        special_vertex=special_vertex,
        parent=parent,
        depth=depth,
        max_depth=max(depth.values()),
        desc_leaves=desc,
    )


def order_leaves(inst: HalinInstance, idx: RootedIndex) -> LeafOrdering:
    """Rotate the cycle to a position whose predecessor leaves the special block.

    Scans the given cycle sequence for the first position that is a
    descendant leaf of the special vertex while its cyclic predecessor is
    not, then starts the ordering there.  The scan is invariant under
    rotation of the input sequence.
    """
    block = idx.desc_leaves[idx.special_vertex]
    cycle = inst.cycle
    k = len(cycle)
    if not block or len(block) >= k:
        raise ValueError("special vertex's leaf block must be a nonempty proper subset of the leaves")
    for i in range(k):
        if cycle[i] in block and cycle[(i - 1) % k] not in block:
            order = tuple(cycle[(i + j) % k] for j in range(k))
            return LeafOrdering(order=order, index={v: j for j, v in enumerate(order)})
    raise ValueError("no rotation boundary found")  # unreachable for a proper subset


def check_consecutive(idx: RootedIndex, ordering: LeafOrdering) -> dict[str, tuple[int, int]]:
    """Positions of each vertex's descendant leaves, refused unless contiguous.

    Returns the (min, max) cycle position per vertex.  A gap inside some
    vertex's block means the tree-plus-cycle decomposition has no planar
    embedding, and the construction cannot proceed.
    """
    ranges: dict[str, tuple[int, int]] = {}
    for u in sorted(idx.depth):
        positions = sorted(ordering.index[v] for v in idx.desc_leaves[u])
        lo, hi = positions[0], positions[-1]
        if hi - lo + 1 != len(positions):
            present = set(positions)
            gap = next(p for p in range(lo, hi) if p not in present)
            after = next(p for p in positions if p > gap)
            witness = (ordering.order[lo], ordering.order[gap], ordering.order[after])
            raise NotConsecutiveError(u, witness, idx.special_vertex)
        ranges[u] = (lo, hi)
    return ranges


def build_x_intervals(
    idx: RootedIndex,
    ordering: LeafOrdering,
    ranges: Mapping[str, tuple[int, int]],
) -> IntervalAssignment:
    """Intervals along the cycle-position axis.

    The first leaf of the ordering spans the whole range [0, k] and so
    meets everything on this axis; every other leaf gets a unit interval
    centred on its position; an internal vertex spans exactly its
    descendant block.
    """
    k = len(ordering)
    first = ordering.order[0]
    out: dict[str, Interval] = {first: Interval.of(0, k)}
    for u in ordering.order[1:]:
        c = ordering.index[u]
        out[u] = Interval(2 * c - 1, 2 * c + 1)
    for u in idx.depth:
        if u not in ordering.index:
            lo, hi = ranges[u]
            out[u] = Interval.of(lo, hi)
    return IntervalAssignment(out)


def build_y_intervals(idx: RootedIndex, ordering: LeafOrdering) -> IntervalAssignment:
    """Intervals along the depth axis.

    Internal vertices get [depth, depth+1] so only tree parent/child pairs
    meet; the special vertex instead stretches to h+2 to reach the first
    leaf of the ordering, which sits as the single point h+2.  The two
    cycle neighbours of that first leaf also stretch to h+2; all remaining
    leaves stop at h+1, where consecutive leaves meet.
    """
    h = idx.max_depth
    top = h + 2
    sv = idx.special_vertex
    first = ordering.order[0]
    second = ordering.order[1]
    last = ordering.order[-1]
    out: dict[str, Interval] = {}
    for u, d in idx.depth.items():
        if u == sv:
            out[u] = Interval.of(d, top)
        elif u not in ordering.index:  # internal, not special
            out[u] = Interval.of(d, d + 1)
        elif u == first:
            out[u] = Interval.of(top, top)
        elif u == second or u == last:
            out[u] = Interval.of(d, top)
        else:
            out[u] = Interval.of(d, h + 1)
    return IntervalAssignment(out)


def wheel_boxes(inst: HalinInstance) -> BoxRepresentation:
    """Rectangles for a star tree with at least four leaves (a wheel).

    The hub spans the whole frame.  Rim vertices, taken in cycle order:
    the first spans the full x range at height 2, its two cycle neighbours
    occupy y [1, 2], everyone else y [0, 1]; x unit intervals around the
    rim positions make exactly the consecutive rim pairs meet.
    """
    if classify_instance(inst) is not Classification.WHEEL:
        raise ValueError("wheel construction requires a star tree with at least 4 leaves")
    hub = next(iter(inst.internal_vertices))
    rim = inst.cycle
    k = len(rim)
    boxes: dict[str, Box] = {hub: Box(Interval.of(0, k), Interval.of(0, 2))}
    for j, m in enumerate(rim):
        if j == 0:
            boxes[m] = Box(Interval.of(0, k), Interval.of(2, 2))
        else:
            x = Interval(2 * j - 1, 2 * j + 1)
            y = Interval.of(1, 2) if j in (1, k - 1) else Interval.of(0, 1)
            boxes[m] = Box(x, y)
    return BoxRepresentation(
        boxes=boxes,
        dimension=2,
        construction_kind=Classification.WHEEL,
        root=hub,
        leaf_order=rim,
    )


def build_boxes(inst: HalinInstance) -> BoxRepresentation:
    """Dispatch on the instance shape and build its box representation.

    K4 gets the one-dimensional all-[0,1] representation, wheels their
    fixed layout, and everything else the full pipeline.  Raises
    :class:`NotConsecutiveError` when the decomposition is not planar.
    """
    kind = classify_instance(inst)
    if kind is Classification.K4:
        unit = Interval.of(0, 1)
        return BoxRepresentation(
            boxes={v: Box(unit) for v in inst.vertices},
            dimension=1,
            construction_kind=kind,
        )
    if kind is Classification.WHEEL:
        return wheel_boxes(inst)

    sv = find_special_vertex(inst)
    idx = root_tree(inst, sv)
    ordering = order_leaves(inst, idx)
    ranges = check_consecutive(idx, ordering)
    xs = build_x_intervals(idx, ordering, ranges)
    ys = build_y_intervals(idx, ordering)
    return BoxRepresentation(
        boxes={v: Box(xs[v], ys[v]) for v in inst.vertices},
        dimension=2,
        construction_kind=kind,
        special_vertex=sv,
        root=idx.root,
        leaf_order=ordering.order,
    )
