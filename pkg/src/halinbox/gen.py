"""Seeded generation of valid (planar) instances for property testing.

A random plane tree is grown by repeatedly attaching children at explicit
positions in each node's left-to-right child list.  Reading the leaves off
in depth-first order and closing them into a cycle keeps the composed
graph planar by construction, so the embedding pipeline never rejects a
generated instance.

Randomness comes from an in-repo SplitMix64 generator rather than the
platform default, so corpora are bit-identical across runs, platforms and
language runtimes.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .embed import (
    NotConsecutiveError,
    check_consecutive,
    find_special_vertex,
    order_leaves,
    root_tree,
)
from .graphs import HalinError, HalinInstance, validate_instance

_MASK64 = (1 << 64) - 1


class NoViolatingSwapError(HalinError):
    """No transposition of two cycle entries breaks consecutiveness."""


class SplitMix64:
    """SplitMix64 pseudo-random generator.

    Recurrence, all arithmetic mod 2**64:

        state  = state + 0x9E3779B97F4A7C15
        z      = state
        z      = (z XOR (z >> 30)) * 0xBF58476D1CE4E5B9
        z      = (z XOR (z >> 27)) * 0x94D049BB133111EB
        output = z XOR (z >> 31)
    """

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def randrange(self, n: int) -> int:
        """Draw from [0, n) by reduction modulo n (bias is negligible for n << 2**64)."""
        if n <= 0:
            raise ValueError("randrange needs a positive bound")
        return self.next_u64() % n

    def coin(self) -> bool:
        return bool(self.next_u64() & 1)


@dataclass(frozen=True)
class GenConfig:
    """Parameters of one generated instance.

    ``num_internal`` is the exact number of internal tree vertices;
    ``max_children`` caps the random number of leaf children attached per
    internal vertex (degree padding may exceed the cap when the minimum
    degree requires it).
    """

    seed: int
    num_internal: int
    max_children: int = 3
    strict_halin: bool = True

    def __post_init__(self) -> None:
        if self.num_internal < 1:
            raise ValueError("num_internal must be at least 1")
        floor = 2 if self.strict_halin else 1
        if self.max_children < floor:
            raise ValueError(f"max_children must be at least {floor} for this mode")


def generate(cfg: GenConfig) -> HalinInstance:
    """Build a seeded random instance; identical configs give identical instances."""
    rng = SplitMix64(cfg.seed)
    root = "i0000"
    children: dict[str, list[str]] = {root: []}
    internals = [root]
    for j in range(1, cfg.num_internal):
        name = f"i{j:04d}"
        parent = internals[rng.randrange(len(internals))]
        children[parent].insert(rng.randrange(len(children[parent]) + 1), name)
        children[name] = []
        internals.append(name)

    min_degree = 3 if cfg.strict_halin else 2
    leaf_count = 0

    def attach_leaf(v: str) -> None:
        nonlocal leaf_count
        leaf = f"l{leaf_count:04d}"
        leaf_count += 1
        children[v].insert(rng.randrange(len(children[v]) + 1), leaf)

    for v in internals:
        degree = len(children[v]) + (0 if v == root else 1)
        wanted = rng.randrange(cfg.max_children + 1)
        for _ in range(max(wanted, min_degree - degree)):
            attach_leaf(v)
    while leaf_count < 3:  # a simple cycle needs three vertices
        attach_leaf(internals[rng.randrange(len(internals))])

    cycle: list[str] = []
    stack = [root]
    while stack:
        v = stack.pop()
        if v in children:
            stack.extend(reversed(children[v]))
        else:
            cycle.append(v)

    tree_edges = [(v, c) for v in internals for c in children[v]]
    return validate_instance(tree_edges, cycle, strict=cfg.strict_halin)


def generate_nonplanar_variant(inst: HalinInstance, seed: int) -> HalinInstance:
    """Same tree, two cycle entries swapped so some descendant block is torn apart.

    Candidate transpositions are tried in a seeded random order until one
    makes the consecutiveness check fail; if none does (possible for tiny
    instances whose blocks are too small to tear), NoViolatingSwapError is
    raised.  Requires a cycle of length at least 4 and at least two
    internal vertices.
    """
    k = len(inst.cycle)
    if k < 4 or len(inst.internal_vertices) < 2:
        raise ValueError("variant needs a cycle of length >= 4 and >= 2 internal vertices")
    rng = SplitMix64(seed)
    pairs = [(i, j) for i in range(k) for j in range(i + 1, k)]
    for idx in range(len(pairs) - 1, 0, -1):  # Fisher-Yates shuffle
        other = rng.randrange(idx + 1)
        pairs[idx], pairs[other] = pairs[other], pairs[idx]

    sv = find_special_vertex(inst)
    rooted = root_tree(inst, sv)  # the tree never changes, so index once
    for i, j in pairs:
        cyc = list(inst.cycle)
        cyc[i], cyc[j] = cyc[j], cyc[i]
        candidate = replace(inst, cycle=tuple(cyc))
        try:
            check_consecutive(rooted, order_leaves(candidate, rooted))
        except NotConsecutiveError:
            return candidate
    raise NoViolatingSwapError("every transposition keeps all descendant blocks contiguous")


def corpus_configs(seed: int, count: int) -> list[GenConfig]:
    """Deterministic schedule of configs ramping the vertex count from 4 to ~500.

    The first config always produces the complete graph on four vertices;
    later ones mix strict and non-strict modes and child caps.  Used by the
    command-line selftest and the acceptance corpus.
    """
    rng = SplitMix64(seed)
    cfgs: list[GenConfig] = []
    for i in range(count):
        child_seed = rng.next_u64()
        if i == 0:
            cfgs.append(GenConfig(seed=child_seed, num_internal=1, max_children=2))
            continue
        target = 4 + (496 * i) // max(count - 1, 1)
        jitter = rng.randrange(3) - 1
        max_children = 2 + rng.randrange(4)
        # expected leaves per internal vertex grow with the child cap
        num_internal = max(1, target * 10 // (20 + 4 * max_children) + jitter)
        cfgs.append(
            GenConfig(
                seed=child_seed,
                num_internal=num_internal,
                max_children=max_children,
                strict_halin=rng.coin(),
            )
        )
    return cfgs
