import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from halinbox import (
    Classification,
    GenConfig,
    NotConsecutiveError,
    NoViolatingSwapError,
    SplitMix64,
    build_boxes,
    check_consecutive,
    classify_instance,
    corpus_configs,
    find_special_vertex,
    generate,
    generate_nonplanar_variant,
    order_leaves,
    root_tree,
    validate_instance,
)

configs = st.builds(
    GenConfig,
    seed=st.integers(min_value=0, max_value=2**64 - 1),
    num_internal=st.integers(min_value=1, max_value=30),
    max_children=st.integers(min_value=2, max_value=5),
    strict_halin=st.booleans(),
)


def test_splitmix64_reference_values():
    # first outputs for seed 0 of the standard SplitMix64 recurrence
    rng = SplitMix64(0)
    assert rng.next_u64() == 0xE220A8397B1DCDAF
    assert rng.next_u64() == 0x6E789E6AA1B965F4
    assert rng.next_u64() == 0x06C45D188009454F


def test_splitmix64_randrange_bounds():
    rng = SplitMix64(123)
    draws = [rng.randrange(7) for _ in range(200)]
    assert all(0 <= d < 7 for d in draws)
    assert len(set(draws)) == 7  # all residues show up
    with pytest.raises(ValueError):
        rng.randrange(0)


def test_genconfig_validation():
    with pytest.raises(ValueError):
        GenConfig(seed=1, num_internal=0)
    with pytest.raises(ValueError):
        GenConfig(seed=1, num_internal=2, max_children=1, strict_halin=True)
    GenConfig(seed=1, num_internal=2, max_children=1, strict_halin=False)


def test_single_internal_star_is_k4_or_wheel():
    inst = generate(GenConfig(seed=5, num_internal=1, max_children=2))
    assert classify_instance(inst) is Classification.K4
    inst2 = generate(GenConfig(seed=5, num_internal=1, max_children=5))
    assert classify_instance(inst2) in (Classification.K4, Classification.WHEEL)


def test_two_internal_strict_shape():
    inst = generate(GenConfig(seed=11, num_internal=2, max_children=2))
    assert len(inst.internal_vertices) == 2
    assert all(inst.tree.degree(v) >= 3 for v in inst.internal_vertices)


def test_same_seed_same_instance():
    cfg = GenConfig(seed=99, num_internal=7, max_children=3, strict_halin=False)
    assert generate(cfg) == generate(cfg)


@settings(deadline=None)
@given(configs)
def test_generated_instances_are_valid_and_planar(cfg):
    inst = generate(cfg)
    # validate_instance accepts it again unchanged
    again = validate_instance(sorted(inst.tree_edges), inst.cycle, strict=cfg.strict_halin)
    assert again == inst
    assert len(inst.internal_vertices) == cfg.num_internal
    if cfg.strict_halin:
        assert all(inst.tree.degree(v) != 2 for v in inst.tree.vertices)
    # planar by construction: the consecutiveness gate never fires
    build_boxes(inst)


@settings(deadline=None, max_examples=30)
@given(st.integers(min_value=0, max_value=2**32), st.integers(min_value=2, max_value=60))
def test_corpus_configs_deterministic(seed, count):
    a = corpus_configs(seed, count)
    b = corpus_configs(seed, count)
    assert a == b
    assert len(a) == count
    assert a[0].num_internal == 1  # schedule starts at the smallest instance


def test_nonplanar_variant_h6(h6):
    variant = generate_nonplanar_variant(h6, seed=1)
    assert variant.tree_edges == h6.tree_edges
    assert sorted(variant.cycle) == sorted(h6.cycle)
    assert variant.cycle != h6.cycle
    with pytest.raises(NotConsecutiveError):
        build_boxes(variant)


def test_nonplanar_variant_preconditions(wheel5, k4):
    with pytest.raises(ValueError):
        generate_nonplanar_variant(wheel5, seed=0)  # single internal vertex
    with pytest.raises(ValueError):
        generate_nonplanar_variant(k4, seed=0)  # k = 3


def test_nonplanar_variant_no_violating_swap_possible():
    # two internal vertices but the special block is a single leaf: every
    # descendant set is either a singleton or everything, so no transposition
    # can tear one apart
    inst = validate_instance(
        [("r", "q"), ("q", "a"), ("r", "b"), ("r", "c"), ("r", "d")],
        ["a", "b", "c", "d"],
    )
    with pytest.raises(NoViolatingSwapError):
        generate_nonplanar_variant(inst, seed=3)


@settings(deadline=None, max_examples=40)
@given(
    st.builds(
        GenConfig,
        seed=st.integers(min_value=0, max_value=2**64 - 1),
        num_internal=st.integers(min_value=2, max_value=15),
        max_children=st.integers(min_value=2, max_value=4),
        strict_halin=st.booleans(),
    ),
    st.integers(min_value=0, max_value=2**32),
)
def test_nonplanar_variants_always_fail_consecutiveness(cfg, seed):
    inst = generate(cfg)
    if len(inst.cycle) < 4:
        return
    try:
        variant = generate_nonplanar_variant(inst, seed)
    except NoViolatingSwapError:
        return
    sv = find_special_vertex(variant)
    idx = root_tree(variant, sv)
    with pytest.raises(NotConsecutiveError) as info:
        check_consecutive(idx, order_leaves(variant, idx))
    # the witness triple is genuine: x and y descend from the vertex, z does not
    x, z, y = info.value.witness
    block = idx.desc_leaves[info.value.vertex]
    assert x in block and y in block and z not in block
