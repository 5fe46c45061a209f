"""Exact axis-parallel box representations for tree-plus-leaf-cycle graphs.

Build a validated instance with :func:`validate_instance`, turn it into
rectangles with :func:`build_boxes`, check the result exactly with
:func:`verify_representation`, and certify that a single dimension would
not have been enough with :func:`lower_bound_certificate`.
"""

from .embed import (
    Box,
    BoxRepresentation,
    Interval,
    IntervalAssignment,
    LeafOrdering,
    NoSpecialVertexError,
    NotConsecutiveError,
    RootedIndex,
    build_boxes,
    build_x_intervals,
    build_y_intervals,
    check_consecutive,
    find_special_vertex,
    order_leaves,
    root_tree,
    wheel_boxes,
)
from .gen import (
    GenConfig,
    NoViolatingSwapError,
    SplitMix64,
    corpus_configs,
    generate,
    generate_nonplanar_variant,
)
from .graphs import (
    Classification,
    CycleNotOnLeavesError,
    CycleTooShortError,
    Degree2ViolationError,
    DuplicateCycleVertexError,
    Graph,
    HalinError,
    HalinInstance,
    NotATreeError,
    classify_instance,
    compose_graph,
    edge_key,
    validate_instance,
)
from .io import (
    ParseError,
    emit_representation,
    half_str,
    parse_instance,
    parse_representation,
    render_dot,
    render_svg,
    representation_document,
    serialize_instance,
)
from .verify import (
    CertificateNotInducedError,
    LowerBoundCertificate,
    VerificationReport,
    VertexSetMismatchError,
    intersection_graph,
    is_induced_cycle,
    lower_bound_certificate,
    verify_representation,
)

__all__ = [
    "Box",
    "BoxRepresentation",
    "CertificateNotInducedError",
    "Classification",
    "CycleNotOnLeavesError",
    "CycleTooShortError",
    "Degree2ViolationError",
    "DuplicateCycleVertexError",
    "GenConfig",
    "Graph",
    "HalinError",
    "HalinInstance",
    "Interval",
    "IntervalAssignment",
    "LeafOrdering",
    "LowerBoundCertificate",
    "NoSpecialVertexError",
    "NotATreeError",
    "NotConsecutiveError",
    "NoViolatingSwapError",
    "ParseError",
    "RootedIndex",
    "SplitMix64",
    "VerificationReport",
    "VertexSetMismatchError",
    "build_boxes",
    "build_x_intervals",
    "build_y_intervals",
    "check_consecutive",
    "classify_instance",
    "compose_graph",
    "corpus_configs",
    "edge_key",
    "emit_representation",
    "find_special_vertex",
    "generate",
    "generate_nonplanar_variant",
    "half_str",
    "intersection_graph",
    "is_induced_cycle",
    "lower_bound_certificate",
    "order_leaves",
    "parse_instance",
    "parse_representation",
    "render_dot",
    "render_svg",
    "representation_document",
    "root_tree",
    "serialize_instance",
    "validate_instance",
    "verify_representation",
    "wheel_boxes",
]
