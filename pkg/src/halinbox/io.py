"""File formats: JSON instance and representation documents, SVG and DOT output.

All endpoint values are half-integers and serialize as exact decimals
(whole values without a fractional part, halves with a ``.5``), never as
noisy binary floats.  Emitters order vertices lexicographically, so output
is byte-stable across runs.
"""

from __future__ import annotations

import json
import math
from typing import Any

from .embed import Box, BoxRepresentation, Interval
from .graphs import Classification, Graph, HalinError, HalinInstance, validate_instance


class ParseError(HalinError):
    """A document is not valid JSON or not shaped like the expected schema."""


def half_str(v2: int) -> str:
    """Exact decimal text for a doubled endpoint: 7 -> '3.5', 8 -> '4', -1 -> '-0.5'."""
    if v2 % 2 == 0:
        return str(v2 // 2)
    sign = "-" if v2 < 0 else ""
    return f"{sign}{abs(v2) // 2}.5"


def _half_json(v2: int) -> int | float:
    """JSON value for a doubled endpoint; halves become exact binary floats."""
    return v2 // 2 if v2 % 2 == 0 else v2 / 2


def _to_doubled(value: Any, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ParseError(f"{where}: endpoint must be a number, got {value!r}")
    if isinstance(value, float):
        if not math.isfinite(value):
            raise ParseError(f"{where}: endpoint must be finite")
        doubled = value * 2
        if doubled != int(doubled):
            raise ParseError(f"{where}: endpoint {value!r} is not a half-integer")
        return int(doubled)
    return 2 * value


def _load_object(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    if not isinstance(doc, dict):
        raise ParseError("top-level value must be an object")
    return doc


def _require(doc: dict, key: str, kind: type, where: str = "document") -> Any:
    if key not in doc:
        raise ParseError(f"{where} is missing the {key!r} key")
    value = doc[key]
    if not isinstance(value, kind) or isinstance(value, bool) and kind is not bool:
        raise ParseError(f"{key!r} must be of type {kind.__name__}")
    return value


# ---------------------------------------------------------------------------
# instance documents


def parse_instance(text: str) -> HalinInstance:
    """Read an instance document and run the full structural validation."""
    doc = _load_object(text)
    raw_edges = _require(doc, "tree_edges", list)
    raw_cycle = _require(doc, "cycle", list)
    strict = doc.get("strict", False)
    if not isinstance(strict, bool):
        raise ParseError("'strict' must be a boolean")
    edges: list[tuple[str, str]] = []
    for i, pair in enumerate(raw_edges):
        if (
            not isinstance(pair, list)
            or len(pair) != 2
            or not all(isinstance(x, str) for x in pair)
        ):
            raise ParseError(f"tree_edges[{i}] must be a pair of vertex id strings")
        edges.append((pair[0], pair[1]))
    for i, v in enumerate(raw_cycle):
        if not isinstance(v, str):
            raise ParseError(f"cycle[{i}] must be a vertex id string")
    return validate_instance(edges, raw_cycle, strict=strict)


def serialize_instance(inst: HalinInstance) -> str:
    """Canonical instance document: sorted edge pairs, cycle as given."""
    lines = ["{", '  "tree_edges": [']
    pairs = sorted(inst.tree_edges)
    for i, (u, v) in enumerate(pairs):
        comma = "," if i < len(pairs) - 1 else ""
        lines.append(f"    {json.dumps([u, v])}{comma}")
    lines.append("  ],")
    lines.append(f'  "cycle": {json.dumps(list(inst.cycle))},')
    lines.append(f'  "strict": {json.dumps(inst.strict_halin)}')
    lines.append("}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# representation documents


def representation_document(rep: BoxRepresentation) -> str:
    """Structured JSON text for a representation, one box record per line."""
    lines = ["{"]
    lines.append(f'  "dimension": {rep.dimension},')
    lines.append(f'  "construction_kind": {json.dumps(rep.construction_kind.value)},')
    prov: list[str] = []
    if rep.special_vertex is not None:
        prov.append(f'    "special_vertex": {json.dumps(rep.special_vertex)}')
    if rep.root is not None:
        prov.append(f'    "root": {json.dumps(rep.root)}')
    if rep.leaf_order is not None:
        prov.append(f'    "leaf_order": {json.dumps(list(rep.leaf_order))}')
    if prov:
        lines.append('  "provenance": {')
        lines.append(",\n".join(prov))
        lines.append("  },")
    else:
        lines.append('  "provenance": {},')
    lines.append('  "boxes": [')
    ids = sorted(rep.boxes)
    for i, v in enumerate(ids):
        box = rep.boxes[v]
        record: dict[str, Any] = {
            "id": v,
            "x_lo": _half_json(box.x.lo2),
            "x_hi": _half_json(box.x.hi2),
        }
        if box.y is not None:
            record["y_lo"] = _half_json(box.y.lo2)
            record["y_hi"] = _half_json(box.y.hi2)
        comma = "," if i < len(ids) - 1 else ""
        lines.append(f"    {json.dumps(record)}{comma}")
    lines.append("  ]")
    lines.append("}")
    return "\n".join(lines) + "\n"


def parse_representation(text: str) -> BoxRepresentation:
    """Read a representation document back into boxes with exact endpoints."""
    doc = _load_object(text)
    dimension = _require(doc, "dimension", int)
    if dimension not in (1, 2):
        raise ParseError(f"dimension must be 1 or 2, got {dimension}")
    kind_text = _require(doc, "construction_kind", str)
    try:
        kind = Classification(kind_text)
    except ValueError as exc:
        raise ParseError(f"unknown construction_kind {kind_text!r}") from exc

    prov = doc.get("provenance", {})
    if not isinstance(prov, dict):
        raise ParseError("'provenance' must be an object")
    special = prov.get("special_vertex")
    root = prov.get("root")
    leaf_order = prov.get("leaf_order")
    for name, value in (("special_vertex", special), ("root", root)):
        if value is not None and not isinstance(value, str):
            raise ParseError(f"provenance {name!r} must be a string")
    if leaf_order is not None:
        if not isinstance(leaf_order, list) or not all(isinstance(v, str) for v in leaf_order):
            raise ParseError("provenance 'leaf_order' must be a list of vertex ids")
        leaf_order = tuple(leaf_order)

    raw_boxes = _require(doc, "boxes", list)
    boxes: dict[str, Box] = {}
    for i, record in enumerate(raw_boxes):
        where = f"boxes[{i}]"
        if not isinstance(record, dict):
            raise ParseError(f"{where} must be an object")
        vid = record.get("id")
        if not isinstance(vid, str):
            raise ParseError(f"{where}: 'id' must be a vertex id string")
        if vid in boxes:
            raise ParseError(f"{where}: duplicate vertex id {vid!r}")
        try:
            x = Interval(_to_doubled(record["x_lo"], where), _to_doubled(record["x_hi"], where))
            if dimension == 2:
                y = Interval(_to_doubled(record["y_lo"], where), _to_doubled(record["y_hi"], where))
            else:
                y = None
        except KeyError as exc:
            raise ParseError(f"{where}: missing endpoint key {exc.args[0]!r}") from exc
        except ValueError as exc:
            raise ParseError(f"{where}: {exc}") from exc
        boxes[vid] = Box(x, y)
    try:
        return BoxRepresentation(
            boxes=boxes,
            dimension=dimension,
            construction_kind=kind,
            special_vertex=special,
            root=root,
            leaf_order=leaf_order,
        )
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


# ---------------------------------------------------------------------------
# SVG and DOT


_PALETTE = ("#4878cf", "#e8543f", "#56a868", "#b59e3c", "#8961b3", "#50a8c0", "#c678a0")
_PX_PER_QUARTER = 15  # 60 px per world unit; quarter units keep everything integral


def render_svg(rep: BoxRepresentation) -> str:
    """SVG drawing: one labelled rectangle per vertex.

    The y axis is flipped for the screen: a world point (x, y) maps to
    pixel ((x - x0) * 60, (y1 - y) * 60), where [x0, x1] x [y0, y1] is the
    drawn window, so larger y is higher in the image.  The window pads the
    bounding box of the representation by 5% per side (at least a quarter
    unit).  One-dimensional representations draw each interval as a bar of
    height 0.25 on its own lane.  Degenerate sides are widened by one pixel
    each way so point and segment boxes stay visible.
    """
    ids = sorted(rep.boxes)
    quads: list[tuple[int, int, int, int]] = []  # endpoints in quarter units
    for lane, v in enumerate(ids):
        box = rep.boxes[v]
        if box.y is not None:
            quads.append((2 * box.x.lo2, 2 * box.x.hi2, 2 * box.y.lo2, 2 * box.y.hi2))
        else:
            quads.append((2 * box.x.lo2, 2 * box.x.hi2, 2 * lane, 2 * lane + 1))

    min_x = min(q[0] for q in quads)
    max_x = max(q[1] for q in quads)
    min_y = min(q[2] for q in quads)
    max_y = max(q[3] for q in quads)
    pad_x = max(1, ((max_x - min_x) * 5 + 99) // 100)
    pad_y = max(1, ((max_y - min_y) * 5 + 99) // 100)
    x0, x1 = min_x - pad_x, max_x + pad_x
    y0, y1 = min_y - pad_y, max_y + pad_y
    width = (x1 - x0) * _PX_PER_QUARTER
    height = (y1 - y0) * _PX_PER_QUARTER

    def sx(q: int) -> int:
        return (q - x0) * _PX_PER_QUARTER

    def sy(q: int) -> int:
        return (y1 - q) * _PX_PER_QUARTER

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'  <rect x="0" y="0" width="{width}" height="{height}" fill="white"/>',
    ]
    for i, v in enumerate(ids):
        qx0, qx1, qy0, qy1 = quads[i]
        px, py = sx(qx0), sy(qy1)
        w, h = (qx1 - qx0) * _PX_PER_QUARTER, (qy1 - qy0) * _PX_PER_QUARTER
        if w == 0:
            px, w = px - 1, 2
        if h == 0:
            py, h = py - 1, 2
        color = _PALETTE[i % len(_PALETTE)]
        box = rep.boxes[v]
        title = f"{v}: x=[{half_str(box.x.lo2)}, {half_str(box.x.hi2)}]"
        if box.y is not None:
            title += f" y=[{half_str(box.y.lo2)}, {half_str(box.y.hi2)}]"
        lines.append(
            f'  <rect x="{px}" y="{py}" width="{w}" height="{h}" fill="{color}" '
            f'fill-opacity="0.35" stroke="{color}" stroke-width="2">'
            f"<title>{title}</title></rect>"
        )
        cx2 = (qx0 + qx1) * _PX_PER_QUARTER  # doubled pixel coordinates of the centre
        cy2 = sy(qy0) + sy(qy1)
        lines.append(
            f'  <text x="{half_str(cx2)}" y="{half_str(cy2)}" font-family="sans-serif" '
            f'font-size="14" text-anchor="middle" dominant-baseline="middle">{v}</text>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def render_dot(g: Graph) -> str:
    """DOT text of a graph for external viewers."""
    lines = ["graph G {", "  node [shape=circle];"]
    for v in sorted(g.vertices):
        lines.append(f"  {json.dumps(v)};")
    for u, v in sorted(g.edges):
        lines.append(f"  {json.dumps(u)} -- {json.dumps(v)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def emit_representation(
    rep: BoxRepresentation, fmt: str = "structured", graph: Graph | None = None
) -> str:
    """Dispatch on output format; the empty string defaults to structured."""
    if fmt in ("", "structured"):
        return representation_document(rep)
    if fmt == "svg":
        return render_svg(rep)
    if fmt == "dot":
        if graph is None:
            raise ValueError("dot output needs the composed graph")
        return render_dot(graph)
    raise ValueError(f"unknown output format {fmt!r} (expected structured, svg or dot)")
