"""Command-line interface.

Subcommands: validate, embed, verify, certify, generate, render, selftest.

Exit codes:
  0  success (for ``verify``: exact match; for ``selftest``: all passed)
  1  usage or I/O error
  2  invalid instance or representation document
  3  construction aborted: a descendant-leaf block is not consecutive
  4  verification mismatch

Diagnostics go to stderr; stdout carries only results.  The environment
variable HALINBOX_SEED, when set, overrides ``--seed`` for the generate
and selftest subcommands.
"""

from __future__ import annotations

import argparse
import os
import sys

from .embed import NotConsecutiveError, build_boxes
from .gen import GenConfig, corpus_configs, generate
from .graphs import HalinError, classify_instance, compose_graph
from .io import (
    ParseError,
    emit_representation,
    parse_instance,
    parse_representation,
    render_svg,
    serialize_instance,
)
from .verify import (
    VertexSetMismatchError,
    lower_bound_certificate,
    verify_representation,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INVALID = 2
EXIT_NOT_CONSECUTIVE = 3
EXIT_MISMATCH = 4


def _read_text(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _load_instance(path: str):
    return parse_instance(_read_text(path))


def _effective_seed(seed: int) -> int:
    env = os.environ.get("HALINBOX_SEED")
    if env is None or env == "":
        return seed
    try:
        return int(env)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"HALINBOX_SEED must be an integer, got {env!r}") from exc


def _cmd_validate(args) -> int:
    inst = _load_instance(args.file)
    kind = classify_instance(inst)
    g = compose_graph(inst)
    print(
        f"valid {kind.value} instance: {len(g.vertices)} vertices, "
        f"{g.num_edges} edges, cycle length {len(inst.cycle)}"
    )
    return EXIT_OK


def _cmd_embed(args) -> int:
    inst = _load_instance(args.file)
    try:
        rep = build_boxes(inst)
    except NotConsecutiveError as exc:
        print(f"embedding failed: {exc}", file=sys.stderr)
        return EXIT_NOT_CONSECUTIVE
    graph = compose_graph(inst) if args.out == "dot" else None
    try:
        text = emit_representation(rep, args.out, graph=graph)
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE
    print(text, end="")
    return EXIT_OK


def _cmd_verify(args) -> int:
    inst = _load_instance(args.file)
    rep = parse_representation(_read_text(args.representation))
    g = compose_graph(inst)
    try:
        report = verify_representation(g, rep)
    except VertexSetMismatchError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_MISMATCH
    if report.exact_match:
        print(f"exact match: {g.num_edges} edges")
        return EXIT_OK
    for u, v in report.missing_edges:
        print(f"missing edge (in graph, not realized by boxes): {u} -- {v}")
    for u, v in report.extra_edges:
        print(f"extra edge (realized by boxes, not in graph): {u} -- {v}")
    return EXIT_MISMATCH


def _cmd_certify(args) -> int:
    inst = _load_instance(args.file)
    cert = lower_bound_certificate(inst)
    if cert is None:
        print("K4: boxicity 1")
    else:
        seq = " ".join(cert.cycle_vertices)
        print(f"induced cycle (length {len(cert)}): {seq}")
    return EXIT_OK


def _cmd_generate(args) -> int:
    cfg = GenConfig(
        seed=_effective_seed(args.seed),
        num_internal=args.internal,
        max_children=args.max_children,
        strict_halin=args.strict,
    )
    print(serialize_instance(generate(cfg)), end="")
    return EXIT_OK


def _cmd_render(args) -> int:
    inst = _load_instance(args.file)
    try:
        rep = build_boxes(inst)
    except NotConsecutiveError as exc:
        print(f"embedding failed: {exc}", file=sys.stderr)
        return EXIT_NOT_CONSECUTIVE
    with open(args.svg, "w", encoding="utf-8") as fh:
        fh.write(render_svg(rep))
    return EXIT_OK


def _cmd_selftest(args) -> int:
    seed = _effective_seed(args.seed)
    failures = 0
    for i, cfg in enumerate(corpus_configs(seed, args.count)):
        inst = generate(cfg)
        g = compose_graph(inst)
        rep = build_boxes(inst)
        report = verify_representation(g, rep)
        cert = lower_bound_certificate(inst)
        ok = report.exact_match and report.supergraph_x and report.supergraph_y
        if cert is not None:
            ok = ok and len(cert) >= 4
        if not ok:
            failures += 1
        print(
            f"{i:04d} n={len(g.vertices)} k={len(inst.cycle)} "
            f"kind={rep.construction_kind.value} exact={report.exact_match} "
            f"cert={len(cert) if cert is not None else '-'}"
        )
    print(f"selftest: {args.count - failures}/{args.count} ok (seed={seed})")
    return EXIT_OK if failures == 0 else EXIT_MISMATCH


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="halinbox",
        description="Exact rectangle representations for tree-plus-leaf-cycle graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check an instance document")
    p.add_argument("file")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("embed", help="build and print a box representation")
    p.add_argument("file")
    p.add_argument("--out", default="structured", help="structured (default), svg, or dot")
    p.set_defaults(func=_cmd_embed)

    p = sub.add_parser("verify", help="check a representation document against an instance")
    p.add_argument("file")
    p.add_argument("representation")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("certify", help="print the boxicity lower-bound witness")
    p.add_argument("file")
    p.set_defaults(func=_cmd_certify)

    p = sub.add_parser("generate", help="print a seeded random instance document")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--internal", type=int, default=3, help="number of internal tree vertices")
    p.add_argument("--max-children", type=int, default=3)
    p.add_argument("--strict", action="store_true", help="forbid degree-2 tree vertices")
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("render", help="embed an instance and write an SVG file")
    p.add_argument("file")
    p.add_argument("--svg", required=True, metavar="OUT")
    p.set_defaults(func=_cmd_render)

    p = sub.add_parser("selftest", help="generate instances and verify the full pipeline")
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_selftest)

    return parser


def cli_main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse handles --help and usage errors itself
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"invalid document: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except HalinError as exc:
        print(f"invalid instance: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (OSError, ValueError, argparse.ArgumentTypeError) as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
