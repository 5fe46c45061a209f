#!/usr/bin/env python3
"""Time the generate/embed/verify pipeline over a seeded corpus.

    python3 scripts/bench_corpus.py --count 1000 --seed 42
"""

import argparse
import time

from halinbox import (
    build_boxes,
    compose_graph,
    corpus_configs,
    generate,
    lower_bound_certificate,
    verify_representation,
)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--count", type=int, default=1000)
    parser.add_argument("--seed", type=int, default=42)
    args = parser.parse_args()

    stage = {"generate": 0.0, "embed": 0.0, "verify": 0.0, "certify": 0.0}
    sizes = []
    failures = 0
    t_total = time.perf_counter()
    for cfg in corpus_configs(args.seed, args.count):
        t = time.perf_counter()
        inst = generate(cfg)
        stage["generate"] += time.perf_counter() - t

        g = compose_graph(inst)
        sizes.append(len(g.vertices))

        t = time.perf_counter()
        rep = build_boxes(inst)
        stage["embed"] += time.perf_counter() - t

        t = time.perf_counter()
        report = verify_representation(g, rep)
        stage["verify"] += time.perf_counter() - t

        t = time.perf_counter()
        cert = lower_bound_certificate(inst)
        stage["certify"] += time.perf_counter() - t

        if not report.exact_match or (cert is not None and len(cert) < 4):
            failures += 1
    total = time.perf_counter() - t_total

    print(f"instances : {args.count} (seed {args.seed})")
    print(f"vertices  : min {min(sizes)}, max {max(sizes)}, mean {sum(sizes) / len(sizes):.1f}")
    print(f"failures  : {failures}")
    for name, spent in stage.items():
        print(f"{name:<9} : {spent:.2f}s")
    print(f"total     : {total:.2f}s")


if __name__ == "__main__":
    main()
