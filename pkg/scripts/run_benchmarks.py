#!/usr/bin/env python3
"""Run the full benchmark grid and print an ARI table.

Covers the bundled shape datasets under their published parameter grids plus
the pinned synthetic two-Gaussian runs. Useful for eyeballing robustness to
sigma and k; the acceptance suite asserts the thresholds.
"""

import argparse
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from intree import PipelineConfig, gen_two_gaussians, load_csv
from intree.pipeline import run_stages

DATA = Path(__file__).parent.parent / "data"

BENCHMARKS = [
    ("spiral", "knn", 5, [1, 2, 5, 10, 100], 3),
    ("flame", "knn", 5, [2, 3, 5, 10], 2),
    ("aggregation", "knn", 30, [5, 8, 10], 7),
    ("jain", "knn", 10, [40, 50], 2),
    ("compound", "knn", 10, [20, 25], 6),
]

K_ROBUSTNESS = ("aggregation", [8, 35, 55, 100, 200], 7.0, 7)

TWO_GAUSSIAN = [
    ("knn", 5, [1, 5, 15, 20, 25, 40, 80, 100]),
    ("mst", None, [1, 5, 10, 20, 40, 60, 80, 100, 200]),
    ("delaunay", None, [1, 5, 10, 20, 40, 60]),
]


def report(tag, result, elapsed):
    r = result.report
    print(
        f"{tag:34s} comps={result.tree.n_components:<3d} cuts={len(result.victims):<2d} "
        f"clusters={result.assignment.n_clusters:<3d} ARI={r.ari:.4f} "
        f"margin={r.popout_margin:.3f} ({elapsed:.2f}s)"
    )


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--only", default=None, help="run a single dataset by name")
    args = parser.parse_args()

    for name, kind, k, sigmas, n_clusters in BENCHMARKS:
        if args.only and args.only != name:
            continue
        ds = load_csv(DATA / f"{name}.csv", label_column=2, name=name)
        for sigma in sigmas:
            cfg = PipelineConfig(graph_kind=kind, k=k, sigma=float(sigma), n_clusters=n_clusters)
            t0 = time.monotonic()
            result = run_stages(cfg, ds)
            report(f"{name} {kind} k={k} sigma={sigma}", result, time.monotonic() - t0)

    name, ks, sigma, n_clusters = K_ROBUSTNESS
    if not args.only or args.only == name:
        ds = load_csv(DATA / f"{name}.csv", label_column=2, name=name)
        for k in ks:
            cfg = PipelineConfig(graph_kind="knn", k=k, sigma=sigma, n_clusters=n_clusters)
            t0 = time.monotonic()
            result = run_stages(cfg, ds)
            report(f"{name} knn k={k} sigma={sigma}", result, time.monotonic() - t0)

    if not args.only or args.only == "two-gaussians":
        ds = gen_two_gaussians(100, centers=((0.0, 0.0), (6.0, 0.0)), stddev=1.0, seed=7)
        for kind, k, sigmas in TWO_GAUSSIAN:
            for sigma in sigmas:
                cfg = PipelineConfig(graph_kind=kind, k=k, sigma=float(sigma), n_clusters=2)
                t0 = time.monotonic()
                result = run_stages(cfg, ds)
                report(f"two-gaussians {kind} sigma={sigma}", result, time.monotonic() - t0)


if __name__ == "__main__":
    main()
