"""Command line front end: cluster, graph, serve, gen."""

from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from . import descent
from .dataset import Dataset, gen_two_gaussians, load_csv
from .pipeline import PipelineConfig, build_graph, run_stages


def _dataset_args(p: argparse.ArgumentParser):
    p.add_argument("--input", required=True, help="CSV file of points (one row per point)")
    p.add_argument("--header", action="store_true", help="skip the first row")
    p.add_argument("--label-col", type=int, default=None, help="0-based label column index")


def _pipeline_args(p: argparse.ArgumentParser):
    p.add_argument(
        "--graph",
        required=True,
        choices=["knn", "eps", "mst", "delaunay", "rng", "gabriel"],
    )
    p.add_argument("--k", type=int, default=None, help="neighbor count for --graph knn")
    p.add_argument("--eps", type=float, default=None, help="radius for --graph eps")
    p.add_argument("--metric", default="euclidean")
    p.add_argument("--seed", type=int, default=None)


def _load(args) -> Dataset:
    return load_csv(args.input, label_column=args.label_col, skip_header=args.header)


def _config(args, cut_mode: str, n_clusters, sigma) -> PipelineConfig:
    kind = "eps_nn" if args.graph == "eps" else args.graph
    return PipelineConfig(
        graph_kind=kind,
        sigma=sigma,
        k=args.k,
        eps=args.eps,
        cut_mode=cut_mode,
        n_clusters=n_clusters,
        seed=args.seed,
        metric=args.metric,
    )


def _parse_sigma(raw: str) -> float | None:
    if raw == "auto":
        return None
    value = float(raw)
    if value <= 0:
        raise SystemExit("--sigma must be positive or 'auto'")
    return value


def _json_ready(x):
    if isinstance(x, float) and math.isinf(x):
        return "inf"
    return x


def cmd_cluster(args) -> int:
    dataset = _load(args)
    sigma = _parse_sigma(args.sigma)
    cut_mode = "auto" if args.clusters is not None else "none"
    config = _config(args, cut_mode, args.clusters, sigma)
    result = run_stages(config, dataset)
    body = result.tree.to_json_dict(result.assignment)
    body["n_clusters"] = int(result.assignment.n_clusters)
    body["n_components"] = int(result.tree.n_components)
    body["victims"] = [int(v) for v in result.victims]
    body["graph"] = result.graph.to_json_dict()
    if result.report is not None:
        body["report"] = result.report.to_json_dict()
    text = json.dumps(body, sort_keys=True)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    if args.dump_dg:
        rows = [[_json_ready(float(v)) for v in row] for row in result.distances.values]
        with open(args.dump_dg, "w", encoding="utf-8") as fh:
            json.dump({"values": rows}, fh, sort_keys=True)
    summary = f"clusters={result.assignment.n_clusters} components={result.tree.n_components}"
    if result.report is not None:
        summary += " " + result.report.summary_line()
    print(summary, file=sys.stderr)
    return 0


def cmd_graph(args) -> int:
    dataset = _load(args)
    config = _config(args, "none", None, 1.0)
    graph = build_graph(config, dataset)
    text = json.dumps(graph.to_json_dict(), sort_keys=True)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0


def cmd_serve(args) -> int:
    from .service import serve

    dataset = _load(args)
    sigma = _parse_sigma(args.sigma)
    cut_mode = "auto" if args.clusters is not None else "none"
    config = _config(args, cut_mode, args.clusters, sigma)
    print(f"serving on http://{args.host}:{args.port}", file=sys.stderr)
    serve(dataset, config, port=args.port, host=args.host)
    return 0


def cmd_gen(args) -> int:
    if args.generator != "two-gaussians":
        raise SystemExit(f"unknown generator {args.generator!r}")
    centers = []
    for chunk in args.centers.split(";"):
        centers.append([float(v) for v in chunk.split(",")])
    stddev = [float(v) for v in args.stddev.split(",")]
    dataset = gen_two_gaussians(
        n_per_cluster=args.n,
        centers=centers,
        stddev=stddev if len(stddev) > 1 else stddev[0],
        seed=args.seed,
    )
    rows = []
    for point, label in zip(dataset.points, dataset.labels):
        rows.append(",".join(repr(float(c)) for c in point) + f",{int(label)}")
    text = "\n".join(rows) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="intree")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cluster", help="run the full pipeline on a CSV file")
    _dataset_args(p)
    _pipeline_args(p)
    p.add_argument("--sigma", required=True, help="kernel scale, or 'auto'")
    p.add_argument("--clusters", type=int, default=None, help="target cluster count for auto cut")
    p.add_argument("--out", default=None, help="write result JSON here instead of stdout")
    p.add_argument("--dump-dg", default=None, help="debug: write graph distances as JSON")
    p.set_defaults(fn=cmd_cluster)

    p = sub.add_parser("graph", help="build and export the proximity graph only")
    _dataset_args(p)
    _pipeline_args(p)
    p.add_argument("--out", default=None)
    p.set_defaults(fn=cmd_graph)

    p = sub.add_parser("serve", help="serve an interactive session over HTTP")
    _dataset_args(p)
    _pipeline_args(p)
    p.add_argument("--sigma", required=True, help="kernel scale, or 'auto'")
    p.add_argument("--clusters", type=int, default=None)
    p.add_argument("--port", type=int, default=8321)
    p.add_argument("--host", default="127.0.0.1")
    p.set_defaults(fn=cmd_serve)

    p = sub.add_parser("gen", help="generate a synthetic dataset CSV")
    p.add_argument("generator", choices=["two-gaussians"])
    p.add_argument("--n", type=int, required=True, help="points per cluster")
    p.add_argument("--stddev", default="1.0", help="scalar or comma-separated per-axis")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--centers", default="0,0;6,0", help="two centers, ';' separated")
    p.add_argument("--out", default=None)
    p.set_defaults(fn=cmd_gen)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
