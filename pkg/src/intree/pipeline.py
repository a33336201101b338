"""End-to-end pipeline: graph, distances, potential, tree, cut, roots."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import descent, graphs
from .dataset import Dataset, pairwise_distance
from .descent import ClusterAssignment, InTreeForest
from .evaluation import EvalReport, evaluate
from .graph_distances import GraphDistances, shortest_paths

STAGE_NAMES = {
    1: "build proximity graph",
    2: "shortest-path distances",
    3: "potentials",
    4: "in-tree construction",
    5: "edge cutting",
    6: "root finding",
}


class PipelineStageError(RuntimeError):
    """Failure wrapped with the pipeline stage (1..6) it occurred in."""

    def __init__(self, stage: int, cause: Exception):
        self.stage = stage
        self.cause = cause
        super().__init__(f"stage {stage} ({STAGE_NAMES[stage]}): {cause}")


@dataclass(frozen=True)
class PipelineConfig:
    graph_kind: str
    sigma: float | None = None  # None selects the convenience default
    k: int | None = None
    eps: float | None = None
    cut_mode: str = "auto"  # "auto" or "none"
    n_clusters: int | None = None
    seed: int | None = None
    metric: str = "euclidean"
    index_tie_break: bool = True
    delta_weight: int = 2

    def __post_init__(self):
        if self.graph_kind not in graphs.GRAPH_KINDS:
            raise ValueError(f"unknown graph kind {self.graph_kind!r}")
        if self.graph_kind == "knn" and self.k is None:
            raise ValueError("graph kind 'knn' requires k")
        if self.graph_kind != "knn" and self.k is not None:
            raise ValueError("k is only valid with graph kind 'knn'")
        if self.graph_kind == "eps_nn" and self.eps is None:
            raise ValueError("graph kind 'eps_nn' requires eps")
        if self.graph_kind != "eps_nn" and self.eps is not None:
            raise ValueError("eps is only valid with graph kind 'eps_nn'")
        if self.cut_mode not in ("auto", "none"):
            raise ValueError(f"cut_mode must be 'auto' or 'none', got {self.cut_mode!r}")
        if self.cut_mode == "auto" and self.n_clusters is None:
            raise ValueError("cut_mode 'auto' requires n_clusters")
        if self.sigma is not None and self.sigma <= 0:
            raise ValueError("sigma must be > 0")


@dataclass(frozen=True)
class PipelineResult:
    """All intermediate artifacts of one pipeline run."""

    config: PipelineConfig
    dataset: Dataset
    graph: graphs.ProximityGraph
    distances: GraphDistances
    sigma: float
    tree_fresh: InTreeForest  # before any cut
    tree: InTreeForest  # after the configured cut
    victims: tuple
    assignment: ClusterAssignment
    report: EvalReport | None


def build_graph(config: PipelineConfig, dataset: Dataset) -> graphs.ProximityGraph:
    dist = pairwise_distance(dataset, config.metric)
    kind = config.graph_kind
    if kind == "knn":
        return graphs.build_knn(dist, config.k)
    if kind == "eps_nn":
        return graphs.build_eps_nn(dist, config.eps)
    if kind == "mst":
        return graphs.build_mst(dist)
    if kind == "delaunay":
        return graphs.build_delaunay(dataset)
    if kind == "rng":
        return graphs.build_rng(dist)
    return graphs.build_gabriel(dist)


def default_sigma(dG: GraphDistances) -> float:
    """Convenience fallback: half the squared mean of finite distances."""
    off = dG.values[~np.eye(dG.n, dtype=bool)]
    finite = off[np.isfinite(off)]
    if finite.size == 0:
        return 1.0
    return float(finite.mean() ** 2 / 2.0) or 1.0


def run_stages(config: PipelineConfig, dataset: Dataset) -> PipelineResult:
    def stage(num, fn, *args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except PipelineStageError:
            raise
        except Exception as exc:
            raise PipelineStageError(num, exc) from exc

    graph = stage(1, build_graph, config, dataset)
    dG = stage(2, shortest_paths, graph)
    sigma = config.sigma if config.sigma is not None else default_sigma(dG)
    potentials = stage(3, descent.compute_potential, dG, sigma)
    tree_fresh = stage(4, descent.build_in_tree, dG, potentials, config.index_tie_break)
    if config.cut_mode == "auto":
        victims = stage(
            5, descent.auto_cut, tree_fresh, config.n_clusters, config.delta_weight
        )
        tree = stage(5, descent.cut_edges, tree_fresh, victims)
    else:
        victims = set()
        tree = tree_fresh
    assignment = stage(6, descent.find_roots, tree)
    report = None
    if dataset.labels is not None:
        dg = descent.decision_graph(tree_fresh)
        report = evaluate(
            dataset.labels, assignment.cluster_id, dg, victims, config.delta_weight
        )
    return PipelineResult(
        config=config,
        dataset=dataset,
        graph=graph,
        distances=dG,
        sigma=sigma,
        tree_fresh=tree_fresh,
        tree=tree,
        victims=tuple(sorted(victims)),
        assignment=assignment,
        report=report,
    )


def run_pipeline(
    config: PipelineConfig, dataset: Dataset
) -> tuple[InTreeForest, ClusterAssignment, EvalReport | None]:
    """Run all six stages and return (forest after cuts, assignment, report).

    The report is present only when the dataset carries labels. Identical
    config and dataset always produce identical results.
    """
    result = run_stages(config, dataset)
    return result.tree, result.assignment, result.report
