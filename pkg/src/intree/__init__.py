"""Graph-based clustering by nearest-neighbor descent on graph distances.

Pipeline: build a proximity graph over the input distances, compute
all-pairs shortest-path distances on it, assign Gaussian-kernel potentials,
let every node descend to its nearest lower-potential node (forming one
in-tree per graph component), cut the conspicuous inter-cluster edges found
on the decision graph, and read clusters off the tree roots.
"""

from .dataset import Dataset, DistanceMatrix, gen_two_gaussians, load_csv, pairwise_distance
from .descent import (
    ClusterAssignment,
    DecisionGraphPoint,
    InTreeForest,
    PotentialVector,
    auto_cut,
    build_in_tree,
    compute_potential,
    cut_edges,
    decision_graph,
    find_roots,
    popout_score,
    rect_select,
)
from .evaluation import EvalReport, adjusted_rand_index, evaluate, popout_margin
from .graph_distances import GraphDistances, components, shortest_paths
from .graphs import (
    ProximityGraph,
    build_delaunay,
    build_eps_nn,
    build_gabriel,
    build_knn,
    build_mst,
    build_rng,
)
from .pipeline import PipelineConfig, PipelineResult, PipelineStageError, run_pipeline, run_stages

__version__ = "0.1.0"

__all__ = [
    "Dataset",
    "DistanceMatrix",
    "load_csv",
    "gen_two_gaussians",
    "pairwise_distance",
    "ProximityGraph",
    "build_knn",
    "build_eps_nn",
    "build_mst",
    "build_delaunay",
    "build_rng",
    "build_gabriel",
    "GraphDistances",
    "shortest_paths",
    "components",
    "PotentialVector",
    "InTreeForest",
    "DecisionGraphPoint",
    "ClusterAssignment",
    "compute_potential",
    "build_in_tree",
    "decision_graph",
    "cut_edges",
    "rect_select",
    "auto_cut",
    "find_roots",
    "popout_score",
    "EvalReport",
    "adjusted_rand_index",
    "popout_margin",
    "evaluate",
    "PipelineConfig",
    "PipelineResult",
    "PipelineStageError",
    "run_pipeline",
    "run_stages",
]
