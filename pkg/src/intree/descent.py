"""Nearest-neighbor descent over graph distances.

Every node is assigned a potential (a negative sum of Gaussian kernels of
squared graph distances) and then descends to the nearest node of strictly
lower potential, which organizes each graph component into a directed
in-tree. Inter-cluster tree edges are long and start at conspicuous nodes,
so they can be found on a 2D decision graph of (potential magnitude, edge
length) and cut; pointer jumping then resolves every node's root.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .graph_distances import GraphDistances


@dataclass(frozen=True)
class PotentialVector:
    """Per-node potentials. Always <= 0; exactly 0 only for isolated nodes."""

    P: np.ndarray
    sigma: float


@dataclass(frozen=True)
class InTreeForest:
    """Per-node parent pointers forming one in-tree per graph component.

    parent[i] == i marks a root. edge_len[i] is the graph distance to the
    parent (0 at roots). Along any parent chain the key (P, node index)
    strictly decreases, which rules out cycles.
    """

    parent: np.ndarray
    edge_len: np.ndarray
    potentials: PotentialVector
    component_id: np.ndarray
    n_components: int

    def __post_init__(self):
        check_descent_invariant(self.parent, self.potentials.P)

    @property
    def n(self) -> int:
        return self.parent.shape[0]

    def roots(self) -> np.ndarray:
        return np.flatnonzero(self.parent == np.arange(self.n))

    def to_json_dict(self, clusters=None) -> dict:
        out = {
            "parent": [int(p) for p in self.parent],
            "edge_len": [float(x) for x in self.edge_len],
            "P": [float(x) for x in self.potentials.P],
            "sigma": float(self.potentials.sigma),
        }
        if clusters is not None:
            out["clusters"] = [int(c) for c in clusters.cluster_id]
        return out


@dataclass(frozen=True)
class DecisionGraphPoint:
    """One node's coordinates on the decision graph."""

    node: int
    rho: float  # potential magnitude |P|
    delta: float  # length of the outgoing tree edge
    is_root: bool


@dataclass(frozen=True)
class ClusterAssignment:
    """Resolved roots and dense cluster ids for every node."""

    root_of: np.ndarray
    cluster_id: np.ndarray
    n_clusters: int

    def to_json_dict(self) -> dict:
        return {
            "root_of": [int(r) for r in self.root_of],
            "cluster_id": [int(c) for c in self.cluster_id],
            "n_clusters": int(self.n_clusters),
        }


def check_descent_invariant(parent: np.ndarray, P: np.ndarray) -> None:
    """Raise unless every non-root parent strictly precedes its child in (P, index)."""
    idx = np.arange(parent.shape[0])
    nonroot = parent != idx
    p, c = parent[nonroot], idx[nonroot]
    bad = ~((P[p] < P[c]) | ((P[p] == P[c]) & (p < c)))
    if bad.any():
        i = int(c[bad][0])
        raise ValueError(
            f"descent invariant violated: node {i} points to {int(parent[i])} "
            "without decreasing (potential, index)"
        )


def compute_potential(dG: GraphDistances, sigma: float) -> PotentialVector:
    """Gaussian-kernel potential from squared graph distances.

    P_i = -sum over j != i of exp(-dG(i, j)^2 / sigma). Pairs in different
    components contribute exp(-inf) = 0, so isolated nodes sit at exactly 0.
    """
    if sigma <= 0:
        raise ValueError(f"sigma must be > 0, got {sigma}")
    with np.errstate(invalid="ignore"):
        kernel = np.exp(-(dG.values**2) / sigma)
    kernel = np.nan_to_num(kernel, nan=0.0)  # inf distances give exp(-inf) = 0
    P = -(kernel.sum(axis=1) - 1.0)  # drop each node's own exp(0) term
    P = np.minimum(P, 0.0)
    return PotentialVector(P=P, sigma=float(sigma))


def build_in_tree(
    dG: GraphDistances,
    potentials: PotentialVector,
    index_tie_break: bool = True,
) -> InTreeForest:
    """Point each node at its nearest node of lower potential.

    The candidate set for node i is every j with P_j < P_i, plus (when
    index_tie_break is on) every j with P_j == P_i and j < i. Only nodes in
    i's component are reachable; if no candidate exists there, i is a root.
    Distance ties in the argmin go to the lowest node id.
    """
    P = potentials.P
    d = dG.values
    n = d.shape[0]
    idx = np.arange(n)
    order = np.lexsort((idx, P))  # ascending (P, index)
    parent = idx.copy()
    for pos in range(n):
        i = int(order[pos])
        if pos == 0:
            continue
        cands = order[:pos]
        if not index_tie_break:
            cands = cands[P[cands] < P[i]]
            if cands.size == 0:
                continue
        dvals = d[i, cands]
        best = dvals.min()
        if not np.isfinite(best):
            continue  # no candidate inside i's component: i stays a root
        parent[i] = int(cands[dvals == best].min())
    edge_len = np.where(parent == idx, 0.0, d[idx, parent])
    return InTreeForest(
        parent=parent,
        edge_len=edge_len,
        potentials=potentials,
        component_id=dG.component_id.copy(),
        n_components=dG.n_components,
    )


def decision_graph(tree: InTreeForest) -> list[DecisionGraphPoint]:
    """Map every node to (rho, delta) = (|P|, outgoing edge length).

    A root has no outgoing edge; it is displayed at 1.05 times the longest
    edge of its component (0 for singleton components) and flagged so that
    selection operations can skip it.
    """
    rho = -tree.potentials.P
    delta = tree.edge_len.copy()
    root_ids = tree.roots()
    for r in root_ids:
        member = tree.component_id == tree.component_id[r]
        delta[r] = 1.05 * tree.edge_len[member].max()
    is_root = np.zeros(tree.n, dtype=bool)
    is_root[root_ids] = True
    return [
        DecisionGraphPoint(node=i, rho=float(rho[i]), delta=float(delta[i]), is_root=bool(is_root[i]))
        for i in range(tree.n)
    ]


def cut_edges(tree: InTreeForest, victims) -> InTreeForest:
    """Detach each victim node from its parent, promoting it to a root.

    Victims that are already roots are no-ops. Returns a new forest; the
    input is not modified.
    """
    victims = set(int(v) for v in victims)
    for v in victims:
        if not 0 <= v < tree.n:
            raise ValueError(f"victim node {v} out of range")
    parent = tree.parent.copy()
    edge_len = tree.edge_len.copy()
    for v in victims:
        parent[v] = v
        edge_len[v] = 0.0
    return InTreeForest(
        parent=parent,
        edge_len=edge_len,
        potentials=tree.potentials,
        component_id=tree.component_id,
        n_components=tree.n_components,
    )


def rect_select(
    dg: list[DecisionGraphPoint],
    rho_min: float,
    delta_min: float,
    rho_max: float,
    delta_max: float,
) -> set[int]:
    """Nodes whose decision-graph point falls inside the closed rectangle.

    Roots are never selected. An empty selection is valid.
    """
    if rho_min > rho_max or delta_min > delta_max:
        raise ValueError("rectangle bounds are inverted")
    return {
        p.node
        for p in dg
        if not p.is_root
        and rho_min <= p.rho <= rho_max
        and delta_min <= p.delta <= delta_max
    }


def popout_score(rho: float, delta: float, delta_weight: int = 2) -> float:
    """Saliency of a decision-graph point; large only when both axes are large.

    The default weights delta quadratically: inter-cluster edges separate
    mostly along the delta axis, and the plain product can be swamped by
    dense nodes with unremarkable edges (delta_weight=1 restores it).
    """
    return rho * delta**delta_weight


def auto_cut(
    tree: InTreeForest,
    n_clusters: int,
    delta_weight: int = 2,
    by_delta: bool = False,
) -> set[int]:
    """Pick the (n_clusters - n_components) most salient non-root nodes.

    Ranking is by popout_score, ties by larger delta then lower node id;
    by_delta ranks on delta alone. Cutting can only split components, so
    n_clusters below n_components is an error.
    """
    n_comp = tree.n_components
    if n_clusters < n_comp:
        raise ValueError(
            f"cannot merge components by cutting: asked for {n_clusters} clusters "
            f"but the graph has {n_comp} components"
        )
    if n_clusters > tree.n:
        raise ValueError(f"n_clusters {n_clusters} exceeds node count {tree.n}")
    dg = decision_graph(tree)
    nonroots = [p for p in dg if not p.is_root]
    if by_delta:
        ranked = sorted(nonroots, key=lambda p: (-p.delta, p.node))
    else:
        ranked = sorted(
            nonroots,
            key=lambda p: (-popout_score(p.rho, p.delta, delta_weight), -p.delta, p.node),
        )
    return {p.node for p in ranked[: n_clusters - n_comp]}


def find_roots(tree: InTreeForest) -> ClusterAssignment:
    """Resolve every node's root by pointer jumping.

    Repeatedly replaces each pointer with its pointer's pointer, so chains
    halve every round and ceil(log2(H)) rounds suffice for the longest
    chain of H edges. A hard cap of ceil(log2(N)) + 1 rounds turns a
    corrupted (cyclic) forest into an error instead of an infinite loop.
    """
    n = tree.n
    root_of = tree.parent.copy()
    cap = math.ceil(math.log2(max(n, 2))) + 1
    rounds = 0
    while True:
        hopped = root_of[root_of]
        if np.array_equal(hopped, root_of):
            break
        root_of = hopped
        rounds += 1
        if rounds > cap:
            raise RuntimeError("pointer jumping did not converge: cycle in forest")
    if not np.array_equal(tree.parent[root_of], root_of):
        raise RuntimeError("pointer jumping settled on non-roots: cycle in forest")
    # dense ids ordered by each cluster's smallest member node
    _, first = np.unique(root_of, return_index=True)
    remap = {int(root_of[f]): rank for rank, f in enumerate(sorted(first))}
    cluster_id = np.array([remap[int(r)] for r in root_of], dtype=int)
    return ClusterAssignment(
        root_of=root_of, cluster_id=cluster_id, n_clusters=len(remap)
    )
