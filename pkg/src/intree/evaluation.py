"""Clustering quality metrics against ground-truth labels."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .descent import DecisionGraphPoint, popout_score


@dataclass(frozen=True)
class EvalReport:
    ari: float
    n_clusters_found: int
    n_clusters_true: int
    contingency: np.ndarray  # true label x found cluster counts
    popout_margin: float

    def to_json_dict(self) -> dict:
        return {
            "ari": float(self.ari),
            "n_clusters_found": int(self.n_clusters_found),
            "n_clusters_true": int(self.n_clusters_true),
            "contingency": [[int(c) for c in row] for row in self.contingency],
            "popout_margin": float(self.popout_margin),
        }

    def summary_line(self) -> str:
        return (
            f"ari={self.ari:.4f} clusters={self.n_clusters_found} "
            f"true={self.n_clusters_true} popout_margin={self.popout_margin:.3f}"
        )


def contingency_table(labels_a, labels_b) -> np.ndarray:
    a = np.asarray(labels_a)
    b = np.asarray(labels_b)
    _, ai = np.unique(a, return_inverse=True)
    _, bi = np.unique(b, return_inverse=True)
    table = np.zeros((ai.max() + 1, bi.max() + 1), dtype=np.int64)
    np.add.at(table, (ai, bi), 1)
    return table


def adjusted_rand_index(labels_a, labels_b) -> float:
    """Chance-corrected pair-counting agreement between two partitions.

    Computed from the pair confusion counts of the contingency table; 1 for
    identical partitions up to relabeling, about 0 for independent ones.
    """
    a = np.asarray(labels_a)
    b = np.asarray(labels_b)
    if a.shape != b.shape:
        raise ValueError(f"partition lengths differ: {a.shape} vs {b.shape}")
    n = a.shape[0]
    if n < 2:
        raise ValueError("need at least 2 samples")
    table = contingency_table(a, b)

    def pairs(x):
        return (x * (x - 1) // 2).sum()

    same_both = pairs(table)
    same_a = pairs(table.sum(axis=1))
    same_b = pairs(table.sum(axis=0))
    total = n * (n - 1) // 2
    # pair confusion: tp together in both, fp together only in b, fn only in a
    tp = same_both
    fp = same_b - same_both
    fn = same_a - same_both
    tn = total - tp - fp - fn
    if fn == 0 and fp == 0:
        return 1.0
    return float(2.0 * (tp * tn - fn * fp) / ((tp + fn) * (fn + tn) + (tp + fp) * (fp + tn)))


def popout_margin(
    dg: list[DecisionGraphPoint],
    selected,
    delta_weight: int = 2,
) -> float:
    """Normalized score gap between the selected nodes and the best unselected.

    (min selected score - max unselected score) / max score over all
    non-root nodes, clamped at 0; 0 for an empty selection.
    """
    selected = set(selected)
    if not selected:
        return 0.0
    scores = {p.node: popout_score(p.rho, p.delta, delta_weight) for p in dg if not p.is_root}
    if not scores:
        return 0.0
    top = max(scores.values())
    if top <= 0:
        return 0.0
    sel = [s for node, s in scores.items() if node in selected]
    unsel = [s for node, s in scores.items() if node not in selected]
    gap = min(sel) - (max(unsel) if unsel else 0.0)
    return float(max(gap, 0.0) / top)


def evaluate(
    labels_true,
    cluster_id,
    dg: list[DecisionGraphPoint] | None = None,
    selected=(),
    delta_weight: int = 2,
) -> EvalReport:
    labels_true = np.asarray(labels_true)
    cluster_id = np.asarray(cluster_id)
    return EvalReport(
        ari=adjusted_rand_index(labels_true, cluster_id),
        n_clusters_found=int(np.unique(cluster_id).size),
        n_clusters_true=int(np.unique(labels_true).size),
        contingency=contingency_table(labels_true, cluster_id),
        popout_margin=popout_margin(dg, selected, delta_weight) if dg is not None else 0.0,
    )
