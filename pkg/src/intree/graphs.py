"""Proximity graph builders over a pairwise distance matrix.

All builders return undirected graphs with canonical edge lists: each
unordered pair appears once as (i, j) with i < j, sorted by (i, j), so
identical inputs always produce identical outputs.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .dataset import Dataset, DistanceMatrix

GRAPH_KINDS = ("knn", "eps_nn", "mst", "delaunay", "rng", "gabriel")


@dataclass(frozen=True)
class ProximityGraph:
    """Undirected weighted graph on the N dataset points."""

    n_nodes: int
    edges: tuple  # ((i, j, w), ...) with i < j, sorted by (i, j)
    kind: str
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.kind not in GRAPH_KINDS:
            raise ValueError(f"unknown graph kind {self.kind!r}")
        seen = set()
        for i, j, w in self.edges:
            if not (0 <= i < j < self.n_nodes):
                raise ValueError(f"bad edge endpoints ({i}, {j})")
            if (i, j) in seen:
                raise ValueError(f"duplicate edge ({i}, {j})")
            if w < 0:
                raise ValueError(f"negative edge weight on ({i}, {j})")
            seen.add((i, j))

    def adjacency(self) -> list[list[tuple[int, float]]]:
        adj: list[list[tuple[int, float]]] = [[] for _ in range(self.n_nodes)]
        for i, j, w in self.edges:
            adj[i].append((j, w))
            adj[j].append((i, w))
        return adj

    def to_json_dict(self) -> dict:
        return {
            "n": self.n_nodes,
            "kind": self.kind,
            "params": dict(self.params),
            "edges": [[int(i), int(j), float(w)] for i, j, w in self.edges],
        }


def _canonical(n: int, pairs, dist: np.ndarray, kind: str, params: dict) -> ProximityGraph:
    edges = tuple(
        (i, j, float(dist[i, j])) for i, j in sorted({(min(a, b), max(a, b)) for a, b in pairs})
    )
    return ProximityGraph(n_nodes=n, edges=edges, kind=kind, params=params)


def _nearest_order(row: np.ndarray, i: int) -> np.ndarray:
    # stable sort keeps equal distances ordered by node index
    order = np.argsort(row, kind="stable")
    return order[order != i]


def build_knn(dist: DistanceMatrix, k: int) -> ProximityGraph:
    """k-nearest-neighbor graph, symmetrized by union.

    Edge (i, j) exists iff j is among i's k nearest nodes or i is among
    j's k nearest. Ties at the k-th distance go to the lower node index.
    """
    n = dist.n
    if not 1 <= k <= n - 1:
        raise ValueError(f"k must be in [1, {n - 1}], got {k}")
    pairs = set()
    for i in range(n):
        for j in _nearest_order(dist.values[i], i)[:k]:
            pairs.add((i, int(j)))
    return _canonical(n, pairs, dist.values, "knn", {"k": k})


def build_eps_nn(dist: DistanceMatrix, eps: float) -> ProximityGraph:
    """Radius graph: edge (i, j) iff d(i, j) < eps (strict)."""
    if eps <= 0:
        raise ValueError(f"eps must be > 0, got {eps}")
    n = dist.n
    ii, jj = np.nonzero(dist.values < eps)
    pairs = [(int(a), int(b)) for a, b in zip(ii, jj) if a < b]
    return _canonical(n, pairs, dist.values, "eps_nn", {"eps": float(eps)})


def build_mst(dist: DistanceMatrix) -> ProximityGraph:
    """Minimum spanning tree via Kruskal.

    Edge candidates are scanned in lexicographic (weight, i, j) order, so
    the result is deterministic under ties.
    """
    n = dist.n
    if n == 1:
        return _canonical(1, [], dist.values, "mst", {})
    candidates = sorted(
        (dist.values[i, j], i, j) for i in range(n) for j in range(i + 1, n)
    )
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    pairs = []
    for _, i, j in candidates:
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[ri] = rj
            pairs.append((i, j))
            if len(pairs) == n - 1:
                break
    return _canonical(n, pairs, dist.values, "mst", {})


def _circumcircle(p: np.ndarray, q: np.ndarray, r: np.ndarray):
    """Center and radius of the circle through three points, or None if collinear."""
    ax, ay = p
    bx, by = q
    cx, cy = r
    d = 2.0 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by))
    if d == 0.0:
        return None
    ux = ((ax**2 + ay**2) * (by - cy) + (bx**2 + by**2) * (cy - ay) + (cx**2 + cy**2) * (ay - by)) / d
    uy = ((ax**2 + ay**2) * (cx - bx) + (bx**2 + by**2) * (ax - cx) + (cx**2 + cy**2) * (bx - ax)) / d
    center = np.array([ux, uy])
    return center, float(np.hypot(*(p - center)))


def build_delaunay(dataset: Dataset) -> ProximityGraph:
    """Edges of the 2D Delaunay triangulation, weighted by Euclidean distance.

    Cocircular four-point quads are canonicalized: when both diagonals are
    admissible the lexicographically smaller (i, j) is kept.
    """
    from scipy.spatial import Delaunay, QhullError

    if dataset.dim != 2:
        raise ValueError(f"delaunay requires 2-D points, got D={dataset.dim}")
    if dataset.n < 3:
        raise ValueError("delaunay requires at least 3 points")
    pts = dataset.points
    if np.linalg.matrix_rank(pts - pts[0]) < 2:
        raise ValueError("delaunay input is degenerate: all points collinear")
    try:
        tri = Delaunay(pts)
    except QhullError as exc:
        raise ValueError(f"delaunay input is degenerate: {exc}") from exc

    pairs = set()
    opposite: dict[tuple[int, int], list[int]] = {}
    for simplex in tri.simplices:
        s = [int(v) for v in simplex]
        for a in range(3):
            i, j = sorted((s[a], s[(a + 1) % 3]))
            pairs.add((i, j))
            opposite.setdefault((i, j), []).append(s[(a + 2) % 3])

    # canonical choice between the two diagonals of a cocircular quad
    scale = float(np.abs(pts).max(initial=1.0)) or 1.0
    touched: set[int] = set()
    for (i, j), opp in sorted(opposite.items()):
        if len(opp) != 2:
            continue
        a, b = sorted(opp)
        if {i, j, a, b} & touched:
            continue
        cc = _circumcircle(pts[i], pts[a], pts[j])
        if cc is None:
            continue
        center, radius = cc
        if abs(np.hypot(*(pts[b] - center)) - radius) <= 1e-9 * max(radius, scale):
            if (a, b) < (i, j) and (a, b) not in pairs:
                pairs.discard((i, j))
                pairs.add((a, b))
                touched.update((i, j, a, b))

    d = ((pts[:, None, :] - pts[None, :, :]) ** 2).sum(axis=-1) ** 0.5
    return _canonical(dataset.n, pairs, d, "delaunay", {})


def build_rng(dist: DistanceMatrix) -> ProximityGraph:
    """Relative neighborhood graph by direct lune testing.

    Edge (i, j) survives unless some third node m satisfies
    max(d(i, m), d(j, m)) < d(i, j) strictly. Works in any dimension.
    """
    n = dist.n
    if n < 2:
        raise ValueError("rng requires at least 2 points")
    d = dist.values
    pairs = []
    for i in range(n):
        lune = np.maximum(d[i], d)  # lune[j, m] = max(d(i,m), d(j,m))
        lune[:, i] = np.inf
        for j in range(i + 1, n):
            row = lune[j]
            keep = row[j]
            row[j] = np.inf
            if not (row < d[i, j]).any():
                pairs.append((i, j))
            row[j] = keep
    return _canonical(n, pairs, d, "rng", {})


def build_gabriel(dist: DistanceMatrix) -> ProximityGraph:
    """Gabriel graph by direct diametral-ball testing.

    Edge (i, j) survives unless some third node m satisfies
    d(i, m)^2 + d(j, m)^2 < d(i, j)^2 strictly.
    """
    n = dist.n
    if n < 2:
        raise ValueError("gabriel requires at least 2 points")
    sq = dist.values**2
    pairs = []
    for i in range(n):
        ball = sq[i] + sq  # ball[j, m] = d(i,m)^2 + d(j,m)^2
        ball[:, i] = np.inf
        for j in range(i + 1, n):
            row = ball[j]
            keep = row[j]
            row[j] = np.inf
            if not (row < sq[i, j]).any():
                pairs.append((i, j))
            row[j] = keep
    return _canonical(n, pairs, dist.values, "gabriel", {})
