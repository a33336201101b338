"""Point datasets, synthetic generators, and pairwise distance matrices."""

from __future__ import annotations

import csv
from dataclasses import dataclass, field

import numpy as np

SUPPORTED_METRICS = ("euclidean", "manhattan")


@dataclass(frozen=True)
class Dataset:
    """N points of dimension D with optional integer class labels."""

    points: np.ndarray
    labels: np.ndarray | None = None
    name: str = "dataset"

    def __post_init__(self):
        pts = np.asarray(self.points, dtype=float)
        if pts.ndim != 2 or pts.shape[0] < 1 or pts.shape[1] < 1:
            raise ValueError("points must be a non-empty N x D array")
        if not np.isfinite(pts).all():
            raise ValueError("points contain non-finite values")
        object.__setattr__(self, "points", pts)
        if self.labels is not None:
            labs = np.asarray(self.labels, dtype=int)
            if labs.shape != (pts.shape[0],):
                raise ValueError(
                    f"labels length {labs.shape} does not match N={pts.shape[0]}"
                )
            object.__setattr__(self, "labels", labs)

    @property
    def n(self) -> int:
        return self.points.shape[0]

    @property
    def dim(self) -> int:
        return self.points.shape[1]


@dataclass(frozen=True)
class DistanceMatrix:
    """Symmetric nonnegative N x N distances with zero diagonal."""

    values: np.ndarray
    metric_name: str = "euclidean"

    def __post_init__(self):
        v = np.asarray(self.values, dtype=float)
        if v.ndim != 2 or v.shape[0] != v.shape[1]:
            raise ValueError("distance matrix must be square")
        if not np.isfinite(v).all():
            raise ValueError("distance matrix contains non-finite values")
        if (v < 0).any():
            raise ValueError("distance matrix contains negative entries")
        if np.abs(np.diagonal(v)).max(initial=0.0) != 0.0:
            raise ValueError("distance matrix diagonal must be zero")
        if not np.array_equal(v, v.T):
            raise ValueError("distance matrix must be symmetric")
        object.__setattr__(self, "values", v)

    @property
    def n(self) -> int:
        return self.values.shape[0]


def load_csv(
    path,
    label_column: int | None = None,
    skip_header: bool = False,
    name: str | None = None,
) -> Dataset:
    """Read a comma-separated point file, one row per point.

    All columns are numeric coordinates except the optional label column.
    Raises ValueError naming the offending 1-based line on malformed rows.
    """
    points: list[list[float]] = []
    labels: list[int] = []
    width = None
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        for lineno, row in enumerate(reader, start=1):
            if skip_header and lineno == 1:
                continue
            if not row or all(not c.strip() for c in row):
                continue
            if width is None:
                width = len(row)
            elif len(row) != width:
                raise ValueError(
                    f"{path}: line {lineno}: expected {width} columns, got {len(row)}"
                )
            if label_column is not None and not (-len(row) <= label_column < len(row)):
                raise ValueError(
                    f"{path}: line {lineno}: label column {label_column} out of range"
                )
            coords = []
            for idx, cell in enumerate(row):
                if label_column is not None and idx == label_column % len(row):
                    try:
                        labels.append(int(float(cell)))
                    except ValueError:
                        raise ValueError(
                            f"{path}: line {lineno}: bad label {cell!r}"
                        ) from None
                    continue
                try:
                    coords.append(float(cell))
                except ValueError:
                    raise ValueError(
                        f"{path}: line {lineno}: bad numeric value {cell!r}"
                    ) from None
            points.append(coords)
    if not points:
        raise ValueError(f"{path}: no data rows")
    return Dataset(
        points=np.array(points, dtype=float),
        labels=np.array(labels, dtype=int) if label_column is not None else None,
        name=name or str(path),
    )


def gen_two_gaussians(
    n_per_cluster: int,
    centers=((0.0, 0.0), (6.0, 0.0)),
    stddev=1.0,
    seed: int = 0,
) -> Dataset:
    """Two isotropic (or per-axis anisotropic) Gaussian blobs with origin labels.

    Deterministic for a given seed. stddev may be a scalar or a per-axis
    sequence to produce elongated clusters.
    """
    if n_per_cluster < 1:
        raise ValueError("n_per_cluster must be >= 1")
    centers = np.asarray(centers, dtype=float)
    if centers.shape[0] != 2:
        raise ValueError("exactly two centers required")
    stddev = np.asarray(stddev, dtype=float)
    if (stddev <= 0).any():
        raise ValueError("stddev must be > 0")
    rng = np.random.default_rng(seed)
    blobs = [rng.normal(c, stddev, size=(n_per_cluster, centers.shape[1])) for c in centers]
    points = np.vstack(blobs)
    labels = np.repeat(np.arange(2), n_per_cluster)
    return Dataset(points=points, labels=labels, name="two-gaussians")


def pairwise_distance(dataset: Dataset, metric: str = "euclidean") -> DistanceMatrix:
    """Dense pairwise distances between all points of the dataset."""
    if metric not in SUPPORTED_METRICS:
        raise ValueError(f"unknown metric {metric!r}; supported: {SUPPORTED_METRICS}")
    x = dataset.points
    if metric == "euclidean":
        sq = ((x[:, None, :] - x[None, :, :]) ** 2).sum(axis=-1)
        d = np.sqrt(np.maximum(sq, 0.0))
    else:
        d = np.abs(x[:, None, :] - x[None, :, :]).sum(axis=-1)
    d = (d + d.T) / 2.0
    np.fill_diagonal(d, 0.0)
    return DistanceMatrix(values=d, metric_name=metric)
