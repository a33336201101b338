import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

DATA_DIR = Path(__file__).parent.parent / "data"


@pytest.fixture(scope="session")
def data_dir() -> Path:
    return DATA_DIR


def load_benchmark(name: str):
    from intree import load_csv

    return load_csv(DATA_DIR / f"{name}.csv", label_column=2, name=name)


@pytest.fixture(scope="session")
def two_gaussians():
    from intree import gen_two_gaussians

    return gen_two_gaussians(100, centers=((0.0, 0.0), (6.0, 0.0)), stddev=1.0, seed=7)


def random_points(rng: np.random.Generator, n: int, dim: int = 2) -> np.ndarray:
    return rng.uniform(0.0, 10.0, size=(n, dim))


def random_sparse_graph(rng: np.random.Generator, n: int):
    """Connected-ish random weighted graph as a canonical edge list."""
    edges = {}
    for i in range(1, n):
        j = int(rng.integers(0, i))
        edges[(j, i)] = float(rng.uniform(0.1, 5.0))
    extra = int(rng.integers(0, max(n, 2)))
    for _ in range(extra):
        i, j = sorted(rng.choice(n, size=2, replace=False).tolist())
        edges.setdefault((i, j), float(rng.uniform(0.1, 5.0)))
    return tuple((i, j, w) for (i, j), w in sorted(edges.items()))
