import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from intree import Dataset, gen_two_gaussians, load_csv, pairwise_distance

from conftest import load_benchmark
from oracles import naive_pairwise_euclidean


def test_load_csv_basic(tmp_path):
    f = tmp_path / "pts.csv"
    f.write_text("0,0\n1,0\n0,1\n")
    ds = load_csv(f)
    assert ds.n == 3 and ds.dim == 2
    assert ds.labels is None


def test_load_csv_labels(tmp_path):
    f = tmp_path / "pts.csv"
    f.write_text("0,0,1\n1,0,2\n0,1,1\n")
    ds = load_csv(f, label_column=2)
    assert ds.n == 3 and ds.dim == 2
    assert ds.labels.tolist() == [1, 2, 1]


def test_load_csv_header_skip(tmp_path):
    f = tmp_path / "pts.csv"
    f.write_text("x,y\n1,2\n3,4\n")
    ds = load_csv(f, skip_header=True)
    assert ds.n == 2


def test_load_csv_bad_value_names_line(tmp_path):
    f = tmp_path / "pts.csv"
    f.write_text("0,0\n1,oops\n")
    with pytest.raises(ValueError, match="line 2"):
        load_csv(f)


def test_load_csv_empty_file(tmp_path):
    f = tmp_path / "pts.csv"
    f.write_text("")
    with pytest.raises(ValueError, match="no data rows"):
        load_csv(f)


def test_load_csv_aggregation_file():
    ds = load_benchmark("aggregation")
    assert ds.n == 788 and ds.dim == 2
    assert len(np.unique(ds.labels)) == 7


def test_gen_two_gaussians_deterministic():
    a = gen_two_gaussians(25, seed=3)
    b = gen_two_gaussians(25, seed=3)
    assert np.array_equal(a.points, b.points)
    assert np.array_equal(a.labels, b.labels)


def test_gen_two_gaussians_tiny_stddev():
    ds = gen_two_gaussians(1, centers=((0, 0), (5, 5)), stddev=1e-9, seed=0)
    assert np.allclose(ds.points, [[0, 0], [5, 5]], atol=1e-6)


def test_gen_two_gaussians_means_near_centers():
    ds = gen_two_gaussians(100, centers=((0, 0), (6, 0)), stddev=1.0, seed=7)
    m0 = ds.points[ds.labels == 0].mean(axis=0)
    m1 = ds.points[ds.labels == 1].mean(axis=0)
    assert np.linalg.norm(m0 - [0, 0]) < 0.5
    assert np.linalg.norm(m1 - [6, 0]) < 0.5


def test_gen_two_gaussians_rejects_bad_args():
    with pytest.raises(ValueError):
        gen_two_gaussians(0, seed=1)
    with pytest.raises(ValueError):
        gen_two_gaussians(5, stddev=0.0, seed=1)


def test_pairwise_345():
    ds = Dataset(points=np.array([[0.0, 0.0], [3.0, 4.0]]))
    d = pairwise_distance(ds)
    assert d.values[0, 1] == pytest.approx(5.0)


def test_pairwise_unknown_metric():
    ds = Dataset(points=np.array([[0.0], [1.0]]))
    with pytest.raises(ValueError, match="unknown metric"):
        pairwise_distance(ds, "cosine")


def test_pairwise_matches_naive_loop():
    rng = np.random.default_rng(11)
    pts = rng.normal(size=(10, 3))
    d = pairwise_distance(Dataset(points=pts)).values
    assert np.allclose(d, naive_pairwise_euclidean(pts.tolist()), atol=1e-12)


@settings(max_examples=40, deadline=None)
@given(
    st.integers(min_value=1, max_value=12),
    st.integers(min_value=1, max_value=4),
    st.integers(min_value=0, max_value=10_000),
)
def test_pairwise_symmetric_zero_diagonal(n, dim, seed):
    rng = np.random.default_rng(seed)
    ds = Dataset(points=rng.uniform(-5, 5, size=(n, dim)))
    d = pairwise_distance(ds).values
    assert np.array_equal(d, d.T)
    assert np.diagonal(d).max(initial=0.0) == 0.0
    assert (d >= 0).all()


@settings(max_examples=25, deadline=None)
@given(st.integers(min_value=3, max_value=10), st.integers(min_value=0, max_value=10_000))
def test_euclidean_triangle_inequality(n, seed):
    rng = np.random.default_rng(seed)
    ds = Dataset(points=rng.uniform(-5, 5, size=(n, 2)))
    d = pairwise_distance(ds).values
    for _ in range(30):
        i, j, k = rng.integers(0, n, size=3)
        assert d[i, k] <= d[i, j] + d[j, k] + 1e-9


def test_dataset_label_length_mismatch():
    with pytest.raises(ValueError):
        Dataset(points=np.zeros((3, 2)), labels=np.array([1, 2]))


def test_distance_matrix_invariants_enforced():
    from intree import DistanceMatrix

    with pytest.raises(ValueError):
        DistanceMatrix(values=np.array([[0.0, 1.0], [2.0, 0.0]]))
    with pytest.raises(ValueError):
        DistanceMatrix(values=np.array([[0.5]]))
    with pytest.raises(ValueError):
        DistanceMatrix(values=np.array([[0.0, -1.0], [-1.0, 0.0]]))
