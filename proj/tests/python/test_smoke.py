import numpy as np
import pytest

import isoclust


def blobs():
    data, truth = isoclust.generate_blobs([[0.0], [10.0], [20.0]], 30, 0.1, 7)
    return np.asarray(data), np.asarray(truth)


def test_distance():
    assert isoclust.euclidean_distance([0, 0], [3, 4]) == 5.0
    with pytest.raises(ValueError):
        isoclust.euclidean_distance([1], [1, 2])


def test_eagmfi_finds_three_blobs():
    data, truth = blobs()
    clustering, history = isoclust.eagmfi(data, isoclust.AlgoParams(k=10))
    assert clustering.k == 3
    assert history[0][0] == 1
    labels = clustering.labels
    for b in range(3):
        assert len(set(labels[truth == b])) == 1


def test_kmeans_pruned_matches_full():
    data, _ = blobs()
    init = isoclust.random_init(data, 5, 3)
    params = isoclust.AlgoParams(k=5)
    full = isoclust.kmeans(data, init, params)
    pruned = isoclust.kmeans(data, init, params, pruned=True)
    assert np.array_equal(full.labels, pruned.labels)
    assert np.array_equal(full.centroids, pruned.centroids)


def test_silhouette_and_init():
    data = np.array([[0.0], [0.1], [10.0], [10.1]])
    s = isoclust.silhouette(data, [0, 0, 1, 1])
    assert s["mean"] == pytest.approx(0.99, abs=1e-3)
    centroids, rows = isoclust.init_centroids(data, 2)
    assert np.asarray(centroids).shape == (2, 1)
    assert list(rows) == [0, 2]


def test_zscore_rows():
    z = np.asarray(isoclust.zscore_rows(np.array([[1.0, 2.0, 3.0], [5.0, 5.0, 5.0]])))
    assert np.allclose(z[0].mean(), 0.0)
    assert np.allclose(z[0].std(), 1.0)
    assert np.allclose(z[1], 0.0)


def test_load_table(tmp_path):
    f = tmp_path / "m.tsv"
    f.write_text("id\ta\tb\nx\t1\t2\ny\tNA\t3\nz\t4\t5\n")
    t = isoclust.load_table(str(f))
    assert np.asarray(t["values"]).shape == (2, 2)
    assert t["dropped"] == 1
    with pytest.raises(isoclust.ParseError):
        f.write_text("1\t2\n3\n")
        isoclust.load_table(str(f))


def test_compare_csv():
    data, _ = blobs()
    csv = isoclust.compare(data, isoclust.AlgoParams(k=10), dataset="blobs")
    lines = csv.strip().split("\n")
    assert len(lines) == 5
    assert lines[4].startswith("blobs,eagmfi,10,3,")
    assert csv == isoclust.compare(data, isoclust.AlgoParams(k=10), dataset="blobs")


def test_bad_params():
    with pytest.raises(ValueError):
        isoclust.AlgoParams(k=0)
