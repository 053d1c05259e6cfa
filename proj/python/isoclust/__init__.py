"""K-means, deterministic seeding, AGMFI/EAGMFI and silhouette quality."""

from ._core import (
    AlgoParams,
    ArgumentError,
    Clustering,
    EmptyDataError,
    ParseError,
    agmfi,
    compare,
    eagmfi,
    euclidean_distance,
    generate_blobs,
    init_centroids,
    kmeans,
    load_table,
    random_init,
    run_algorithm,
    silhouette,
    zscore_rows,
)

__all__ = [
    "AlgoParams",
    "ArgumentError",
    "Clustering",
    "EmptyDataError",
    "ParseError",
    "agmfi",
    "compare",
    "eagmfi",
    "euclidean_distance",
    "generate_blobs",
    "init_centroids",
    "kmeans",
    "load_table",
    "random_init",
    "run_algorithm",
    "silhouette",
    "zscore_rows",
]
