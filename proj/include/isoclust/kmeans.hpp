#ifndef ISOCLUST_KMEANS_HPP
#define ISOCLUST_KMEANS_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "isoclust/datamodel.hpp"

namespace isoclust {

struct KMeansState {
    Matrix centroids;
    Labels labels;
    std::vector<double> nearest_dist;
    std::size_t iteration = 0;
};

struct Assignment {
    Labels labels;
    std::vector<double> nearest_dist;
};

// Nearest centroid per point; ties go to the lowest cluster index.
Assignment assign_points(const DataMatrix& data, const Matrix& centroids);

struct CentroidUpdate {
    Matrix centroids;
    std::vector<std::size_t> sizes;
    // Points moved into emptied clusters, in repair order.
    std::vector<std::size_t> reseeded;
};

// Cluster means for `labels` over k clusters. An empty cluster takes the
// point farthest from its own centroid among clusters with more than one
// member (lowest index on ties); `labels` is updated to match. Requires
// k <= n_rows.
CentroidUpdate update_centroids(const DataMatrix& data, Labels& labels, std::size_t k);

enum class Reassignment {
    Full,
    // Skip the k-way scan for a point whose distance to its own, updated
    // centroid has not grown and is strictly below a lower bound on every
    // other centroid's distance.
    Pruned,
};

struct KMeansTrace {
    std::vector<double> sse;                  // after each iteration's update
    std::vector<std::size_t> label_changes;   // vs the previous iteration
    std::size_t full_scans = 0;
    std::size_t skipped_scans = 0;
};

// Lloyd iterations from `init` until no label changes, the largest centroid
// move drops below params.convergence_tol, or params.max_kmeans_iterations.
Clustering run_kmeans(const DataMatrix& data, const Matrix& init, const AlgoParams& params,
                      Reassignment mode = Reassignment::Full, KMeansTrace* trace = nullptr);

// k distinct rows drawn without replacement (partial Fisher-Yates on a
// SplitMix64 stream), in draw order.
std::vector<std::size_t> random_init_rows(std::size_t n_rows, std::size_t k, std::uint64_t seed);
Matrix random_init(const DataMatrix& data, std::size_t k, std::uint64_t seed);

}  // namespace isoclust

#endif  // ISOCLUST_KMEANS_HPP
