#include "isoclust/kmeans.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "isoclust/parallel.hpp"
#include "isoclust/random.hpp"

namespace isoclust {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Relative slack on the skip test so rounding in the bound never hides a
// genuinely closer centroid.
constexpr double kBoundSlack = 1e-9;

struct Scan {
    std::size_t best;
    double best_sq;
    double second_sq;
};

Scan scan_centroids(std::span<const double> point, const Matrix& centroids) {
    Scan s{0, kInf, kInf};
    for (std::size_t j = 0; j < centroids.rows(); ++j) {
        const double d = squared_distance(point, centroids.row(j));
        if (d < s.best_sq) {
            s.second_sq = s.best_sq;
            s.best_sq = d;
            s.best = j;
        } else if (d < s.second_sq) {
            s.second_sq = d;
        }
    }
    return s;
}

void cluster_mean(const DataMatrix& data, const Labels& labels, std::size_t cluster,
                  std::span<double> out) {
    std::ranges::fill(out, 0.0);
    std::size_t count = 0;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] != cluster) continue;
        const auto row = data.row(i);
        for (std::size_t j = 0; j < out.size(); ++j) out[j] += row[j];
        ++count;
    }
    if (count > 0) {
        for (double& v : out) v /= static_cast<double>(count);
    }
}

}  // namespace

Assignment assign_points(const DataMatrix& data, const Matrix& centroids) {
    if (centroids.rows() == 0 || centroids.cols() != data.n_cols()) {
        throw ArgumentError("centroids must be nonempty with the data's dimension");
    }
    Assignment a{Labels(data.n_rows()), std::vector<double>(data.n_rows())};
    parallel_for(data.n_rows(), [&](std::size_t i) {
        const Scan s = scan_centroids(data.row(i), centroids);
        a.labels[i] = s.best;
        a.nearest_dist[i] = std::sqrt(s.best_sq);
    });
    return a;
}

CentroidUpdate update_centroids(const DataMatrix& data, Labels& labels, std::size_t k) {
    if (k == 0 || k > data.n_rows()) {
        throw ArgumentError("cluster count must be in [1, n_rows]");
    }
    CentroidUpdate u{Matrix(k, data.n_cols()), cluster_sizes(labels, k), {}};
    for (std::size_t c = 0; c < k; ++c) {
        cluster_mean(data, labels, c, u.centroids.row(c));
    }
    for (std::size_t empty = 0; empty < k; ++empty) {
        if (u.sizes[empty] != 0) continue;
        std::size_t donor_point = 0;
        double farthest = -1.0;
        for (std::size_t i = 0; i < labels.size(); ++i) {
            if (u.sizes[labels[i]] < 2) continue;
            const double d = squared_distance(data.row(i), u.centroids.row(labels[i]));
            if (d > farthest) {
                farthest = d;
                donor_point = i;
            }
        }
        const std::size_t donor = labels[donor_point];
        labels[donor_point] = empty;
        --u.sizes[donor];
        u.sizes[empty] = 1;
        std::ranges::copy(data.row(donor_point), u.centroids.row(empty).begin());
        cluster_mean(data, labels, donor, u.centroids.row(donor));
        u.reseeded.push_back(donor_point);
    }
    return u;
}

Clustering run_kmeans(const DataMatrix& data, const Matrix& init, const AlgoParams& params,
                      Reassignment mode, KMeansTrace* trace) {
    const std::size_t n = data.n_rows();
    const std::size_t k = init.rows();
    if (k == 0 || init.cols() != data.n_cols()) {
        throw ArgumentError("initial centroids must be nonempty with the data's dimension");
    }
    if (k > n) {
        throw ArgumentError("more initial centroids than points");
    }
    const bool pruned = mode == Reassignment::Pruned;

    KMeansState state;
    state.centroids = init;
    state.labels.assign(n, 0);
    state.nearest_dist.assign(n, 0.0);
    // Lower bound on the distance from each point to any centroid other than
    // its own; only maintained in pruned mode.
    std::vector<double> other_bound(n, 0.0);
    std::vector<unsigned char> scanned(n, 0);
    Labels previous;

    for (state.iteration = 1; state.iteration <= params.max_kmeans_iterations; ++state.iteration) {
        const bool full_pass = !pruned || state.iteration == 1;
        parallel_for(n, [&](std::size_t i) {
            const auto point = data.row(i);
            if (!full_pass) {
                const double d = std::sqrt(squared_distance(point, state.centroids.row(state.labels[i])));
                if (d <= state.nearest_dist[i] && d < other_bound[i] * (1.0 - kBoundSlack)) {
                    state.nearest_dist[i] = d;
                    scanned[i] = 0;
                    return;
                }
            }
            const Scan s = scan_centroids(point, state.centroids);
            state.labels[i] = s.best;
            state.nearest_dist[i] = std::sqrt(s.best_sq);
            other_bound[i] = std::sqrt(s.second_sq);
            scanned[i] = 1;
        });

        CentroidUpdate update = update_centroids(data, state.labels, k);
        for (std::size_t i : update.reseeded) {
            state.nearest_dist[i] = 0.0;
            other_bound[i] = 0.0;
        }

        double max_move = 0.0;
        for (std::size_t c = 0; c < k; ++c) {
            max_move = std::max(max_move,
                                std::sqrt(squared_distance(state.centroids.row(c), update.centroids.row(c))));
        }
        if (!std::isfinite(max_move)) {
            throw NumericError("non-finite centroid encountered during k-means");
        }
        if (pruned) {
            for (double& b : other_bound) b -= max_move;
        }

        std::size_t changes = n;
        if (!previous.empty()) {
            changes = 0;
            for (std::size_t i = 0; i < n; ++i) changes += previous[i] != state.labels[i];
        }
        state.centroids = std::move(update.centroids);
        previous = state.labels;

        if (trace) {
            double sse = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                sse += squared_distance(data.row(i), state.centroids.row(state.labels[i]));
            }
            trace->sse.push_back(sse);
            trace->label_changes.push_back(changes);
            const auto full = static_cast<std::size_t>(std::count(scanned.begin(), scanned.end(), 1));
            trace->full_scans += full;
            trace->skipped_scans += n - full;
        }
        if (changes == 0 || max_move < params.convergence_tol) {
            break;
        }
    }
    const std::size_t iterations = std::min(state.iteration, params.max_kmeans_iterations);
    return make_clustering(data, std::move(state.labels), std::move(state.centroids), iterations);
}

std::vector<std::size_t> random_init_rows(std::size_t n_rows, std::size_t k, std::uint64_t seed) {
    if (k == 0 || k > n_rows) {
        throw ArgumentError("k must be in [1, n_rows]");
    }
    std::vector<std::size_t> pool(n_rows);
    std::iota(pool.begin(), pool.end(), std::size_t{0});
    SplitMix64 rng(seed);
    for (std::size_t s = 0; s < k; ++s) {
        const std::size_t pick = s + static_cast<std::size_t>(rng.below(n_rows - s));
        std::swap(pool[s], pool[pick]);
    }
    pool.resize(k);
    return pool;
}

Matrix random_init(const DataMatrix& data, std::size_t k, std::uint64_t seed) {
    Matrix out(k, data.n_cols());
    const auto rows = random_init_rows(data.n_rows(), k, seed);
    for (std::size_t s = 0; s < k; ++s) {
        std::ranges::copy(data.row(rows[s]), out.row(s).begin());
    }
    return out;
}

}  // namespace isoclust
