#include "isoclust/agmfi.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <tuple>

#include "isoclust/enhanced_init.hpp"
#include "isoclust/kmeans.hpp"

namespace isoclust {

namespace {

// Dimensions whose whole-data spread is below this are not split along.
constexpr double kFlatDimension = 1e-12;

std::vector<double> population_std(const DataMatrix& data, const Labels* labels,
                                   std::size_t cluster) {
    const std::size_t d = data.n_cols();
    std::vector<double> mean(d, 0.0);
    std::vector<double> var(d, 0.0);
    std::size_t count = 0;
    for (std::size_t i = 0; i < data.n_rows(); ++i) {
        if (labels && (*labels)[i] != cluster) continue;
        const auto row = data.row(i);
        for (std::size_t j = 0; j < d; ++j) mean[j] += row[j];
        ++count;
    }
    if (count == 0) return var;
    for (double& m : mean) m /= static_cast<double>(count);
    for (std::size_t i = 0; i < data.n_rows(); ++i) {
        if (labels && (*labels)[i] != cluster) continue;
        const auto row = data.row(i);
        for (std::size_t j = 0; j < d; ++j) {
            const double diff = row[j] - mean[j];
            var[j] += diff * diff;
        }
    }
    for (double& v : var) v = std::sqrt(v / static_cast<double>(count));
    return var;
}

// Drops clusters flagged in `removed`, renumbering the rest in order.
// `redirect[c]` gives the surviving cluster that absorbs c's points.
Clustering compact(const DataMatrix& data, const Clustering& source, const Matrix& centroids,
                   const std::vector<bool>& removed, const std::vector<std::size_t>& redirect) {
    const std::size_t k = centroids.rows();
    std::vector<std::size_t> new_index(k, 0);
    Matrix kept;
    std::size_t next = 0;
    for (std::size_t c = 0; c < k; ++c) {
        if (removed[c]) continue;
        new_index[c] = next++;
        kept.append_row(centroids.row(c));
    }
    Labels labels = source.labels;
    for (auto& l : labels) l = new_index[redirect[l]];
    return make_clustering(data, std::move(labels), std::move(kept), source.iterations);
}

}  // namespace

std::string_view to_string(OuterAction action) {
    switch (action) {
        case OuterAction::Seed: return "seed";
        case OuterAction::Split: return "split";
        case OuterAction::Merge: return "merge";
        case OuterAction::Discard: return "discard";
        case OuterAction::Stable: return "stable";
    }
    return "unknown";
}

double compute_merge_factor(const Matrix& centroids) {
    const std::size_t k = centroids.rows();
    if (k < 2) {
        throw ArgumentError("merge factor needs at least two centroids");
    }
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < k; ++i) {
        double sum = 0.0;
        for (std::size_t j = 0; j < k; ++j) {
            if (j != i) sum += euclidean_distance(centroids.row(i), centroids.row(j));
        }
        best = std::min(best, sum / static_cast<double>(k - 1));
    }
    return best;
}

Clustering merge_pass(const DataMatrix& data, const Clustering& clustering, double merge_factor,
                      const AlgoParams& params) {
    const std::size_t k = clustering.k();
    using Pair = std::tuple<double, std::size_t, std::size_t>;
    std::vector<Pair> candidates;
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
            const double d = euclidean_distance(clustering.centroids.row(i), clustering.centroids.row(j));
            if (d < merge_factor) candidates.emplace_back(d, i, j);
        }
    }
    std::ranges::sort(candidates);

    const std::size_t cap = params.k_init / 2;
    Matrix centroids = clustering.centroids;
    std::vector<bool> touched(k, false);
    std::vector<bool> removed(k, false);
    std::vector<std::size_t> redirect(k);
    std::iota(redirect.begin(), redirect.end(), std::size_t{0});
    std::size_t merges = 0;
    for (const auto& [d, i, j] : candidates) {
        if (merges == cap) break;
        if (touched[i] || touched[j]) continue;
        const auto wi = static_cast<double>(clustering.sizes[i]);
        const auto wj = static_cast<double>(clustering.sizes[j]);
        auto target = centroids.row(i);
        const auto other = clustering.centroids.row(j);
        for (std::size_t c = 0; c < target.size(); ++c) {
            target[c] = (wi * target[c] + wj * other[c]) / (wi + wj);
        }
        touched[i] = touched[j] = true;
        removed[j] = true;
        redirect[j] = i;
        ++merges;
    }
    if (merges == 0) return clustering;
    return compact(data, clustering, centroids, removed, redirect);
}

Clustering split_pass(const DataMatrix& data, const Clustering& clustering,
                      const AlgoParams& params) {
    const std::size_t k = clustering.k();
    const std::size_t d = data.n_cols();
    const auto data_std = population_std(data, nullptr, 0);
    const std::size_t min_split_size = 2 * (params.min_cluster_size + 1);

    struct Candidate {
        double ratio;
        std::size_t cluster;
        std::size_t dim;
        double sigma;
    };
    std::vector<Candidate> candidates;
    for (std::size_t c = 0; c < k; ++c) {
        if (clustering.sizes[c] <= min_split_size) continue;
        const auto sigma = population_std(data, &clustering.labels, c);
        Candidate best{-1.0, c, 0, 0.0};
        for (std::size_t j = 0; j < d; ++j) {
            if (data_std[j] <= kFlatDimension) continue;
            const double ratio = sigma[j] / data_std[j];
            if (ratio > best.ratio) best = {ratio, c, j, sigma[j]};
        }
        if (best.sigma > 0.0 && best.ratio >= params.split_multiplier) {
            candidates.push_back(best);
        }
    }
    if (candidates.empty()) return clustering;
    std::ranges::stable_sort(candidates, [](const Candidate& a, const Candidate& b) {
        return a.ratio > b.ratio;
    });

    Matrix centroids = clustering.centroids;
    Labels labels = clustering.labels;
    for (const auto& cand : candidates) {
        std::vector<double> plus(clustering.centroids.row(cand.cluster).begin(),
                                 clustering.centroids.row(cand.cluster).end());
        std::vector<double> minus = plus;
        const double offset = params.split_offset_fraction * cand.sigma;
        plus[cand.dim] += offset;
        minus[cand.dim] -= offset;

        const std::size_t minus_index = centroids.rows();
        std::vector<std::size_t> to_minus;
        std::size_t stay = 0;
        for (std::size_t i = 0; i < labels.size(); ++i) {
            if (clustering.labels[i] != cand.cluster) continue;
            if (squared_distance(data.row(i), minus) < squared_distance(data.row(i), plus)) {
                to_minus.push_back(i);
            } else {
                ++stay;
            }
        }
        if (to_minus.empty() || stay == 0) continue;
        std::ranges::copy(plus, centroids.row(cand.cluster).begin());
        centroids.append_row(minus);
        for (std::size_t i : to_minus) labels[i] = minus_index;
    }
    if (centroids.rows() == k) return clustering;
    return make_clustering(data, std::move(labels), std::move(centroids), clustering.iterations);
}

Clustering discard_small(const DataMatrix& data, const Clustering& clustering,
                         const AlgoParams& params) {
    const std::size_t k = clustering.k();
    std::vector<std::size_t> undersized;
    for (std::size_t c = 0; c < k; ++c) {
        if (clustering.sizes[c] < params.min_cluster_size) undersized.push_back(c);
    }
    if (undersized.empty() || k <= 2) return clustering;
    std::ranges::stable_sort(undersized, [&](std::size_t a, std::size_t b) {
        return clustering.sizes[a] < clustering.sizes[b];
    });
    undersized.resize(std::min(undersized.size(), k - 2));

    std::vector<bool> removed(k, false);
    for (std::size_t c : undersized) removed[c] = true;

    Labels labels = clustering.labels;
    std::vector<bool> received(k, false);
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (!removed[labels[i]]) continue;
        std::size_t best = k;
        double best_d = std::numeric_limits<double>::infinity();
        for (std::size_t c = 0; c < k; ++c) {
            if (removed[c]) continue;
            const double dist = squared_distance(data.row(i), clustering.centroids.row(c));
            if (dist < best_d) {
                best_d = dist;
                best = c;
            }
        }
        labels[i] = best;
        received[best] = true;
    }

    Matrix centroids = clustering.centroids;
    for (std::size_t c = 0; c < k; ++c) {
        if (!received[c]) continue;
        auto row = centroids.row(c);
        std::ranges::fill(row, 0.0);
        std::size_t count = 0;
        for (std::size_t i = 0; i < labels.size(); ++i) {
            if (labels[i] != c) continue;
            const auto x = data.row(i);
            for (std::size_t j = 0; j < row.size(); ++j) row[j] += x[j];
            ++count;
        }
        for (double& v : row) v /= static_cast<double>(count);
    }

    Clustering relabelled = clustering;
    relabelled.labels = std::move(labels);
    std::vector<std::size_t> identity(k);
    std::iota(identity.begin(), identity.end(), std::size_t{0});
    return compact(data, relabelled, centroids, removed, identity);
}

AgmfiResult run_agmfi(const DataMatrix& data, const Matrix& init, const AlgoParams& params) {
    params.validate();
    if (init.rows() == 0 || init.rows() > data.n_rows() || init.cols() != data.n_cols()) {
        throw ArgumentError("initial centroids do not fit the data");
    }

    OuterState state;
    Matrix seeds = init;
    Clustering current;
    Labels previous_labels;
    std::size_t previous_k = 0;
    const std::size_t split_below = (params.k_init + 1) / 2;

    for (std::size_t t = 1; t <= params.max_outer_iterations; ++t) {
        state.outer_iteration = t;
        current = run_kmeans(data, seeds, params);
        if (t == 1) {
            state.history.push_back({t, current.k(), current.sse, OuterAction::Seed});
        }

        const std::size_t before_discard = current.k();
        current = discard_small(data, current, params);
        if (current.k() != before_discard) {
            state.history.push_back({t, current.k(), current.sse, OuterAction::Discard});
        }

        const std::size_t k = current.k();
        bool merge_phase;
        if (k >= 2 * params.k_init) {
            merge_phase = true;
        } else if (k <= split_below) {
            merge_phase = false;
        } else {
            merge_phase = t % 2 == 0;
        }

        OuterAction action = OuterAction::Stable;
        if (merge_phase && k >= 2) {
            state.merge_factor = compute_merge_factor(current.centroids);
            current = merge_pass(data, current, state.merge_factor, params);
            if (current.k() != k) action = OuterAction::Merge;
        } else if (!merge_phase) {
            current = split_pass(data, current, params);
            if (current.k() != k) action = OuterAction::Split;
        }
        state.history.push_back({t, current.k(), current.sse, action});

        if (current.k() == 1) {
            current.iterations = t;
            state.clustering = current;
            return {current, state};
        }
        if (t > 1 && current.k() == previous_k && current.labels == previous_labels) {
            break;
        }
        previous_k = current.k();
        previous_labels = current.labels;
        seeds = current.centroids;
    }

    Clustering final = run_kmeans(data, current.centroids, params);
    final.iterations = state.outer_iteration;
    state.clustering = final;
    return {final, state};
}

AgmfiResult run_eagmfi(const DataMatrix& data, const AlgoParams& params) {
    params.validate();
    if (params.k_init > data.n_rows()) {
        throw ArgumentError("k exceeds the number of rows");
    }
    return run_agmfi(data, init_centroids(data, params.k_init).centroids, params);
}

}  // namespace isoclust
