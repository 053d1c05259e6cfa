#ifndef ISOCLUST_AGMFI_HPP
#define ISOCLUST_AGMFI_HPP

#include <cstddef>
#include <string_view>
#include <vector>

#include "isoclust/datamodel.hpp"

namespace isoclust {

enum class OuterAction { Seed, Split, Merge, Discard, Stable };

std::string_view to_string(OuterAction action);

struct HistoryRecord {
    std::size_t iteration;
    std::size_t k;
    double sse;
    OuterAction action;

    bool operator==(const HistoryRecord&) const = default;
};

struct OuterState {
    Clustering clustering;
    std::size_t outer_iteration = 0;
    // Last merge threshold computed; 0 until a merge pass runs.
    double merge_factor = 0.0;
    std::vector<HistoryRecord> history;
};

struct AgmfiResult {
    Clustering clustering;
    OuterState state;
};

// Minimum over clusters of the mean distance from that centroid to every
// other centroid. Requires at least two centroids.
double compute_merge_factor(const Matrix& centroids);

// Merges centroid pairs closer than merge_factor, closest first, each
// cluster at most once, at most floor(k_init / 2) merges. The merged
// centroid is the size-weighted mean; the pair keeps the lower index.
Clustering merge_pass(const DataMatrix& data, const Clustering& clustering, double merge_factor,
                      const AlgoParams& params);

// Splits every cluster whose largest per-dimension ratio of within-cluster
// to whole-data population std reaches split_multiplier and whose size
// exceeds 2 * (min_cluster_size + 1). The two halves sit at
// c +/- split_offset_fraction * sigma along that dimension; the "+" half
// keeps the index, the "-" half is appended.
Clustering split_pass(const DataMatrix& data, const Clustering& clustering,
                      const AlgoParams& params);

// Deletes clusters smaller than min_cluster_size and moves their points to
// the nearest survivor, never leaving fewer than two clusters.
Clustering discard_small(const DataMatrix& data, const Clustering& clustering,
                         const AlgoParams& params);

AgmfiResult run_agmfi(const DataMatrix& data, const Matrix& init, const AlgoParams& params);

// run_agmfi seeded by init_centroids(data, params.k_init); no randomness.
AgmfiResult run_eagmfi(const DataMatrix& data, const AlgoParams& params);

}  // namespace isoclust

#endif  // ISOCLUST_AGMFI_HPP
