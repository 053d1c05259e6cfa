#ifndef ISOCLUST_QUALITY_HPP
#define ISOCLUST_QUALITY_HPP

#include <chrono>
#include <cstddef>
#include <optional>
#include <vector>

#include "isoclust/datamodel.hpp"

namespace isoclust {

struct SilhouetteResult {
    std::vector<double> per_point;
    double mean = 0.0;
    std::vector<double> per_cluster_mean;
};

// Rousseeuw silhouette over Euclidean distances, exact O(n^2). Singleton
// members score 0, as does any point with a = b = 0. Throws ArgumentError
// for k < 2.
SilhouetteResult silhouette(const DataMatrix& data, const Clustering& clustering);

struct QualityReport {
    std::size_t final_k = 0;
    double sse = 0.0;
    std::optional<double> silhouette_mean;      // absent for k < 2
    std::optional<double> silhouette_mean_x100;
    std::size_t iterations = 0;
    std::chrono::duration<double, std::milli> elapsed{0};
};

QualityReport quality_report(const DataMatrix& data, const Clustering& clustering,
                             std::chrono::duration<double, std::milli> elapsed = {});

}  // namespace isoclust

#endif  // ISOCLUST_QUALITY_HPP
