#include "isoclust/quality.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "isoclust/parallel.hpp"

namespace isoclust {

SilhouetteResult silhouette(const DataMatrix& data, const Clustering& clustering) {
    const std::size_t k = clustering.k();
    if (k < 2) {
        throw ArgumentError("silhouette undefined for fewer than two clusters");
    }
    check_partition(data, clustering);
    const std::size_t n = data.n_rows();

    SilhouetteResult out;
    out.per_point.assign(n, 0.0);
    parallel_for(n, [&](std::size_t i) {
        const std::size_t own = clustering.labels[i];
        if (clustering.sizes[own] == 1) return;
        std::vector<double> sums(k, 0.0);
        const auto xi = data.row(i);
        for (std::size_t j = 0; j < n; ++j) {
            if (j != i) sums[clustering.labels[j]] += euclidean_distance(xi, data.row(j));
        }
        const double a = sums[own] / static_cast<double>(clustering.sizes[own] - 1);
        double b = std::numeric_limits<double>::infinity();
        for (std::size_t c = 0; c < k; ++c) {
            if (c != own) b = std::min(b, sums[c] / static_cast<double>(clustering.sizes[c]));
        }
        const double denom = std::max(a, b);
        out.per_point[i] = denom > 0.0 ? (b - a) / denom : 0.0;
    }, 64);

    out.per_cluster_mean.assign(k, 0.0);
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        total += out.per_point[i];
        out.per_cluster_mean[clustering.labels[i]] += out.per_point[i];
    }
    for (std::size_t c = 0; c < k; ++c) {
        out.per_cluster_mean[c] /= static_cast<double>(clustering.sizes[c]);
    }
    out.mean = total / static_cast<double>(n);
    return out;
}

QualityReport quality_report(const DataMatrix& data, const Clustering& clustering,
                             std::chrono::duration<double, std::milli> elapsed) {
    QualityReport r;
    r.final_k = clustering.k();
    r.sse = recompute_sse(data, clustering);
    r.iterations = clustering.iterations;
    r.elapsed = elapsed;
    if (clustering.k() >= 2) {
        r.silhouette_mean = silhouette(data, clustering).mean;
        r.silhouette_mean_x100 = 100.0 * *r.silhouette_mean;
    }
    return r;
}

}  // namespace isoclust
