// Independent reference implementations and random instance generators.
// Nothing here calls into the code paths it is used to check.
#ifndef ISOCLUST_TESTS_ORACLES_HPP
#define ISOCLUST_TESTS_ORACLES_HPP

#include <cmath>
#include <cstddef>
#include <limits>
#include <random>
#include <vector>

#include "isoclust/datamodel.hpp"

namespace oracle {

using Points = std::vector<std::vector<double>>;

inline double dist(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) s += (a[j] - b[j]) * (a[j] - b[j]);
    return std::sqrt(s);
}

inline Points to_points(const isoclust::Matrix& m) {
    Points out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) out[i].assign(m.row(i).begin(), m.row(i).end());
    return out;
}

// Exhaustive nearest centroid, lowest index on ties.
inline std::vector<std::size_t> nearest(const Points& pts, const Points& centroids) {
    std::vector<std::size_t> out;
    for (const auto& p : pts) {
        std::size_t best = 0;
        double best_d = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < centroids.size(); ++j) {
            const double d = dist(p, centroids[j]);
            if (d < best_d) {
                best_d = d;
                best = j;
            }
        }
        out.push_back(best);
    }
    return out;
}

inline double partition_sse(const Points& pts, const std::vector<std::size_t>& labels, std::size_t k) {
    const std::size_t d = pts.front().size();
    Points means(k, std::vector<double>(d, 0.0));
    std::vector<std::size_t> counts(k, 0);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = 0; j < d; ++j) means[labels[i]][j] += pts[i][j];
        ++counts[labels[i]];
    }
    for (std::size_t c = 0; c < k; ++c) {
        for (auto& v : means[c]) v /= static_cast<double>(counts[c]);
    }
    double sse = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const double e = dist(pts[i], means[labels[i]]);
        sse += e * e;
    }
    return sse;
}

// Global minimum SSE over every partition into exactly k nonempty clusters,
// by enumerating all k^n label vectors.
inline double optimal_sse(const Points& pts, std::size_t k) {
    const std::size_t n = pts.size();
    std::vector<std::size_t> labels(n, 0);
    double best = std::numeric_limits<double>::infinity();
    for (;;) {
        std::vector<std::size_t> counts(k, 0);
        for (auto l : labels) ++counts[l];
        bool all_used = true;
        for (auto c : counts) all_used = all_used && c > 0;
        if (all_used) best = std::min(best, partition_sse(pts, labels, k));
        std::size_t pos = 0;
        while (pos < n && ++labels[pos] == k) labels[pos++] = 0;
        if (pos == n) break;
    }
    return best;
}

// Direct Rousseeuw silhouette per point.
inline std::vector<double> silhouette(const Points& pts, const std::vector<std::size_t>& labels,
                                      std::size_t k) {
    const std::size_t n = pts.size();
    std::vector<double> s(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double a_sum = 0.0;
        std::size_t a_count = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (j != i && labels[j] == labels[i]) {
                a_sum += dist(pts[i], pts[j]);
                ++a_count;
            }
        }
        if (a_count == 0) continue;
        const double a = a_sum / static_cast<double>(a_count);
        double b = std::numeric_limits<double>::infinity();
        for (std::size_t c = 0; c < k; ++c) {
            if (c == labels[i]) continue;
            double sum = 0.0;
            std::size_t count = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (labels[j] == c) {
                    sum += dist(pts[i], pts[j]);
                    ++count;
                }
            }
            if (count > 0) b = std::min(b, sum / static_cast<double>(count));
        }
        const double m = std::max(a, b);
        s[i] = m > 0.0 ? (b - a) / m : 0.0;
    }
    return s;
}

// Random data: a few Gaussian groups plus occasional exact duplicates.
inline isoclust::DataMatrix random_data(std::mt19937_64& rng, std::size_t n, std::size_t d) {
    std::normal_distribution<double> noise(0.0, 1.0);
    std::uniform_real_distribution<double> spread(-10.0, 10.0);
    std::uniform_int_distribution<std::size_t> groups(1, 4);
    const std::size_t g = groups(rng);
    Points centers(g, std::vector<double>(d));
    for (auto& c : centers) {
        for (auto& v : c) v = spread(rng);
    }
    std::vector<std::vector<double>> rows;
    for (std::size_t i = 0; i < n; ++i) {
        if (i > 0 && rng() % 10 == 0) {
            rows.push_back(rows[rng() % rows.size()]);
            continue;
        }
        std::vector<double> r = centers[i % g];
        for (auto& v : r) v += noise(rng);
        rows.push_back(std::move(r));
    }
    return isoclust::DataMatrix::from_rows(rows);
}

}  // namespace oracle

#endif  // ISOCLUST_TESTS_ORACLES_HPP
