#include "isoclust/enhanced_init.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace isoclust {

ShiftedData shift_nonnegative(const DataMatrix& data) {
    const auto& values = data.values().values();
    const double minimum = *std::min_element(values.begin(), values.end());
    if (minimum >= 0.0) {
        return {data.values(), 0.0};
    }
    std::vector<double> shifted(values.size());
    std::transform(values.begin(), values.end(), shifted.begin(),
                   [minimum](double v) { return v - minimum; });
    return {Matrix(data.n_rows(), data.n_cols(), std::move(shifted)), minimum};
}

InitCentroids init_centroids(const DataMatrix& data, std::size_t k) {
    const std::size_t n = data.n_rows();
    if (k == 0) {
        throw ArgumentError("k must be at least 1");
    }
    if (k > n) {
        throw ArgumentError("k exceeds the number of rows");
    }

    const ShiftedData shifted = shift_nonnegative(data);
    std::vector<double> norm(n);
    for (std::size_t i = 0; i < n; ++i) {
        double acc = 0.0;
        for (double v : shifted.values.row(i)) acc += v * v;
        norm[i] = std::sqrt(acc);
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return norm[a] < norm[b]; });

    InitCentroids out;
    out.centroids = Matrix(k, data.n_cols());
    out.source_rows.reserve(k);
    const std::size_t base = n / k;
    const std::size_t extra = n % k;
    std::size_t start = 0;
    for (std::size_t s = 0; s < k; ++s) {
        const std::size_t q = base + (s < extra ? 1 : 0);
        const std::size_t row = order[start + (q - 1) / 2];
        out.source_rows.push_back(row);
        std::ranges::copy(data.row(row), out.centroids.row(s).begin());
        start += q;
    }
    return out;
}

}  // namespace isoclust
