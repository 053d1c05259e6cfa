#include "isoclust/synth.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "isoclust/random.hpp"

namespace isoclust {

void BlobSpec::validate() const {
    if (centers.empty()) throw ArgumentError("at least one center is required");
    if (points_per_center < 1) throw ArgumentError("points per center must be at least 1");
    if (!(sigma >= 0.0) || !std::isfinite(sigma)) throw ArgumentError("sigma must be finite and nonnegative");
    const std::size_t d = centers.front().size();
    if (d == 0) throw ArgumentError("centers must have at least one dimension");
    for (const auto& c : centers) {
        if (c.size() != d) throw ArgumentError("centers differ in dimension");
    }
}

Blobs generate_blobs(const BlobSpec& spec) {
    spec.validate();
    const std::size_t d = spec.centers.front().size();
    const std::size_t n = spec.centers.size() * spec.points_per_center;
    Matrix values(n, d);
    Labels truth;
    truth.reserve(n);
    std::vector<std::string> row_ids;
    row_ids.reserve(n);

    const SplitMix64 root(spec.seed);
    std::size_t row = 0;
    for (std::size_t b = 0; b < spec.centers.size(); ++b) {
        SplitMix64 rng = root.substream(b);
        bool have_spare = false;
        double spare = 0.0;
        auto gaussian = [&] {
            if (have_spare) {
                have_spare = false;
                return spare;
            }
            const double radius = std::sqrt(-2.0 * std::log(rng.unit_open_closed()));
            const double angle = 2.0 * std::numbers::pi * rng.unit_open_closed();
            spare = radius * std::sin(angle);
            have_spare = true;
            return radius * std::cos(angle);
        };
        for (std::size_t p = 0; p < spec.points_per_center; ++p, ++row) {
            auto out = values.row(row);
            for (std::size_t j = 0; j < d; ++j) {
                const double z = gaussian();
                out[j] = spec.sigma == 0.0 ? spec.centers[b][j] : spec.centers[b][j] + spec.sigma * z;
            }
            truth.push_back(b);
            row_ids.push_back("g" + std::to_string(row));
        }
    }
    return {DataMatrix(std::move(values), std::move(row_ids)), std::move(truth)};
}

BlobSpec three_blob_fixture(std::uint64_t seed) {
    return BlobSpec{{{0.0}, {10.0}, {20.0}}, 30, 0.1, seed};
}

}  // namespace isoclust
