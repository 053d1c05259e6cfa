#ifndef ISOCLUST_SYNTH_HPP
#define ISOCLUST_SYNTH_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "isoclust/datamodel.hpp"

namespace isoclust {

struct BlobSpec {
    std::vector<std::vector<double>> centers;
    std::size_t points_per_center = 1;
    double sigma = 0.0;
    std::uint64_t seed = 0;

    void validate() const;
};

struct Blobs {
    DataMatrix data;
    Labels truth;
};

// Isotropic Gaussian blobs, rows grouped by center in the given order and
// named "g<index>". Blob b draws from its own SplitMix64 substream via
// Box-Muller, so adding centers never changes earlier blobs.
Blobs generate_blobs(const BlobSpec& spec);

// Centers 0/10/20 in one dimension, 30 points each, sigma 0.1.
BlobSpec three_blob_fixture(std::uint64_t seed = 7);

}  // namespace isoclust

#endif  // ISOCLUST_SYNTH_HPP
