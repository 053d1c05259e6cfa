#ifndef ISOCLUST_ENHANCED_INIT_HPP
#define ISOCLUST_ENHANCED_INIT_HPP

#include <cstddef>
#include <vector>

#include "isoclust/datamodel.hpp"

namespace isoclust {

struct ShiftedData {
    Matrix values;
    // The global minimum that was subtracted (negative), or 0 when the data
    // had no negative entry and was returned unchanged.
    double shift;
};

ShiftedData shift_nonnegative(const DataMatrix& data);

struct InitCentroids {
    Matrix centroids;
    std::vector<std::size_t> source_rows;
};

// Deterministic seeding: order points by distance from the origin (after
// shifting to the nonnegative orthant), cut the order into k consecutive
// runs whose sizes differ by at most one (larger runs first), and take the
// lower-median member of each run. Centroids are the original, unshifted
// rows. Throws ArgumentError unless 1 <= k <= n_rows.
InitCentroids init_centroids(const DataMatrix& data, std::size_t k);

}  // namespace isoclust

#endif  // ISOCLUST_ENHANCED_INIT_HPP
