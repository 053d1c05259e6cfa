#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "isoclust/kmeans.hpp"
#include "isoclust/quality.hpp"
#include "isoclust/synth.hpp"
#include "support/oracles.hpp"

using namespace isoclust;

namespace {

Clustering from_labels(const DataMatrix& data, Labels labels, std::size_t k) {
    auto u = update_centroids(data, labels, k);
    return make_clustering(data, std::move(labels), std::move(u.centroids), 0);
}

}  // namespace

TEST_CASE("silhouette: two tight pairs") {
    const auto data = DataMatrix::from_rows({{0}, {0.1}, {10}, {10.1}});
    const auto s = silhouette(data, from_labels(data, {0, 0, 1, 1}, 2));
    // a = 0.1 for every point; b is the mean distance to the other pair.
    const std::vector<double> b{10.05, 9.95, 9.95, 10.05};
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(s.per_point[i] == doctest::Approx((b[i] - 0.1) / b[i]).epsilon(1e-12));
    }
    CHECK(s.mean == doctest::Approx(0.99).epsilon(1e-3));
    CHECK(s.per_cluster_mean.size() == 2);
}

TEST_CASE("silhouette: duplicated points in far-apart clusters score 1") {
    const auto data = DataMatrix::from_rows({{1, 1}, {1, 1}, {50, 50}, {50, 50}, {50, 50}});
    const auto s = silhouette(data, from_labels(data, {0, 0, 1, 1, 1}, 2));
    for (double v : s.per_point) CHECK(v == 1.0);
    CHECK(s.mean == 1.0);
}

TEST_CASE("silhouette: singletons score exactly 0") {
    const auto data = DataMatrix::from_rows({{0}, {0.2}, {5}, {9}, {9.3}});
    const auto s = silhouette(data, from_labels(data, {0, 0, 1, 2, 2}, 3));
    CHECK(s.per_point[2] == 0.0);
    CHECK(s.per_cluster_mean[1] == 0.0);
}

TEST_CASE("silhouette: coincident points across clusters use the 0/0 rule") {
    const auto data = DataMatrix::from_rows({{2}, {2}});
    const auto s = silhouette(data, make_clustering(data, {0, 1}, Matrix::from_rows({{2}, {2}}), 0));
    CHECK(s.per_point == std::vector<double>{0.0, 0.0});
}

TEST_CASE("silhouette: fewer than two clusters is undefined") {
    const auto data = DataMatrix::from_rows({{0}, {1}});
    CHECK_THROWS_AS(silhouette(data, from_labels(data, {0, 0}, 1)), ArgumentError);
}

TEST_CASE("silhouette matches the direct formula") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 2 + rng() % 29;
        const auto data = oracle::random_data(rng, n, 1 + rng() % 4);
        const std::size_t k = 2 + rng() % std::min<std::size_t>(4, n - 1);
        const auto c = run_kmeans(data, random_init(data, k, rng()), AlgoParams{});
        const auto s = silhouette(data, c);
        const auto expected = oracle::silhouette(oracle::to_points(data.values()), c.labels, c.k());
        for (std::size_t i = 0; i < n; ++i) {
            REQUIRE(std::abs(s.per_point[i] - expected[i]) <= 1e-12);
            REQUIRE(s.per_point[i] >= -1.0);
            REQUIRE(s.per_point[i] <= 1.0);
        }
    }
}

TEST_CASE("silhouette is invariant under relabelling and row order") {
    std::mt19937_64 rng(23);
    const auto data = oracle::random_data(rng, 40, 3);
    const auto c = run_kmeans(data, random_init(data, 4, 9), AlgoParams{});
    const auto base = silhouette(data, c);

    std::vector<std::size_t> perm(data.n_rows());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::ranges::shuffle(perm, rng);
    const std::vector<std::size_t> relabel{2, 0, 3, 1};
    std::vector<std::vector<double>> rows;
    Labels labels;
    for (std::size_t p : perm) {
        rows.emplace_back(data.row(p).begin(), data.row(p).end());
        labels.push_back(relabel[c.labels[p]]);
    }
    const auto shuffled = DataMatrix::from_rows(rows);
    const auto s = silhouette(shuffled, from_labels(shuffled, labels, 4));
    for (std::size_t i = 0; i < perm.size(); ++i) {
        CHECK(std::abs(s.per_point[i] - base.per_point[perm[i]]) <= 1e-12);
    }
    CHECK(std::abs(s.mean - base.mean) <= 1e-12);
}

TEST_CASE("silhouette approaches 1 for tight distant blobs") {
    const auto blobs = generate_blobs(BlobSpec{{{0.0, 0.0}, {100.0, 0.0}}, 50, 0.01, 3});
    const auto s = silhouette(blobs.data, from_labels(blobs.data, blobs.truth, 2));
    CHECK(s.mean > 0.999);
}

TEST_CASE("quality_report") {
    const auto data = DataMatrix::from_rows({{0}, {0.1}, {10}, {10.1}});
    const auto two = from_labels(data, {0, 0, 1, 1}, 2);
    const auto r = quality_report(data, two);
    CHECK(r.final_k == 2);
    REQUIRE(r.silhouette_mean);
    CHECK(*r.silhouette_mean == doctest::Approx(0.99).epsilon(1e-3));
    CHECK(*r.silhouette_mean_x100 == doctest::Approx(99.0).epsilon(1e-3));
    CHECK(r.sse == recompute_sse(data, two));

    const auto one = quality_report(data, from_labels(data, {0, 0, 0, 0}, 1));
    CHECK(one.final_k == 1);
    CHECK_FALSE(one.silhouette_mean);
    CHECK_FALSE(one.silhouette_mean_x100);
}
