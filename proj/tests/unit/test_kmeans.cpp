#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "isoclust/enhanced_init.hpp"
#include "isoclust/kmeans.hpp"
#include "support/oracles.hpp"

using namespace isoclust;

namespace {

const auto kFourPoints = DataMatrix::from_rows({{1}, {2}, {9}, {10}});

}  // namespace

TEST_CASE("assign_points") {
    SUBCASE("nearest centroid") {
        const auto a = assign_points(kFourPoints, Matrix::from_rows({{1}, {9}}));
        CHECK(a.labels == Labels{0, 0, 1, 1});
        CHECK(a.nearest_dist == std::vector<double>{0, 1, 0, 1});
    }
    SUBCASE("ties go to the lower index") {
        const auto a = assign_points(DataMatrix::from_rows({{5}}), Matrix::from_rows({{4}, {6}}));
        CHECK(a.labels == Labels{0});
    }
    SUBCASE("single centroid") {
        const auto a = assign_points(kFourPoints, Matrix::from_rows({{100}}));
        CHECK(a.labels == Labels{0, 0, 0, 0});
    }
    SUBCASE("matches exhaustive search") {
        std::mt19937_64 rng(8);
        for (int t = 0; t < 200; ++t) {
            const auto data = oracle::random_data(rng, 1 + rng() % 80, 1 + rng() % 6);
            const auto cents = oracle::random_data(rng, 1 + rng() % 8, data.n_cols());
            const auto a = assign_points(data, cents.values());
            REQUIRE(a.labels == oracle::nearest(oracle::to_points(data.values()),
                                                oracle::to_points(cents.values())));
        }
    }
}

TEST_CASE("update_centroids") {
    SUBCASE("means") {
        Labels labels{0, 0, 1, 1};
        const auto u = update_centroids(kFourPoints, labels, 2);
        CHECK(u.centroids == Matrix::from_rows({{1.5}, {9.5}}));
        CHECK(u.sizes == std::vector<std::size_t>{2, 2});
        CHECK(u.reseeded.empty());
    }
    SUBCASE("single cluster gives the global mean") {
        Labels labels{0, 0, 0, 0};
        const auto u = update_centroids(kFourPoints, labels, 1);
        CHECK(u.centroids == Matrix::from_rows({{5.5}}));
    }
    SUBCASE("empty cluster takes the farthest point") {
        // Both points are 5 from the mean; the lower row index wins.
        const auto data = DataMatrix::from_rows({{0}, {10}});
        Labels labels{0, 0};
        const auto u = update_centroids(data, labels, 2);
        CHECK(labels == Labels{1, 0});
        CHECK(u.centroids == Matrix::from_rows({{10}, {0}}));
        CHECK(u.sizes == std::vector<std::size_t>{1, 1});
        CHECK(u.reseeded == std::vector<std::size_t>{0});
    }
    SUBCASE("farthest point overall, not the first") {
        const auto data = DataMatrix::from_rows({{0}, {1}, {2}, {30}});
        Labels labels{0, 0, 0, 0};
        const auto u = update_centroids(data, labels, 3);
        CHECK(u.reseeded == std::vector<std::size_t>{3, 0});
        CHECK(labels == Labels{2, 0, 0, 1});
        CHECK(u.centroids == Matrix::from_rows({{1.5}, {30}, {0}}));
    }
}

TEST_CASE("run_kmeans examples") {
    AlgoParams params;
    SUBCASE("four points, two clusters") {
        const auto c = run_kmeans(kFourPoints, Matrix::from_rows({{1}, {9}}), params);
        CHECK(c.labels == Labels{0, 0, 1, 1});
        CHECK(c.centroids == Matrix::from_rows({{1.5}, {9.5}}));
        CHECK(c.sse == 1.0);
        CHECK(oracle::optimal_sse(oracle::to_points(kFourPoints.values()), 2) == 1.0);
    }
    SUBCASE("k = n gives zero sse") {
        const auto c = run_kmeans(kFourPoints, kFourPoints.values(), params);
        CHECK(c.sse == 0.0);
        CHECK(c.sizes == std::vector<std::size_t>{1, 1, 1, 1});
    }
    SUBCASE("starting at a fixed point takes one iteration") {
        KMeansTrace trace;
        const auto c = run_kmeans(kFourPoints, Matrix::from_rows({{1.5}, {9.5}}), params,
                                  Reassignment::Full, &trace);
        CHECK(c.iterations == 1);
        CHECK(c.centroids == Matrix::from_rows({{1.5}, {9.5}}));
    }
    SUBCASE("bad init") {
        CHECK_THROWS_AS(run_kmeans(kFourPoints, Matrix(), params), ArgumentError);
        CHECK_THROWS_AS(run_kmeans(kFourPoints, Matrix(5, 1), params), ArgumentError);
        CHECK_THROWS_AS(run_kmeans(kFourPoints, Matrix(2, 3), params), ArgumentError);
    }
}

TEST_CASE("run_kmeans properties on random instances") {
    std::mt19937_64 rng(2024);
    AlgoParams params;
    for (int t = 0; t < 150; ++t) {
        const auto data = oracle::random_data(rng, 2 + rng() % 60, 1 + rng() % 4);
        const std::size_t k = 1 + rng() % std::min<std::size_t>(6, data.n_rows());
        const auto init = random_init(data, k, rng());

        KMeansTrace full_trace, pruned_trace;
        const auto full = run_kmeans(data, init, params, Reassignment::Full, &full_trace);
        const auto pruned = run_kmeans(data, init, params, Reassignment::Pruned, &pruned_trace);

        REQUIRE_NOTHROW(check_partition(data, full));
        REQUIRE(full.iterations <= params.max_kmeans_iterations);
        REQUIRE(std::abs(recompute_sse(data, full) - full.sse) <= 1e-9 * std::max(1.0, full.sse));
        for (std::size_t i = 1; i < full_trace.sse.size(); ++i) {
            REQUIRE(full_trace.sse[i] <= full_trace.sse[i - 1] + 1e-9);
        }
        REQUIRE(pruned.labels == full.labels);
        REQUIRE(pruned.centroids == full.centroids);
        REQUIRE(pruned_trace.sse == full_trace.sse);
    }
}

TEST_CASE("pruned reassignment skips scans on well-separated data") {
    std::mt19937_64 rng(4);
    std::normal_distribution<double> noise(0.0, 0.5);
    std::vector<std::vector<double>> rows;
    for (int i = 0; i < 300; ++i) rows.push_back({(i % 3) * 50.0 + noise(rng), noise(rng)});
    const auto data = DataMatrix::from_rows(rows);
    KMeansTrace trace;
    AlgoParams params;
    params.convergence_tol = 1e-12;
    run_kmeans(data, init_centroids(data, 6).centroids, params, Reassignment::Pruned, &trace);
    CHECK(trace.skipped_scans > 0);
}

TEST_CASE("Lloyd never beats the exhaustive optimum") {
    std::mt19937_64 rng(77);
    AlgoParams params;
    for (int t = 0; t < 40; ++t) {
        const std::size_t n = 2 + rng() % 9;
        const auto data = oracle::random_data(rng, n, 1 + rng() % 3);
        const std::size_t k = 1 + rng() % std::min<std::size_t>(3, n);
        const auto c = run_kmeans(data, random_init(data, k, rng()), params);
        const double best = oracle::optimal_sse(oracle::to_points(data.values()), k);
        REQUIRE(c.sse >= best - 1e-9 * std::max(1.0, best));
    }
}

TEST_CASE("random_init") {
    const auto data = [] { std::mt19937_64 r(1); return oracle::random_data(r, 100, 2); }();
    CHECK(random_init(data, 10, 42) == random_init(data, 10, 42));

    auto all = random_init_rows(7, 7, 3);
    std::ranges::sort(all);
    CHECK(all == std::vector<std::size_t>{0, 1, 2, 3, 4, 5, 6});

    const auto a = random_init_rows(100, 10, 1);
    const auto b = random_init_rows(100, 10, 2);
    CHECK(std::set(a.begin(), a.end()).size() == 10);
    CHECK(std::set(a.begin(), a.end()) != std::set(b.begin(), b.end()));
    // SplitMix64 output is fixed, so the draw is too.
    CHECK(a == std::vector<std::size_t>{65, 53, 66, 56, 61, 18, 43, 40, 20, 27});

    CHECK_THROWS_AS(random_init_rows(3, 4, 1), ArgumentError);
    CHECK_THROWS_AS(random_init_rows(3, 0, 1), ArgumentError);
}
