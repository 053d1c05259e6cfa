#ifndef ISOCLUST_BENCHMARK_HPP
#define ISOCLUST_BENCHMARK_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "isoclust/datamodel.hpp"
#include "isoclust/quality.hpp"

namespace isoclust {

enum class Algorithm { KMeans, KMeansEnhanced, Agmfi, Eagmfi };

inline constexpr Algorithm kAllAlgorithms[] = {Algorithm::KMeans, Algorithm::KMeansEnhanced,
                                               Algorithm::Agmfi, Algorithm::Eagmfi};

std::string_view to_string(Algorithm algo);
std::optional<Algorithm> parse_algorithm(std::string_view name);
bool is_deterministic(Algorithm algo);

// One clustering run; `seed` is ignored by deterministic algorithms.
Clustering run_algorithm(const DataMatrix& data, Algorithm algo, const AlgoParams& params,
                         std::uint64_t seed);

struct AlgorithmRow {
    Algorithm algorithm;
    std::size_t final_k = 0;        // modal over runs, smallest on ties
    bool final_k_agrees = true;     // every run finished with final_k
    std::size_t runs = 0;
    std::optional<double> silhouette_mean;  // over runs with k >= 2
    std::optional<double> silhouette_best;
    std::optional<double> silhouette_std;   // population std over runs
    double sse_best = 0.0;
    double runtime_ms = 0.0;                // mean wall time per run
};

struct ComparisonReport {
    std::string dataset;
    std::size_t initial_k = 0;
    std::vector<AlgorithmRow> rows;
};

// Runs every (algorithm, seed) pair on a worker pool; deterministic
// algorithms run once. Row order follows `algorithms`.
ComparisonReport benchmark(const DataMatrix& data, std::string dataset,
                           const std::vector<Algorithm>& algorithms, const AlgoParams& params,
                           const std::vector<std::uint64_t>& seeds);

struct RenderOptions {
    bool timing = true;
};

// Columns: dataset,algorithm,initial_k,final_k,silhouette_mean,
// silhouette_x100,sse,runtime_ms. Undefined values print as NA.
std::string render_csv(const ComparisonReport& report, const RenderOptions& options = {});
std::string render_json(const ComparisonReport& report, const RenderOptions& options = {});
std::string render_table(const ComparisonReport& report, const RenderOptions& options = {});

// Rebuilds the CSV rendering from render_json output.
std::string csv_from_json(const std::string& json_text);

}  // namespace isoclust

#endif  // ISOCLUST_BENCHMARK_HPP
