#include "isoclust/benchmark.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include "json.hpp"

#include "isoclust/agmfi.hpp"
#include "isoclust/enhanced_init.hpp"
#include "isoclust/kmeans.hpp"
#include "isoclust/parallel.hpp"

namespace isoclust {

namespace {

std::string fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

std::string fixed6(const std::optional<double>& v) { return v ? fixed6(*v) : "NA"; }

// The value a reader recovers from the 6-decimal text.
double rounded6(double v) { return std::stod(fixed6(v)); }

struct RunResult {
    std::size_t final_k;
    std::optional<double> silhouette;
    double sse;
    double elapsed_ms;
};

AlgorithmRow summarize(Algorithm algo, const std::vector<RunResult>& runs) {
    AlgorithmRow row;
    row.algorithm = algo;
    row.runs = runs.size();

    std::map<std::size_t, std::size_t> k_counts;
    for (const auto& r : runs) ++k_counts[r.final_k];
    std::size_t best_count = 0;
    for (const auto& [k, count] : k_counts) {
        if (count > best_count) {
            best_count = count;
            row.final_k = k;
        }
    }
    row.final_k_agrees = k_counts.size() == 1;

    std::vector<double> sil;
    row.sse_best = runs.front().sse;
    double elapsed = 0.0;
    for (const auto& r : runs) {
        if (r.silhouette) sil.push_back(*r.silhouette);
        row.sse_best = std::min(row.sse_best, r.sse);
        elapsed += r.elapsed_ms;
    }
    row.runtime_ms = elapsed / static_cast<double>(runs.size());
    if (!sil.empty()) {
        double sum = 0.0;
        for (double s : sil) sum += s;
        const double mean = sum / static_cast<double>(sil.size());
        double ss = 0.0;
        for (double s : sil) ss += (s - mean) * (s - mean);
        row.silhouette_mean = mean;
        row.silhouette_best = *std::max_element(sil.begin(), sil.end());
        row.silhouette_std = std::sqrt(ss / static_cast<double>(sil.size()));
    }
    return row;
}

}  // namespace

std::string_view to_string(Algorithm algo) {
    switch (algo) {
        case Algorithm::KMeans: return "kmeans";
        case Algorithm::KMeansEnhanced: return "kmeans-enhanced";
        case Algorithm::Agmfi: return "agmfi";
        case Algorithm::Eagmfi: return "eagmfi";
    }
    return "unknown";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) {
    for (Algorithm a : kAllAlgorithms) {
        if (to_string(a) == name) return a;
    }
    return std::nullopt;
}

bool is_deterministic(Algorithm algo) {
    return algo == Algorithm::KMeansEnhanced || algo == Algorithm::Eagmfi;
}

Clustering run_algorithm(const DataMatrix& data, Algorithm algo, const AlgoParams& params,
                         std::uint64_t seed) {
    params.validate();
    if (params.k_init > data.n_rows()) {
        throw ArgumentError("k exceeds the number of rows");
    }
    switch (algo) {
        case Algorithm::KMeans:
            return run_kmeans(data, random_init(data, params.k_init, seed), params);
        case Algorithm::KMeansEnhanced:
            return run_kmeans(data, init_centroids(data, params.k_init).centroids, params,
                              Reassignment::Pruned);
        case Algorithm::Agmfi:
            return run_agmfi(data, random_init(data, params.k_init, seed), params).clustering;
        case Algorithm::Eagmfi:
            return run_eagmfi(data, params).clustering;
    }
    throw ArgumentError("unknown algorithm");
}

ComparisonReport benchmark(const DataMatrix& data, std::string dataset,
                           const std::vector<Algorithm>& algorithms, const AlgoParams& params,
                           const std::vector<std::uint64_t>& seeds) {
    params.validate();
    if (params.k_init > data.n_rows()) {
        throw ArgumentError("k exceeds the number of rows");
    }
    if (seeds.empty()) {
        throw ArgumentError("at least one seed is required");
    }

    struct Job {
        std::size_t algo_slot;
        std::uint64_t seed;
    };
    std::vector<Job> jobs;
    for (std::size_t a = 0; a < algorithms.size(); ++a) {
        if (is_deterministic(algorithms[a])) {
            jobs.push_back({a, 0});
        } else {
            for (auto s : seeds) jobs.push_back({a, s});
        }
    }

    std::vector<RunResult> results(jobs.size());
    parallel_for(jobs.size(), [&](std::size_t j) {
        const auto start = std::chrono::steady_clock::now();
        const Clustering c = run_algorithm(data, algorithms[jobs[j].algo_slot], params, jobs[j].seed);
        const auto elapsed = std::chrono::duration<double, std::milli>(
            std::chrono::steady_clock::now() - start);
        const QualityReport q = quality_report(data, c, elapsed);
        results[j] = {q.final_k, q.silhouette_mean, q.sse, q.elapsed.count()};
    }, 1);

    ComparisonReport report{std::move(dataset), params.k_init, {}};
    for (std::size_t a = 0; a < algorithms.size(); ++a) {
        std::vector<RunResult> runs;
        for (std::size_t j = 0; j < jobs.size(); ++j) {
            if (jobs[j].algo_slot == a) runs.push_back(results[j]);
        }
        report.rows.push_back(summarize(algorithms[a], runs));
    }
    return report;
}

std::string render_csv(const ComparisonReport& report, const RenderOptions& options) {
    std::ostringstream out;
    out << "dataset,algorithm,initial_k,final_k,silhouette_mean,silhouette_x100,sse,runtime_ms\n";
    for (const auto& row : report.rows) {
        out << report.dataset << ',' << to_string(row.algorithm) << ',' << report.initial_k << ','
            << row.final_k << ',' << fixed6(row.silhouette_mean) << ','
            << fixed6(row.silhouette_mean ? std::optional(100.0 * *row.silhouette_mean) : std::nullopt)
            << ',' << fixed6(row.sse_best) << ','
            << (options.timing ? fixed6(row.runtime_ms) : std::string("NA")) << '\n';
    }
    return out.str();
}

std::string render_json(const ComparisonReport& report, const RenderOptions& options) {
    using nlohmann::ordered_json;
    auto number = [](const std::optional<double>& v) -> ordered_json {
        return v ? ordered_json(rounded6(*v)) : ordered_json(nullptr);
    };
    ordered_json doc;
    doc["dataset"] = report.dataset;
    doc["initial_k"] = report.initial_k;
    doc["rows"] = ordered_json::array();
    for (const auto& row : report.rows) {
        ordered_json r;
        r["algorithm"] = std::string(to_string(row.algorithm));
        r["final_k"] = row.final_k;
        r["final_k_agrees"] = row.final_k_agrees;
        r["runs"] = row.runs;
        r["silhouette_mean"] = number(row.silhouette_mean);
        r["silhouette_x100"] =
            number(row.silhouette_mean ? std::optional(100.0 * *row.silhouette_mean) : std::nullopt);
        r["silhouette_best"] = number(row.silhouette_best);
        r["silhouette_std"] = number(row.silhouette_std);
        r["sse"] = rounded6(row.sse_best);
        r["runtime_ms"] = options.timing ? number(row.runtime_ms) : ordered_json(nullptr);
        doc["rows"].push_back(std::move(r));
    }
    return doc.dump(2) + "\n";
}

std::string csv_from_json(const std::string& json_text) {
    const auto doc = nlohmann::json::parse(json_text);
    auto cell = [](const nlohmann::json& v) {
        return v.is_null() ? std::string("NA") : fixed6(v.get<double>());
    };
    std::ostringstream out;
    out << "dataset,algorithm,initial_k,final_k,silhouette_mean,silhouette_x100,sse,runtime_ms\n";
    for (const auto& r : doc.at("rows")) {
        out << doc.at("dataset").get<std::string>() << ',' << r.at("algorithm").get<std::string>()
            << ',' << doc.at("initial_k").get<std::size_t>() << ','
            << r.at("final_k").get<std::size_t>() << ',' << cell(r.at("silhouette_mean")) << ','
            << cell(r.at("silhouette_x100")) << ',' << cell(r.at("sse")) << ','
            << cell(r.at("runtime_ms")) << '\n';
    }
    return out.str();
}

std::string render_table(const ComparisonReport& report, const RenderOptions& options) {
    std::ostringstream out;
    char line[256];
    out << "dataset: " << report.dataset << "  initial_k: " << report.initial_k << '\n';
    std::snprintf(line, sizeof line, "%-16s %8s %5s %12s %12s %12s %12s %14s %12s\n", "algorithm",
                  "final_k", "runs", "sil_mean", "sil_best", "sil_std", "sil_x100", "sse_best",
                  "runtime_ms");
    out << line;
    bool disagreement = false;
    for (const auto& row : report.rows) {
        const std::string k = std::to_string(row.final_k) + (row.final_k_agrees ? "" : "*");
        disagreement = disagreement || !row.final_k_agrees;
        std::snprintf(
            line, sizeof line, "%-16s %8s %5zu %12s %12s %12s %12s %14s %12s\n",
            std::string(to_string(row.algorithm)).c_str(), k.c_str(), row.runs,
            fixed6(row.silhouette_mean).c_str(), fixed6(row.silhouette_best).c_str(),
            fixed6(row.silhouette_std).c_str(),
            fixed6(row.silhouette_mean ? std::optional(100.0 * *row.silhouette_mean) : std::nullopt)
                .c_str(),
            fixed6(row.sse_best).c_str(),
            options.timing ? fixed6(row.runtime_ms).c_str() : "NA");
        out << line;
    }
    if (disagreement) {
        out << "* runs disagreed on the final cluster count; the modal value is shown\n";
    }
    return out.str();
}

}  // namespace isoclust
