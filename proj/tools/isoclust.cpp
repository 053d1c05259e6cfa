// isoclust: cluster-analysis benchmark harness.
//
//   isoclust run     --input data.tsv --algo eagmfi --k 10
//   isoclust compare --input data.tsv --k 10 --format csv
//   isoclust synth   --output blobs.tsv --labels-output truth.tsv
//
// Exit codes: 0 success, 2 input error, 3 configuration error.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "isoclust/benchmark.hpp"
#include "isoclust/ingest.hpp"
#include "isoclust/synth.hpp"

namespace {

constexpr int kExitInput = 2;
constexpr int kExitConfig = 3;

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string input;
    std::string delimiter = "auto";
    std::string header = "auto";
    bool normalize = false;
    std::string algo = "eagmfi";
    isoclust::AlgoParams params;
    std::vector<std::uint64_t> seeds{1, 2, 3, 4, 5};
    std::string format = "table";
    std::string output;
    bool no_timing = false;

    // synth
    std::string centers = "0;10;20";
    std::size_t points = 30;
    double sigma = 0.1;
    std::uint64_t synth_seed = 7;
    std::string labels_output;
};

isoclust::ParseOptions parse_options(const Options& o) {
    isoclust::ParseOptions p;
    if (o.delimiter == "tab") p.delimiter = '\t';
    else if (o.delimiter == "comma") p.delimiter = ',';
    else if (o.delimiter == "semicolon") p.delimiter = ';';
    if (o.header == "yes") p.header = isoclust::HeaderMode::Present;
    else if (o.header == "no") p.header = isoclust::HeaderMode::Absent;
    return p;
}

isoclust::DataMatrix load(const Options& o) {
    std::ifstream in(o.input);
    if (!in) {
        throw isoclust::ParseError("cannot open " + o.input, 0);
    }
    const auto raw = isoclust::parse_table(in, parse_options(o));
    auto filtered = isoclust::drop_missing_rows(raw);
    if (filtered.dropped_count > 0) {
        std::cerr << "note: dropped " << filtered.dropped_count
                  << " row(s) with missing values\n";
    }
    if (!o.normalize) return std::move(filtered.data);
    return isoclust::zscore_rows(filtered.data);
}

void emit(const Options& o, const std::string& text) {
    if (o.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(o.output);
    if (!out) throw ConfigError("cannot write " + o.output);
    out << text;
}

std::string render(const Options& o, const isoclust::ComparisonReport& report) {
    const isoclust::RenderOptions ro{!o.no_timing};
    if (o.format == "csv") return isoclust::render_csv(report, ro);
    if (o.format == "json") return isoclust::render_json(report, ro);
    return isoclust::render_table(report, ro);
}

int benchmark(const Options& o, const std::vector<isoclust::Algorithm>& algorithms) {
    const auto data = load(o);
    if (o.params.k_init > data.n_rows()) {
        throw isoclust::ArgumentError("k=" + std::to_string(o.params.k_init) + " exceeds the " +
                                      std::to_string(data.n_rows()) + " usable rows");
    }
    for (auto a : algorithms) {
        if (isoclust::is_deterministic(a) && algorithms.size() == 1 && o.seeds.size() > 1) {
            std::cerr << "note: " << isoclust::to_string(a)
                      << " is deterministic; seeds are ignored and it runs once\n";
        }
    }
    const std::string dataset = std::filesystem::path(o.input).stem().string();
    const auto report = isoclust::benchmark(data, dataset, algorithms, o.params, o.seeds);
    emit(o, render(o, report));
    return 0;
}

std::vector<std::vector<double>> parse_centers(const std::string& text) {
    std::vector<std::vector<double>> centers;
    std::stringstream points(text);
    std::string point;
    while (std::getline(points, point, ';')) {
        std::vector<double> coords;
        std::stringstream parts(point);
        std::string part;
        while (std::getline(parts, part, ',')) {
            try {
                coords.push_back(std::stod(part));
            } catch (const std::exception&) {
                throw ConfigError("bad center coordinate '" + part + "'");
            }
        }
        centers.push_back(std::move(coords));
    }
    return centers;
}

int synth(const Options& o) {
    const isoclust::BlobSpec spec{parse_centers(o.centers), o.points, o.sigma, o.synth_seed};
    const auto blobs = isoclust::generate_blobs(spec);
    std::ostringstream table;
    isoclust::write_table(table, blobs.data);
    emit(o, table.str());
    if (!o.labels_output.empty()) {
        std::ofstream labels(o.labels_output);
        if (!labels) throw ConfigError("cannot write " + o.labels_output);
        labels << "id\tlabel\n";
        for (std::size_t i = 0; i < blobs.truth.size(); ++i) {
            labels << blobs.data.row_ids()[i] << '\t' << blobs.truth[i] << '\n';
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Clustering benchmark: k-means, enhanced initialization, AGMFI and EAGMFI"};
    app.require_subcommand(1);
    app.set_config("--config", "", "key=value file; command-line flags take precedence");
    Options o;
    o.params.k_init = 10;

    app.add_option("--input", o.input, "Delimited expression matrix (TSV/CSV)");
    app.add_option("--delimiter", o.delimiter)
        ->check(CLI::IsMember({"tab", "comma", "semicolon", "auto"}));
    app.add_option("--header", o.header)->check(CLI::IsMember({"auto", "yes", "no"}));
    app.add_flag("--normalize", o.normalize, "Z-score every row after dropping incomplete rows");
    app.add_option("--algo", o.algo)
        ->check(CLI::IsMember({"kmeans", "kmeans-enhanced", "agmfi", "eagmfi"}));
    app.add_option("--k", o.params.k_init, "Initial cluster count")->capture_default_str();
    app.add_option("--min-cluster-size", o.params.min_cluster_size)->capture_default_str();
    app.add_option("--max-outer-iter", o.params.max_outer_iterations)->capture_default_str();
    app.add_option("--split-multiplier", o.params.split_multiplier)->capture_default_str();
    app.add_option("--split-offset", o.params.split_offset_fraction)->capture_default_str();
    app.add_option("--tol", o.params.convergence_tol)->capture_default_str();
    app.add_option("--seeds", o.seeds, "Comma-separated seeds for randomized algorithms")
        ->delimiter(',');
    app.add_option("--format", o.format)->check(CLI::IsMember({"table", "csv", "json"}));
    app.add_option("--output", o.output, "Write to this file instead of stdout");
    app.add_flag("--no-timing", o.no_timing, "Print runtime as NA for byte-stable output");
    app.fallthrough();

    auto* run = app.add_subcommand("run", "Run one algorithm over the seed list");
    auto* compare = app.add_subcommand("compare", "Run all four algorithms");
    auto* gen = app.add_subcommand("synth", "Write a Gaussian blob dataset");
    gen->add_option("--centers", o.centers, "Centers as 'x,y;x,y;...'")->capture_default_str();
    gen->add_option("--points", o.points, "Points per center")->capture_default_str();
    gen->add_option("--sigma", o.sigma)->capture_default_str();
    gen->add_option("--seed", o.synth_seed)->capture_default_str();
    gen->add_option("--labels-output", o.labels_output, "Ground-truth label file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }

    try {
        o.params.validate();
        if (*gen) return synth(o);
        if (o.input.empty()) throw ConfigError("--input is required");
        if (*run) return benchmark(o, {*isoclust::parse_algorithm(o.algo)});
        if (*compare) {
            return benchmark(o, std::vector<isoclust::Algorithm>(std::begin(isoclust::kAllAlgorithms),
                                                                 std::end(isoclust::kAllAlgorithms)));
        }
    } catch (const isoclust::ParseError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kExitInput;
    } catch (const isoclust::EmptyDataError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kExitInput;
    } catch (const isoclust::ArgumentError& e) {
        std::cerr << "configuration error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << '\n';
        return kExitConfig;
    }
    return kExitConfig;
}
