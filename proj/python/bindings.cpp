#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <fstream>
#include <string>

#include "isoclust/agmfi.hpp"
#include "isoclust/benchmark.hpp"
#include "isoclust/datamodel.hpp"
#include "isoclust/enhanced_init.hpp"
#include "isoclust/ingest.hpp"
#include "isoclust/kmeans.hpp"
#include "isoclust/quality.hpp"
#include "isoclust/synth.hpp"

namespace py = pybind11;
using namespace isoclust;

namespace {

using Array = py::array_t<double, py::array::c_style | py::array::forcecast>;

Matrix to_matrix(const Array& a) {
    if (a.ndim() == 1) {
        // A 1-D array is n points of dimension 1.
        return Matrix(static_cast<std::size_t>(a.shape(0)), 1,
                      std::vector<double>(a.data(), a.data() + a.size()));
    }
    if (a.ndim() != 2) throw py::value_error("expected a 1-D or 2-D array");
    return Matrix(static_cast<std::size_t>(a.shape(0)), static_cast<std::size_t>(a.shape(1)),
                  std::vector<double>(a.data(), a.data() + a.size()));
}

DataMatrix to_data(const Array& a) { return DataMatrix(to_matrix(a)); }

py::array_t<double> from_matrix(const Matrix& m) {
    py::array_t<double> out({m.rows(), m.cols()});
    std::copy(m.values().begin(), m.values().end(), out.mutable_data());
    return out;
}

py::array_t<std::int64_t> from_labels(const Labels& labels) {
    py::array_t<std::int64_t> out(std::vector<py::ssize_t>{static_cast<py::ssize_t>(labels.size())});
    auto* dst = out.mutable_data();
    for (std::size_t i = 0; i < labels.size(); ++i) dst[i] = static_cast<std::int64_t>(labels[i]);
    return out;
}

Clustering clustering_from_labels(const DataMatrix& data, const std::vector<std::size_t>& labels) {
    std::size_t k = 0;
    for (auto l : labels) k = std::max(k, l + 1);
    Labels copy = labels;
    auto update = update_centroids(data, copy, k);
    return make_clustering(data, std::move(copy), std::move(update.centroids), 0);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "K-means, deterministic seeding, AGMFI/EAGMFI and silhouette quality";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<EmptyDataError>(m, "EmptyDataError", PyExc_ValueError);
    py::register_exception<ArgumentError>(m, "ArgumentError", PyExc_ValueError);

    py::class_<AlgoParams>(m, "AlgoParams")
        .def(py::init([](std::size_t k, std::size_t min_cluster_size, std::size_t max_outer_iter,
                         double split_multiplier, double split_offset, double tol,
                         std::size_t max_kmeans_iter) {
                 AlgoParams p{k, min_cluster_size, max_outer_iter, split_multiplier,
                              split_offset, tol, max_kmeans_iter};
                 p.validate();
                 return p;
             }),
             py::arg("k"), py::arg("min_cluster_size") = 2, py::arg("max_outer_iter") = 20,
             py::arg("split_multiplier") = 1.0, py::arg("split_offset") = 0.5,
             py::arg("tol") = 1e-6, py::arg("max_kmeans_iter") = 100)
        .def_readonly("k", &AlgoParams::k_init)
        .def_readonly("min_cluster_size", &AlgoParams::min_cluster_size)
        .def_readonly("max_outer_iter", &AlgoParams::max_outer_iterations)
        .def_readonly("split_multiplier", &AlgoParams::split_multiplier)
        .def_readonly("split_offset", &AlgoParams::split_offset_fraction)
        .def_readonly("tol", &AlgoParams::convergence_tol)
        .def_readonly("max_kmeans_iter", &AlgoParams::max_kmeans_iterations);

    py::class_<Clustering>(m, "Clustering")
        .def_property_readonly("labels", [](const Clustering& c) { return from_labels(c.labels); })
        .def_property_readonly("centroids", [](const Clustering& c) { return from_matrix(c.centroids); })
        .def_property_readonly("sizes", [](const Clustering& c) { return c.sizes; })
        .def_readonly("sse", &Clustering::sse)
        .def_readonly("iterations", &Clustering::iterations)
        .def_property_readonly("k", &Clustering::k)
        .def("__repr__", [](const Clustering& c) {
            return "Clustering(k=" + std::to_string(c.k()) + ", sse=" + std::to_string(c.sse) + ")";
        });

    m.def("euclidean_distance",
          [](const std::vector<double>& a, const std::vector<double>& b) {
              return euclidean_distance(a, b);
          },
          py::arg("a"), py::arg("b"));

    m.def("load_table",
          [](const std::string& path, std::optional<std::string> delimiter, const std::string& header,
             bool normalize) {
              std::ifstream in(path);
              if (!in) throw ParseError("cannot open " + path, 0);
              ParseOptions opts;
              if (delimiter) {
                  if (delimiter->size() != 1) throw ArgumentError("delimiter must be one character");
                  opts.delimiter = delimiter->front();
              }
              if (header == "yes") opts.header = HeaderMode::Present;
              else if (header == "no") opts.header = HeaderMode::Absent;
              auto filtered = drop_missing_rows(parse_table(in, opts));
              DataMatrix data = normalize ? zscore_rows(filtered.data) : filtered.data;
              py::dict out;
              out["values"] = from_matrix(data.values());
              out["row_ids"] = data.row_ids();
              out["col_ids"] = data.col_ids();
              out["dropped"] = filtered.dropped_count;
              return out;
          },
          py::arg("path"), py::arg("delimiter") = py::none(), py::arg("header") = "auto",
          py::arg("normalize") = false);

    m.def("zscore_rows", [](const Array& x) { return from_matrix(zscore_rows(to_data(x)).values()); });

    m.def("init_centroids",
          [](const Array& x, std::size_t k) {
              auto init = init_centroids(to_data(x), k);
              return py::make_tuple(from_matrix(init.centroids), init.source_rows);
          },
          py::arg("data"), py::arg("k"));

    m.def("random_init",
          [](const Array& x, std::size_t k, std::uint64_t seed) {
              return from_matrix(random_init(to_data(x), k, seed));
          },
          py::arg("data"), py::arg("k"), py::arg("seed"));

    m.def("kmeans",
          [](const Array& x, const Array& init, const AlgoParams& params, bool pruned) {
              return run_kmeans(to_data(x), to_matrix(init), params,
                                pruned ? Reassignment::Pruned : Reassignment::Full);
          },
          py::arg("data"), py::arg("init"), py::arg("params"), py::arg("pruned") = false);

    auto history = [](const OuterState& s) {
        py::list out;
        for (const auto& h : s.history) {
            out.append(py::make_tuple(h.iteration, h.k, h.sse, std::string(to_string(h.action))));
        }
        return out;
    };

    m.def("agmfi",
          [history](const Array& x, const Array& init, const AlgoParams& params) {
              auto r = run_agmfi(to_data(x), to_matrix(init), params);
              return py::make_tuple(r.clustering, history(r.state));
          },
          py::arg("data"), py::arg("init"), py::arg("params"));

    m.def("eagmfi",
          [history](const Array& x, const AlgoParams& params) {
              auto r = run_eagmfi(to_data(x), params);
              return py::make_tuple(r.clustering, history(r.state));
          },
          py::arg("data"), py::arg("params"));

    m.def("run_algorithm",
          [](const Array& x, const std::string& name, const AlgoParams& params, std::uint64_t seed) {
              auto algo = parse_algorithm(name);
              if (!algo) throw ArgumentError("unknown algorithm '" + name + "'");
              return run_algorithm(to_data(x), *algo, params, seed);
          },
          py::arg("data"), py::arg("algorithm"), py::arg("params"), py::arg("seed") = 1);

    m.def("silhouette",
          [](const Array& x, const std::vector<std::size_t>& labels) {
              const DataMatrix data = to_data(x);
              const auto r = silhouette(data, clustering_from_labels(data, labels));
              py::dict out;
              out["per_point"] = r.per_point;
              out["mean"] = r.mean;
              out["per_cluster_mean"] = r.per_cluster_mean;
              return out;
          },
          py::arg("data"), py::arg("labels"),
          "Silhouette of the partition given by dense 0-based labels.");

    m.def("generate_blobs",
          [](const std::vector<std::vector<double>>& centers, std::size_t points, double sigma,
             std::uint64_t seed) {
              auto blobs = generate_blobs(BlobSpec{centers, points, sigma, seed});
              return py::make_tuple(from_matrix(blobs.data.values()), from_labels(blobs.truth));
          },
          py::arg("centers"), py::arg("points_per_center"), py::arg("sigma"), py::arg("seed"));

    m.def("compare",
          [](const Array& x, const AlgoParams& params, const std::vector<std::uint64_t>& seeds,
             const std::string& dataset) {
              const std::vector<Algorithm> all(std::begin(kAllAlgorithms), std::end(kAllAlgorithms));
              return render_csv(benchmark(to_data(x), dataset, all, params, seeds), {false});
          },
          py::arg("data"), py::arg("params"), py::arg("seeds") = std::vector<std::uint64_t>{1, 2, 3, 4, 5},
          py::arg("dataset") = "data",
          "Four-algorithm comparison rendered as CSV (runtime column NA).");
}
