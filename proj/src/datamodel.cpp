#include "isoclust/datamodel.hpp"

#include <cmath>
#include <string>

namespace isoclust {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> values)
    : rows_(rows), cols_(cols), values_(std::move(values)) {
    if (values_.size() != rows_ * cols_) {
        throw ArgumentError("matrix value count does not match shape");
    }
}

Matrix Matrix::from_rows(const std::vector<std::vector<double>>& rows) {
    if (rows.empty()) {
        return {};
    }
    const std::size_t cols = rows.front().size();
    std::vector<double> values;
    values.reserve(rows.size() * cols);
    for (const auto& r : rows) {
        if (r.size() != cols) {
            throw ArgumentError("ragged rows in matrix literal");
        }
        values.insert(values.end(), r.begin(), r.end());
    }
    return Matrix(rows.size(), cols, std::move(values));
}

void Matrix::append_row(std::span<const double> r) {
    if (rows_ == 0 && cols_ == 0) {
        cols_ = r.size();
    }
    if (r.size() != cols_) {
        throw ArgumentError("appended row has wrong dimension");
    }
    values_.insert(values_.end(), r.begin(), r.end());
    ++rows_;
}

DataMatrix::DataMatrix(Matrix values, std::vector<std::string> row_ids,
                       std::vector<std::string> col_ids)
    : values_(std::move(values)), row_ids_(std::move(row_ids)), col_ids_(std::move(col_ids)) {
    if (values_.rows() == 0 || values_.cols() == 0) {
        throw ArgumentError("data matrix must have at least one row and one column");
    }
    for (double v : values_.values()) {
        if (!std::isfinite(v)) {
            throw ArgumentError("data matrix contains a non-finite value");
        }
    }
    if (row_ids_.empty()) {
        row_ids_.reserve(values_.rows());
        for (std::size_t i = 0; i < values_.rows(); ++i) {
            row_ids_.push_back("r" + std::to_string(i));
        }
    }
    if (col_ids_.empty()) {
        col_ids_.reserve(values_.cols());
        for (std::size_t j = 0; j < values_.cols(); ++j) {
            col_ids_.push_back("c" + std::to_string(j));
        }
    }
    if (row_ids_.size() != values_.rows() || col_ids_.size() != values_.cols()) {
        throw ArgumentError("row/column label count does not match matrix shape");
    }
}

DataMatrix DataMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
    return DataMatrix(Matrix::from_rows(rows));
}

void AlgoParams::validate() const {
    if (k_init < 1) throw ArgumentError("k must be at least 1");
    if (min_cluster_size < 1) throw ArgumentError("min cluster size must be at least 1");
    if (max_outer_iterations < 1) throw ArgumentError("max outer iterations must be at least 1");
    if (!(split_multiplier > 0.0)) throw ArgumentError("split multiplier must be positive");
    if (!(split_offset_fraction > 0.0 && split_offset_fraction < 1.0)) {
        throw ArgumentError("split offset must lie in (0, 1)");
    }
    if (!(convergence_tol > 0.0)) throw ArgumentError("convergence tolerance must be positive");
    if (max_kmeans_iterations < 1) throw ArgumentError("max k-means iterations must be at least 1");
}

double squared_distance(std::span<const double> a, std::span<const double> b) {
    double acc = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        const double diff = a[j] - b[j];
        acc += diff * diff;
    }
    return acc;
}

double euclidean_distance(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) {
        throw ArgumentError("dimension mismatch in euclidean_distance");
    }
    if (a.empty()) {
        throw ArgumentError("euclidean_distance needs at least one dimension");
    }
    return std::sqrt(squared_distance(a, b));
}

double recompute_sse(const DataMatrix& data, const Clustering& clustering) {
    if (clustering.labels.size() != data.n_rows()) {
        throw ArgumentError("label count does not match row count");
    }
    if (clustering.centroids.cols() != data.n_cols()) {
        throw ArgumentError("centroid dimension does not match data");
    }
    double sse = 0.0;
    for (std::size_t i = 0; i < data.n_rows(); ++i) {
        const std::size_t label = clustering.labels[i];
        if (label >= clustering.centroids.rows()) {
            throw ArgumentError("label out of range");
        }
        sse += squared_distance(data.row(i), clustering.centroids.row(label));
    }
    return sse;
}

std::vector<std::size_t> cluster_sizes(const Labels& labels, std::size_t k) {
    std::vector<std::size_t> sizes(k, 0);
    for (std::size_t label : labels) {
        if (label >= k) {
            throw ArgumentError("label out of range");
        }
        ++sizes[label];
    }
    return sizes;
}

Clustering make_clustering(const DataMatrix& data, Labels labels, Matrix centroids,
                           std::size_t iterations) {
    Clustering c;
    c.sizes = cluster_sizes(labels, centroids.rows());
    c.labels = std::move(labels);
    c.centroids = std::move(centroids);
    c.iterations = iterations;
    c.sse = recompute_sse(data, c);
    return c;
}

void check_partition(const DataMatrix& data, const Clustering& clustering) {
    if (clustering.labels.size() != data.n_rows()) {
        throw ArgumentError("labels do not cover every point");
    }
    const auto sizes = cluster_sizes(clustering.labels, clustering.k());
    if (sizes != clustering.sizes) {
        throw ArgumentError("stored sizes disagree with labels");
    }
    for (std::size_t s : sizes) {
        if (s == 0) {
            throw ArgumentError("empty cluster in finalized clustering");
        }
    }
}

}  // namespace isoclust
