#ifndef ISOCLUST_DATAMODEL_HPP
#define ISOCLUST_DATAMODEL_HPP

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace isoclust {

class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Dense row-major matrix of doubles.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), values_(rows * cols, fill) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<double> values);

    static Matrix from_rows(const std::vector<std::vector<double>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0; }

    std::span<const double> row(std::size_t i) const {
        return {values_.data() + i * cols_, cols_};
    }
    std::span<double> row(std::size_t i) {
        return {values_.data() + i * cols_, cols_};
    }

    double operator()(std::size_t i, std::size_t j) const { return values_[i * cols_ + j]; }
    double& operator()(std::size_t i, std::size_t j) { return values_[i * cols_ + j]; }

    const std::vector<double>& values() const { return values_; }

    void append_row(std::span<const double> r);

    bool operator==(const Matrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> values_;
};

/// Expression matrix: rows are genes (points), columns are conditions.
/// Construction enforces a nonempty shape, finite entries and matching
/// label lengths; empty label vectors are filled with generated names.
class DataMatrix {
public:
    explicit DataMatrix(Matrix values,
                        std::vector<std::string> row_ids = {},
                        std::vector<std::string> col_ids = {});

    static DataMatrix from_rows(const std::vector<std::vector<double>>& rows);

    const Matrix& values() const { return values_; }
    std::size_t n_rows() const { return values_.rows(); }
    std::size_t n_cols() const { return values_.cols(); }
    std::span<const double> row(std::size_t i) const { return values_.row(i); }
    const std::vector<std::string>& row_ids() const { return row_ids_; }
    const std::vector<std::string>& col_ids() const { return col_ids_; }

private:
    Matrix values_;
    std::vector<std::string> row_ids_;
    std::vector<std::string> col_ids_;
};

using Labels = std::vector<std::size_t>;

struct Clustering {
    Labels labels;
    Matrix centroids;
    std::vector<std::size_t> sizes;
    double sse = 0.0;
    std::size_t iterations = 0;

    std::size_t k() const { return centroids.rows(); }
};

struct AlgoParams {
    std::size_t k_init = 2;
    std::size_t min_cluster_size = 2;
    std::size_t max_outer_iterations = 20;
    double split_multiplier = 1.0;
    double split_offset_fraction = 0.5;
    double convergence_tol = 1e-6;
    std::size_t max_kmeans_iterations = 100;

    // Throws ArgumentError naming the first violated bound.
    void validate() const;
};

double squared_distance(std::span<const double> a, std::span<const double> b);
double euclidean_distance(std::span<const double> a, std::span<const double> b);

double recompute_sse(const DataMatrix& data, const Clustering& clustering);

// Sizes per cluster for labels in [0, k).
std::vector<std::size_t> cluster_sizes(const Labels& labels, std::size_t k);

// Builds a finalized Clustering from labels and centroids: counts sizes,
// recomputes sse, and checks the labels are in range.
Clustering make_clustering(const DataMatrix& data, Labels labels, Matrix centroids,
                           std::size_t iterations);

// Throws ArgumentError if labels are out of range, sizes mismatch, or any
// cluster is empty.
void check_partition(const DataMatrix& data, const Clustering& clustering);

}  // namespace isoclust

#endif  // ISOCLUST_DATAMODEL_HPP
