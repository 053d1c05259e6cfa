#ifndef ISOCLUST_INGEST_HPP
#define ISOCLUST_INGEST_HPP

#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "isoclust/datamodel.hpp"

namespace isoclust {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}
    // 1-based; 0 when the error is not tied to a line.
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

class EmptyDataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class HeaderMode { Auto, Present, Absent };

struct ParseOptions {
    // '\t', ',' or ';'. Empty means detect from the first line.
    std::optional<char> delimiter;
    HeaderMode header = HeaderMode::Auto;
};

// Rectangular grid of optional values; nullopt marks a missing cell.
struct RawTable {
    std::size_t n_rows = 0;
    std::size_t n_cols = 0;
    std::vector<std::optional<double>> cells;
    std::optional<std::vector<std::string>> header;
    std::optional<std::vector<std::string>> row_labels;

    const std::optional<double>& cell(std::size_t i, std::size_t j) const {
        return cells[i * n_cols + j];
    }
};

// True for the tokens treated as missing: empty, NA, NaN, null (any case).
bool is_missing_token(std::string_view token);

RawTable parse_table(std::istream& in, const ParseOptions& options = {});
RawTable parse_table_string(std::string_view text, const ParseOptions& options = {});

struct FilteredData {
    DataMatrix data;
    std::size_t dropped_count;
};

// Removes every row with at least one missing cell. Throws EmptyDataError
// when nothing survives.
FilteredData drop_missing_rows(const RawTable& raw);

// Per-row (x - mean) / population std. Rows with std < 1e-12 become x - mean.
DataMatrix zscore_rows(const DataMatrix& data);

// Writes a header line ("id" + column ids) and one labelled row per gene,
// values at 17 significant digits so they parse back exactly.
void write_table(std::ostream& out, const DataMatrix& data, char delimiter = '\t');

}  // namespace isoclust

#endif  // ISOCLUST_INGEST_HPP
