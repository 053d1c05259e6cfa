#include "isoclust/ingest.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace isoclust {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.size() >= 2 && s.front() == '"' && s.back() == '"') {
        s = s.substr(1, s.size() - 2);
    }
    return s;
}

bool iequals(std::string_view a, std::string_view b) {
    return a.size() == b.size() &&
           std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
               return std::tolower(static_cast<unsigned char>(x)) ==
                      std::tolower(static_cast<unsigned char>(y));
           });
}

std::optional<double> parse_number(std::string_view token) {
    if (!token.empty() && token.front() == '+') token.remove_prefix(1);
    if (token.empty()) return std::nullopt;
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size() || !std::isfinite(value)) {
        return std::nullopt;
    }
    return value;
}

std::vector<std::string_view> split(std::string_view line, char delim) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        const std::size_t pos = line.find(delim, start);
        if (pos == std::string_view::npos) {
            out.push_back(trim(line.substr(start)));
            return out;
        }
        out.push_back(trim(line.substr(start, pos - start)));
        start = pos + 1;
    }
}

char detect_delimiter(std::string_view first_line) {
    constexpr std::array<char, 3> candidates{'\t', ',', ';'};
    char best = '\t';
    std::ptrdiff_t best_count = 0;
    for (char c : candidates) {
        const auto count = std::count(first_line.begin(), first_line.end(), c);
        if (count > best_count) {
            best = c;
            best_count = count;
        }
    }
    return best;
}

struct Line {
    std::size_t number;
    std::string text;
};

// A header is a first line whose value columns are all non-numeric,
// non-missing tokens.
bool looks_like_header(const std::vector<std::string_view>& tokens) {
    const std::size_t first = tokens.size() > 1 ? 1 : 0;
    for (std::size_t j = first; j < tokens.size(); ++j) {
        if (is_missing_token(tokens[j]) || parse_number(tokens[j])) {
            return false;
        }
    }
    return true;
}

}  // namespace

bool is_missing_token(std::string_view token) {
    token = trim(token);
    return token.empty() || iequals(token, "NA") || iequals(token, "NaN") ||
           iequals(token, "null");
}

RawTable parse_table(std::istream& in, const ParseOptions& options) {
    std::vector<Line> lines;
    std::string text;
    std::size_t number = 0;
    while (std::getline(in, text)) {
        ++number;
        if (!text.empty() && text.back() == '\r') text.pop_back();
        if (number == 1 && text.starts_with("\xEF\xBB\xBF")) text.erase(0, 3);
        if (trim(text).empty()) continue;
        lines.push_back({number, std::move(text)});
    }
    if (lines.empty()) {
        throw ParseError("no data rows", 0);
    }

    const char delim = options.delimiter.value_or(detect_delimiter(lines.front().text));
    if (delim != '\t' && delim != ',' && delim != ';') {
        throw ParseError("unsupported delimiter", 0);
    }

    std::vector<std::vector<std::string_view>> rows;
    rows.reserve(lines.size());
    for (const auto& l : lines) {
        rows.push_back(split(l.text, delim));
    }

    bool has_header = false;
    switch (options.header) {
        case HeaderMode::Present: has_header = true; break;
        case HeaderMode::Absent: has_header = false; break;
        case HeaderMode::Auto: has_header = looks_like_header(rows.front()); break;
    }
    const std::size_t first_data = has_header ? 1 : 0;
    if (rows.size() <= first_data) {
        throw ParseError("no data rows", 0);
    }

    const auto& probe = rows[first_data];
    const bool has_labels = probe.size() > 1 && !is_missing_token(probe.front()) &&
                            !parse_number(probe.front());
    const std::size_t width = probe.size();
    const std::size_t offset = has_labels ? 1 : 0;

    RawTable table;
    table.n_cols = width - offset;
    table.n_rows = rows.size() - first_data;
    table.cells.reserve(table.n_rows * table.n_cols);
    if (has_labels) table.row_labels.emplace();

    for (std::size_t r = first_data; r < rows.size(); ++r) {
        const auto& tokens = rows[r];
        if (tokens.size() != width) {
            throw ParseError("expected " + std::to_string(width) + " fields, found " +
                                 std::to_string(tokens.size()),
                             lines[r].number);
        }
        if (has_labels) table.row_labels->emplace_back(tokens.front());
        for (std::size_t j = offset; j < width; ++j) {
            table.cells.push_back(parse_number(tokens[j]));
        }
    }

    if (has_header) {
        const auto& h = rows.front();
        std::vector<std::string> names;
        if (h.size() == width) {
            for (std::size_t j = offset; j < width; ++j) names.emplace_back(h[j]);
        } else if (has_labels && h.size() == table.n_cols) {
            for (auto t : h) names.emplace_back(t);
        } else {
            throw ParseError("header has " + std::to_string(h.size()) + " fields, expected " +
                                 std::to_string(width),
                             lines.front().number);
        }
        table.header = std::move(names);
    }
    return table;
}

RawTable parse_table_string(std::string_view text, const ParseOptions& options) {
    std::istringstream in{std::string(text)};
    return parse_table(in, options);
}

FilteredData drop_missing_rows(const RawTable& raw) {
    std::vector<double> values;
    std::vector<std::string> row_ids;
    std::size_t kept = 0;
    for (std::size_t i = 0; i < raw.n_rows; ++i) {
        bool complete = true;
        for (std::size_t j = 0; j < raw.n_cols && complete; ++j) {
            complete = raw.cell(i, j).has_value();
        }
        if (!complete) continue;
        for (std::size_t j = 0; j < raw.n_cols; ++j) {
            values.push_back(*raw.cell(i, j));
        }
        row_ids.push_back(raw.row_labels ? (*raw.row_labels)[i] : "r" + std::to_string(i));
        ++kept;
    }
    if (kept == 0) {
        throw EmptyDataError("every row contains a missing value");
    }
    std::vector<std::string> col_ids;
    if (raw.header) col_ids = *raw.header;
    return {DataMatrix(Matrix(kept, raw.n_cols, std::move(values)), std::move(row_ids),
                       std::move(col_ids)),
            raw.n_rows - kept};
}

DataMatrix zscore_rows(const DataMatrix& data) {
    const std::size_t d = data.n_cols();
    if (d < 2) {
        throw ArgumentError("z-score normalization needs at least two columns");
    }
    Matrix out = data.values();
    for (std::size_t i = 0; i < data.n_rows(); ++i) {
        auto row = out.row(i);
        double sum = 0.0;
        for (double v : row) sum += v;
        const double mean = sum / static_cast<double>(d);
        double ss = 0.0;
        for (double v : row) ss += (v - mean) * (v - mean);
        double sigma = std::sqrt(ss / static_cast<double>(d));
        if (sigma < 1e-12) sigma = 1.0;
        for (double& v : row) v = (v - mean) / sigma;
    }
    return DataMatrix(std::move(out), data.row_ids(), data.col_ids());
}

void write_table(std::ostream& out, const DataMatrix& data, char delimiter) {
    out << "id";
    for (const auto& c : data.col_ids()) out << delimiter << c;
    out << '\n';
    char buf[32];
    for (std::size_t i = 0; i < data.n_rows(); ++i) {
        out << data.row_ids()[i];
        for (double v : data.row(i)) {
            std::snprintf(buf, sizeof buf, "%.17g", v);
            out << delimiter << buf;
        }
        out << '\n';
    }
}

}  // namespace isoclust
