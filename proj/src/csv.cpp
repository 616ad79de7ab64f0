#include "areba/csv.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>

namespace areba {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::stringstream ss(line);
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    return cells;
}

std::string trimmed(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return {};
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

double parse_number(const std::string& raw, std::size_t row, const std::string& column) {
    const std::string cell = trimmed(raw);
    double value = 0.0;
    const char* first = cell.data();
    const char* last = cell.data() + cell.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        throw CsvError("row " + std::to_string(row) + ", column '" + column +
                       "': non-numeric value '" + cell + "'");
    return value;
}

}  // namespace

CsvDataset CsvDataset::load(const std::string& path, const std::string& label_column) {
    std::ifstream in(path);
    if (!in) throw CsvError("cannot open '" + path + "'");

    std::string line;
    if (!std::getline(in, line)) throw CsvError("'" + path + "': empty file");

    const std::vector<std::string> header_raw = split_csv_line(line);
    std::vector<std::string> header;
    header.reserve(header_raw.size());
    for (const auto& h : header_raw) header.push_back(trimmed(h));

    const auto label_it = std::find(header.begin(), header.end(), label_column);
    if (label_it == header.end())
        throw CsvError("'" + path + "': missing label column '" + label_column + "'");
    const std::size_t label_idx = static_cast<std::size_t>(label_it - header.begin());
    if (header.size() < 2)
        throw CsvError("'" + path + "': no feature columns besides the label");

    CsvDataset dataset;
    dataset.dimension_ = header.size() - 1;
    for (std::size_t c = 0; c < header.size(); ++c)
        if (c != label_idx) dataset.feature_names_.push_back(header[c]);

    std::size_t row_number = 1;  // header is row 1
    bool saw_positive = false;
    bool saw_negative = false;
    while (std::getline(in, line)) {
        ++row_number;
        if (trimmed(line).empty()) continue;
        const std::vector<std::string> cells = split_csv_line(line);
        if (cells.size() != header.size())
            throw CsvError("row " + std::to_string(row_number) + ": expected " +
                           std::to_string(header.size()) + " cells, found " +
                           std::to_string(cells.size()));

        LabeledExample example;
        example.x.reserve(dataset.dimension_);
        for (std::size_t c = 0; c < cells.size(); ++c) {
            const double value = parse_number(cells[c], row_number, header[c]);
            if (c == label_idx) {
                if (value != 0.0 && value != 1.0)
                    throw CsvError("row " + std::to_string(row_number) + ", column '" +
                                   header[c] + "': label must be 0 or 1");
                example.y = static_cast<int>(value);
            } else {
                example.x.push_back(value);
            }
        }
        saw_positive = saw_positive || example.y == 1;
        saw_negative = saw_negative || example.y == 0;
        dataset.examples_.push_back(std::move(example));
    }

    if (dataset.examples_.empty()) throw CsvError("'" + path + "': no data rows");
    if (!saw_positive || !saw_negative)
        throw CsvError("'" + path + "': need at least one row of each class");

    // Per-feature min-max rescaling to [0,1]; constant features map to 0.
    for (std::size_t c = 0; c < dataset.dimension_; ++c) {
        double lo = std::numeric_limits<double>::infinity();
        double hi = -std::numeric_limits<double>::infinity();
        for (const auto& ex : dataset.examples_) {
            lo = std::min(lo, ex.x[c]);
            hi = std::max(hi, ex.x[c]);
        }
        const double span = hi - lo;
        for (auto& ex : dataset.examples_)
            ex.x[c] = span > 0.0 ? (ex.x[c] - lo) / span : 0.0;
    }
    return dataset;
}

std::vector<std::size_t> CsvDataset::shuffled_order(std::uint64_t shuffle_seed) const {
    std::vector<std::size_t> order(rows());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::mt19937_64 rng(shuffle_seed);
    std::shuffle(order.begin(), order.end(), rng);
    return order;
}

}  // namespace areba
