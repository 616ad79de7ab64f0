#ifndef AREBA_CSV_HPP
#define AREBA_CSV_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "areba/example.hpp"

namespace areba {

/// CSV ingestion failure; the message carries the row/column location.
struct CsvError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A real dataset loaded in memory with features min-max rescaled to [0,1]
/// per column (constant columns map to 0). Rows stream in a seeded shuffle
/// order, one example per step.
class CsvDataset {
public:
    /// Parses a CSV file with a header row, numeric feature columns and a
    /// {0,1} label column identified by name.
    static CsvDataset load(const std::string& path, const std::string& label_column);

    std::size_t rows() const { return examples_.size(); }
    std::size_t dimension() const { return dimension_; }
    const std::vector<std::string>& feature_names() const { return feature_names_; }
    const LabeledExample& row(std::size_t i) const { return examples_[i]; }

    /// Row order for one repetition.
    std::vector<std::size_t> shuffled_order(std::uint64_t shuffle_seed) const;

private:
    std::vector<LabeledExample> examples_;
    std::vector<std::string> feature_names_;
    std::size_t dimension_ = 0;
};

/// One pass over a dataset in a fixed shuffle order.
class CsvStream {
public:
    CsvStream(const CsvDataset& dataset, std::uint64_t shuffle_seed)
        : dataset_(&dataset), order_(dataset.shuffled_order(shuffle_seed)) {}

    LabeledExample next() { return dataset_->row(order_.at(pos_++)); }
    std::size_t size() const { return order_.size(); }

private:
    const CsvDataset* dataset_;
    std::vector<std::size_t> order_;
    std::size_t pos_ = 0;
};

}  // namespace areba

#endif
