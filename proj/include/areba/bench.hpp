#ifndef AREBA_BENCH_HPP
#define AREBA_BENCH_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "areba/csv.hpp"
#include "areba/learners.hpp"
#include "areba/prequential.hpp"
#include "areba/stream.hpp"

namespace areba {

enum class DatasetKind { Circle, Sine, Sea, Csv };

/// Accepts circle | sine | sea | csv.
DatasetKind dataset_kind_from_string(const std::string& name);
std::string to_string(DatasetKind kind);

struct ExperimentConfig {
    LearnerConfig learner;
    DatasetKind dataset = DatasetKind::Sine;
    StreamConfig stream;  // synthetic stream parameters; concept set from dataset
    std::string csv_path;
    std::string label_column;
    int repetitions = 50;
    std::uint64_t master_seed = 42;
    double eval_theta = 0.99;  // prequential fading factor
    std::string out_path;
    std::string per_rep_out_path;
    int threads = 0;  // 0 = runtime default

    void validate() const;
};

/// Per-step metric series of every repetition plus their aggregation.
struct RunResult {
    long steps = 0;
    std::vector<std::vector<Metrics>> per_rep;  // [repetition][step]
    std::vector<Metrics> mean;                  // [step]
    std::vector<Metrics> standard_error;        // [step], sample stddev / sqrt(R)

    Metrics final_mean() const { return mean.empty() ? Metrics{} : mean.back(); }
    Metrics final_standard_error() const {
        return standard_error.empty() ? Metrics{} : standard_error.back();
    }
};

/// One evaluation step: the example carries the label as revealed to the
/// learner (corrupted when label noise is on), while true_y is the noiseless
/// label the prediction is scored against. Without noise the two coincide.
struct StreamStep {
    LabeledExample example;
    int true_y = 0;
};

/// Runs one learner over one stream with strict test-then-train ordering:
/// for each step, predict on the features, record the prediction against the
/// true label, and only then reveal the labeled example to the learner.
/// Returns the metrics after every step.
std::vector<Metrics> run_stream(OnlineLearner& learner,
                                const std::function<StreamStep()>& next_step,
                                long steps, double eval_theta);

/// One repetition: fresh stream and learner built from a seed derived from
/// the master seed and the repetition index. For csv datasets the loaded
/// dataset is passed in and replayed in a per-repetition shuffle order.
std::vector<Metrics> run_repetition(const ExperimentConfig& config, int rep_index,
                                    const CsvDataset* dataset);

/// All repetitions plus aggregation. Repetitions run in parallel when
/// OpenMP is available; results are identical to run_experiment_serial.
RunResult run_experiment(const ExperimentConfig& config);

/// Plain sequential reference used to validate the parallel runner.
RunResult run_experiment_serial(const ExperimentConfig& config);

/// Per-step mean and standard error (sample stddev / sqrt(R); 0 when R = 1)
/// into result.mean / result.standard_error. Throws std::invalid_argument
/// if the repetition series differ in length.
void aggregate(RunResult& result);

/// Writes `step,metric,mean,stderr` rows (metrics: recall, specificity,
/// gmean; one row per step per metric). Values print with enough digits to
/// round-trip exactly. Throws std::runtime_error with the path on failure.
void write_csv(const RunResult& result, const std::string& path);

/// Long-format per-repetition dump: `step,rep,gmean,recall,specificity`.
void write_per_rep_csv(const RunResult& result, const std::string& path);

}  // namespace areba

#endif
