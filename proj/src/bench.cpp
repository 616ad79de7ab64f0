#include "areba/bench.hpp"

#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <stdexcept>

#include "areba/rng.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace areba {

namespace {

ConceptKind concept_for(DatasetKind dataset) {
    switch (dataset) {
        case DatasetKind::Circle: return ConceptKind::Circle;
        case DatasetKind::Sine: return ConceptKind::Sine;
        case DatasetKind::Sea: return ConceptKind::Sea;
        case DatasetKind::Csv: break;
    }
    throw std::invalid_argument("csv dataset has no synthetic concept");
}

// Enough digits for an exact double round-trip.
std::string format_value(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

DatasetKind dataset_kind_from_string(const std::string& name) {
    if (name == "circle") return DatasetKind::Circle;
    if (name == "sine") return DatasetKind::Sine;
    if (name == "sea") return DatasetKind::Sea;
    if (name == "csv") return DatasetKind::Csv;
    throw std::invalid_argument("unknown dataset '" + name + "'");
}

std::string to_string(DatasetKind kind) {
    switch (kind) {
        case DatasetKind::Circle: return "circle";
        case DatasetKind::Sine: return "sine";
        case DatasetKind::Sea: return "sea";
        case DatasetKind::Csv: return "csv";
    }
    throw std::invalid_argument("unknown dataset kind");
}

void ExperimentConfig::validate() const {
    if (repetitions < 1) {
        throw std::invalid_argument("ExperimentConfig: repetitions must be at least 1");
    }
    if (eval_theta <= 0.0 || eval_theta >= 1.0) {
        throw std::invalid_argument("ExperimentConfig: eval theta must lie in (0,1)");
    }
    if (dataset == DatasetKind::Csv) {
        if (csv_path.empty() || label_column.empty()) {
            throw std::invalid_argument(
                "ExperimentConfig: csv dataset requires a csv path and a label column");
        }
    } else {
        if (stream.concept_spec.kind != concept_for(dataset)) {
            throw std::invalid_argument(
                "ExperimentConfig: stream concept does not match the dataset");
        }
        stream.validate();
    }
}

std::vector<Metrics> run_stream(OnlineLearner& learner,
                                const std::function<StreamStep()>& next_step,
                                long steps, double eval_theta) {
    PrequentialState preq(eval_theta);
    std::vector<Metrics> series;
    series.reserve(static_cast<std::size_t>(steps > 0 ? steps : 0));
    for (long t = 0; t < steps; ++t) {
        const StreamStep step = next_step();
        const int predicted = learner.predict(step.example.x);
        preq.update(step.true_y, predicted);
        learner.observe(step.example);
        series.push_back(preq.metrics());
    }
    return series;
}

std::vector<Metrics> run_repetition(const ExperimentConfig& config, int rep_index,
                                    const CsvDataset* dataset) {
    try {
        const std::uint64_t rep_seed =
            derive_seed(config.master_seed, static_cast<std::uint64_t>(rep_index));

        LearnerConfig learner_config = config.learner;
        learner_config.seed = derive_seed(rep_seed, 1);

        if (config.dataset == DatasetKind::Csv) {
            if (dataset == nullptr) {
                throw std::invalid_argument("csv dataset not loaded");
            }
            learner_config.network.layer_sizes.front() = static_cast<int>(dataset->dimension());
            auto learner = make_learner(learner_config);
            CsvStream stream(*dataset, derive_seed(rep_seed, 0));
            auto next = [&stream] {
                LabeledExample example = stream.next();
                const int true_y = example.y;
                return StreamStep{std::move(example), true_y};
            };
            return run_stream(*learner, next, static_cast<long>(stream.size()),
                              config.eval_theta);
        }

        learner_config.network.layer_sizes.front() = 2;
        auto learner = make_learner(learner_config);
        StreamConfig stream_config = config.stream;
        stream_config.seed = derive_seed(rep_seed, 0);
        SyntheticStream stream(stream_config);
        // The learner trains on the emitted label (flipped under label noise);
        // the prediction is scored against the noiseless concept label, which
        // rejection sampling guarantees classify_concept recovers from x.
        auto next = [&stream, &stream_config] {
            const long t = stream.step();
            LabeledExample example = stream.next();
            const bool flipped = effective_regime(stream_config, t).flipped;
            const int true_y =
                classify_concept(stream_config.concept_spec, example.x, flipped);
            return StreamStep{std::move(example), true_y};
        };
        return run_stream(*learner, next, stream_config.steps, config.eval_theta);
    } catch (const std::exception& e) {
        throw std::runtime_error("repetition " + std::to_string(rep_index) + ": " + e.what());
    }
}

namespace {

RunResult run_all(const ExperimentConfig& config, bool parallel) {
    config.validate();

    CsvDataset dataset;
    const CsvDataset* dataset_ptr = nullptr;
    if (config.dataset == DatasetKind::Csv) {
        dataset = CsvDataset::load(config.csv_path, config.label_column);
        dataset_ptr = &dataset;
    }

    RunResult result;
    result.per_rep.assign(static_cast<std::size_t>(config.repetitions), {});
    const int reps = config.repetitions;

    if (parallel) {
#ifdef _OPENMP
        const int n_threads = config.threads > 0 ? config.threads : omp_get_max_threads();
        std::exception_ptr error = nullptr;
#pragma omp parallel for schedule(dynamic) num_threads(n_threads)
        for (int r = 0; r < reps; ++r) {
            try {
                result.per_rep[static_cast<std::size_t>(r)] =
                    run_repetition(config, r, dataset_ptr);
            } catch (...) {
#pragma omp critical
                if (!error) error = std::current_exception();
            }
        }
        if (error) std::rethrow_exception(error);
#else
        for (int r = 0; r < reps; ++r) {
            result.per_rep[static_cast<std::size_t>(r)] = run_repetition(config, r, dataset_ptr);
        }
#endif
    } else {
        for (int r = 0; r < reps; ++r) {
            result.per_rep[static_cast<std::size_t>(r)] = run_repetition(config, r, dataset_ptr);
        }
    }

    aggregate(result);
    return result;
}

}  // namespace

RunResult run_experiment(const ExperimentConfig& config) { return run_all(config, true); }

RunResult run_experiment_serial(const ExperimentConfig& config) { return run_all(config, false); }

void aggregate(RunResult& result) {
    const std::size_t reps = result.per_rep.size();
    if (reps == 0) {
        result.steps = 0;
        result.mean.clear();
        result.standard_error.clear();
        return;
    }
    const std::size_t steps = result.per_rep.front().size();
    for (const auto& series : result.per_rep) {
        if (series.size() != steps) {
            throw std::invalid_argument("aggregate: repetition series differ in length");
        }
    }

    result.steps = static_cast<long>(steps);
    result.mean.assign(steps, Metrics{});
    result.standard_error.assign(steps, Metrics{});

    const double n = static_cast<double>(reps);
    auto accumulate = [&](double Metrics::* field, std::size_t step) {
        double sum = 0.0;
        for (const auto& series : result.per_rep) {
            sum += series[step].*field;
        }
        const double mean = sum / n;
        double var = 0.0;
        if (reps > 1) {
            for (const auto& series : result.per_rep) {
                const double d = series[step].*field - mean;
                var += d * d;
            }
            var /= n - 1.0;
        }
        result.mean[step].*field = mean;
        result.standard_error[step].*field = std::sqrt(var) / std::sqrt(n);
    };

    for (std::size_t s = 0; s < steps; ++s) {
        accumulate(&Metrics::recall, s);
        accumulate(&Metrics::specificity, s);
        accumulate(&Metrics::gmean, s);
    }
}

void write_csv(const RunResult& result, const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot open output file '" + path + "'");
    }
    out << "step,metric,mean,stderr\n";
    for (std::size_t s = 0; s < result.mean.size(); ++s) {
        const long step = static_cast<long>(s) + 1;
        out << step << ",recall," << format_value(result.mean[s].recall) << ','
            << format_value(result.standard_error[s].recall) << '\n';
        out << step << ",specificity," << format_value(result.mean[s].specificity) << ','
            << format_value(result.standard_error[s].specificity) << '\n';
        out << step << ",gmean," << format_value(result.mean[s].gmean) << ','
            << format_value(result.standard_error[s].gmean) << '\n';
    }
    if (!out.flush()) {
        throw std::runtime_error("failed writing output file '" + path + "'");
    }
}

void write_per_rep_csv(const RunResult& result, const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot open output file '" + path + "'");
    }
    out << "step,rep,gmean,recall,specificity\n";
    for (std::size_t r = 0; r < result.per_rep.size(); ++r) {
        const auto& series = result.per_rep[r];
        for (std::size_t s = 0; s < series.size(); ++s) {
            out << (s + 1) << ',' << r << ',' << format_value(series[s].gmean) << ','
                << format_value(series[s].recall) << ',' << format_value(series[s].specificity)
                << '\n';
        }
    }
    if (!out.flush()) {
        throw std::runtime_error("failed writing output file '" + path + "'");
    }
}

}  // namespace areba
