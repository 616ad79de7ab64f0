#include "areba/cli.hpp"

#include <algorithm>
#include <cstdint>

#include <CLI11.hpp>

namespace areba {

namespace {

struct RawArgs {
    std::string learner = "areba";
    std::string dataset;
    std::string drift = "none";
    std::string csv_path;
    std::string label_col;
    std::string out;
    std::string per_rep_out;
    std::size_t memory = 20;
    std::size_t window = 100;
    int ensemble = 1;
    int reps = 50;
    int threads = 0;
    double theta = 0.99;
    double imbalance = 0.01;
    double noise = 0.0;
    double lr = 0.01;
    double l2 = 0.0;
    long drift_step = 0;
    long steps = 5000;
    std::uint64_t seed = 42;
    std::vector<int> hidden = {8};
};

// The returned option pointers that need presence checks are captured by
// the caller via app.count().
void build_app(CLI::App& app, RawArgs& raw) {
    app.option_defaults()->always_capture_default();

    app.add_option("--learner", raw.learner, "Learner to run")
        ->check(CLI::IsMember({"baseline", "sliding", "adaptive_cs", "oob", "qbr", "areba"}));
    app.add_option("--memory", raw.memory, "Total queue budget B (qbr, areba)")
        ->check(CLI::PositiveNumber);
    app.add_option("--window", raw.window, "Sliding window length W")
        ->check(CLI::PositiveNumber);
    app.add_option("--ensemble", raw.ensemble, "Ensemble size (oob)")
        ->check(CLI::PositiveNumber);
    app.add_option("--theta", raw.theta, "Fading factor for class sizes and evaluation");

    app.add_option("--dataset", raw.dataset, "Stream source")
        ->required()
        ->check(CLI::IsMember({"circle", "sine", "sea", "csv"}));
    app.add_option("--csv-path", raw.csv_path, "CSV file (dataset csv)");
    app.add_option("--label-col", raw.label_col, "Label column name (dataset csv)");
    app.add_option("--imbalance", raw.imbalance, "Positive-class prior before drift");
    app.add_option("--drift", raw.drift, "Drift type")
        ->check(CLI::IsMember({"none", "prior", "likelihood", "posterior"}));
    app.add_option("--drift-step", raw.drift_step, "Drift onset step (0-based)");
    app.add_option("--noise", raw.noise,
                   "Probability that a revealed label is flipped (training only; "
                   "metrics score against the noiseless label)");
    app.add_option("--steps", raw.steps, "Stream length (synthetic datasets)");

    app.add_option("--reps", raw.reps, "Repetitions to average over")
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", raw.seed, "Master seed");
    app.add_option("--threads", raw.threads, "Worker threads (0 = runtime default)");

    app.add_option("--lr", raw.lr, "Learning rate");
    app.add_option("--hidden", raw.hidden, "Hidden layer sizes");
    app.add_option("--l2", raw.l2, "L2 regularization strength");

    app.add_option("--out", raw.out, "Aggregated metrics CSV path");
    app.add_option("--per-rep-out", raw.per_rep_out, "Per-repetition metrics CSV path");
}

DriftType drift_type_from_string(const std::string& name) {
    if (name == "none") return DriftType::None;
    if (name == "prior") return DriftType::Prior;
    if (name == "likelihood") return DriftType::Likelihood;
    if (name == "posterior") return DriftType::Posterior;
    throw CliError("unknown drift type '" + name + "'");
}

}  // namespace

ExperimentConfig parse_cli(const std::vector<std::string>& args) {
    CLI::App app{"Prequential benchmark for online learners on imbalanced drifting streams"};
    app.name("areba_bench");
    RawArgs raw;
    build_app(app, raw);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        throw CliHelp{app.help()};
    } catch (const CLI::ParseError& e) {
        throw CliError(e.what());
    }

    ExperimentConfig config;
    config.learner.kind = learner_kind_from_string(raw.learner);
    config.learner.memory = raw.memory;
    config.learner.window = raw.window;
    config.learner.ensemble = raw.ensemble;
    config.learner.theta = raw.theta;
    config.learner.network.learning_rate = raw.lr;
    config.learner.network.l2 = raw.l2;
    // Input width is resolved from the stream when a repetition starts;
    // 2 is the synthetic-concept placeholder.
    config.learner.network.layer_sizes.assign({2});
    config.learner.network.layer_sizes.insert(config.learner.network.layer_sizes.end(),
                                              raw.hidden.begin(), raw.hidden.end());
    config.learner.network.layer_sizes.push_back(1);

    config.dataset = dataset_kind_from_string(raw.dataset);
    config.csv_path = raw.csv_path;
    config.label_column = raw.label_col;
    config.repetitions = raw.reps;
    config.master_seed = raw.seed;
    config.eval_theta = raw.theta;
    config.out_path = raw.out;
    config.per_rep_out_path = raw.per_rep_out;
    config.threads = raw.threads;

    const DriftType drift = drift_type_from_string(raw.drift);
    if (drift != DriftType::None && app.count("--drift-step") == 0) {
        throw CliError("--drift " + raw.drift + " requires --drift-step");
    }
    if (config.dataset == DatasetKind::Csv) {
        if (raw.csv_path.empty() || raw.label_col.empty()) {
            throw CliError("--dataset csv requires --csv-path and --label-col");
        }
    } else {
        switch (config.dataset) {
            case DatasetKind::Circle: config.stream.concept_spec.kind = ConceptKind::Circle; break;
            case DatasetKind::Sine: config.stream.concept_spec.kind = ConceptKind::Sine; break;
            case DatasetKind::Sea: config.stream.concept_spec.kind = ConceptKind::Sea; break;
            case DatasetKind::Csv: break;
        }
        config.stream.imbalance_rate = raw.imbalance;
        config.stream.drift.type = drift;
        config.stream.drift.onset_step = raw.drift_step;
        config.stream.noise_prob = raw.noise;
        config.stream.steps = raw.steps;
        config.stream.seed = raw.seed;
    }

    try {
        config.validate();
    } catch (const std::exception& e) {
        throw CliError(e.what());
    }
    return config;
}

std::string cli_help() {
    CLI::App app{"Prequential benchmark for online learners on imbalanced drifting streams"};
    app.name("areba_bench");
    RawArgs raw;
    build_app(app, raw);
    return app.help();
}

}  // namespace areba
