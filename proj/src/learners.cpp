#include "areba/learners.hpp"

#include <algorithm>
#include <stdexcept>

#include "areba/rng.hpp"

namespace areba {

namespace {

// The queue contents as a uniformly weighted training batch, pointing into
// the queues' storage (valid only until the next append).
std::vector<WeightedExample> uniform_batch(const BalancedQueues& queues) {
    std::vector<WeightedExample> batch;
    batch.reserve(queues.total_size());
    for (const auto& e : queues.negatives().items()) batch.push_back({&e, 1.0});
    for (const auto& e : queues.positives().items()) batch.push_back({&e, 1.0});
    return batch;
}

}  // namespace

LearnerKind learner_kind_from_string(const std::string& name) {
    if (name == "baseline") return LearnerKind::Baseline;
    if (name == "sliding") return LearnerKind::Sliding;
    if (name == "adaptive_cs") return LearnerKind::AdaptiveCost;
    if (name == "oob") return LearnerKind::Oob;
    if (name == "qbr") return LearnerKind::Qbr;
    if (name == "areba") return LearnerKind::Areba;
    throw std::invalid_argument("unknown learner '" + name + "'");
}

std::string to_string(LearnerKind kind) {
    switch (kind) {
        case LearnerKind::Baseline: return "baseline";
        case LearnerKind::Sliding: return "sliding";
        case LearnerKind::AdaptiveCost: return "adaptive_cs";
        case LearnerKind::Oob: return "oob";
        case LearnerKind::Qbr: return "qbr";
        case LearnerKind::Areba: return "areba";
    }
    throw std::invalid_argument("unknown learner kind");
}

double oob_poisson_rate(double s_this, double s_other) {
    if (s_this <= 0.0) {
        return 1.0;
    }
    return s_this < s_other ? s_other / s_this : 1.0;
}

double refreshed_cost_ratio(const ClassSizeTracker& tracker, double max_ratio) {
    const bool negative_minority = tracker.negative_is_minority();
    const double s_min = negative_minority ? tracker.s_n() : tracker.s_p();
    const double s_maj = negative_minority ? tracker.s_p() : tracker.s_n();
    if (s_min <= 0.0) {
        return max_ratio;
    }
    return std::clamp(s_maj / s_min, 1.0, max_ratio);
}

// ---------------------------------------------------------------- baseline

BaselineLearner::BaselineLearner(const NetworkConfig& net_config, std::uint64_t seed)
    : net_(net_config, seed) {}

double BaselineLearner::predict_proba(const std::vector<double>& x) const {
    return net_.forward(x);
}

void BaselineLearner::observe(const LabeledExample& example) {
    const WeightedExample batch[] = {{&example, 1.0}};
    net_.train_batch(batch);
}

// ----------------------------------------------------------------- sliding

SlidingLearner::SlidingLearner(const NetworkConfig& net_config, std::size_t window,
                               std::uint64_t seed)
    : net_(net_config, seed), window_(window) {}

double SlidingLearner::predict_proba(const std::vector<double>& x) const {
    return net_.forward(x);
}

void SlidingLearner::observe(const LabeledExample& example) {
    window_.append(example);
    std::vector<WeightedExample> batch;
    batch.reserve(window_.size());
    for (const auto& e : window_.items()) {
        batch.push_back({&e, 1.0});
    }
    net_.train_batch(batch);
}

// ------------------------------------------------------------- adaptive_cs

AdaptiveCostLearner::AdaptiveCostLearner(const NetworkConfig& net_config,
                                         const LearnerConfig& params, std::uint64_t seed)
    : net_(net_config, seed),
      tracker_(params.theta),
      cost_ratio_(params.initial_cost_ratio),
      max_cost_ratio_(params.max_cost_ratio),
      refresh_period_(params.cost_refresh_period) {
    if (cost_ratio_ < 1.0 || max_cost_ratio_ < 1.0) {
        throw std::invalid_argument("AdaptiveCostLearner: cost ratios must be at least 1");
    }
    if (refresh_period_ < 1) {
        throw std::invalid_argument("AdaptiveCostLearner: refresh period must be at least 1");
    }
}

double AdaptiveCostLearner::predict_proba(const std::vector<double>& x) const {
    return net_.forward(x);
}

void AdaptiveCostLearner::observe(const LabeledExample& example) {
    tracker_.update(example.y);
    if (tracker_.t() % refresh_period_ == 0) {
        minority_label_ = tracker_.negative_is_minority() ? 0 : 1;
        cost_ratio_ = refreshed_cost_ratio(tracker_, max_cost_ratio_);
    }
    const double weight = example.y == minority_label_ ? cost_ratio_ : 1.0;
    const WeightedExample batch[] = {{&example, weight}};
    net_.train_batch(batch);
}

// ------------------------------------------------------------------- oob

OobLearner::OobLearner(const NetworkConfig& net_config, int n_members, double theta,
                       std::uint64_t seed)
    : tracker_(theta) {
    if (n_members < 1) {
        throw std::invalid_argument("OobLearner: ensemble size must be at least 1");
    }
    members_.reserve(static_cast<std::size_t>(n_members));
    rngs_.reserve(static_cast<std::size_t>(n_members));
    for (int i = 0; i < n_members; ++i) {
        members_.emplace_back(net_config, derive_seed(seed, 2 * static_cast<std::uint64_t>(i)));
        rngs_.emplace_back(derive_seed(seed, 2 * static_cast<std::uint64_t>(i) + 1));
    }
}

double OobLearner::predict_proba(const std::vector<double>& x) const {
    double sum = 0.0;
    for (const auto& member : members_) {
        sum += member.forward(x);
    }
    return sum / static_cast<double>(members_.size());
}

void OobLearner::observe(const LabeledExample& example) {
    tracker_.update(example.y);
    const double s_this = example.y == 1 ? tracker_.s_p() : tracker_.s_n();
    const double s_other = example.y == 1 ? tracker_.s_n() : tracker_.s_p();
    last_rate_ = oob_poisson_rate(s_this, s_other);

    const WeightedExample batch[] = {{&example, 1.0}};
    for (std::size_t i = 0; i < members_.size(); ++i) {
        std::poisson_distribution<int> draw_k(last_rate_);
        const int k = draw_k(rngs_[i]);
        for (int j = 0; j < k; ++j) {
            members_[i].train_batch(batch);
        }
    }
}

// ------------------------------------------------------------------- qbr

QbrLearner::QbrLearner(const NetworkConfig& net_config, std::size_t memory, std::uint64_t seed)
    : net_(net_config, seed), queues_(memory) {}

double QbrLearner::predict_proba(const std::vector<double>& x) const {
    return net_.forward(x);
}

void QbrLearner::observe(const LabeledExample& example) {
    queues_.qbr_append(example);
    net_.train_batch(uniform_batch(queues_));
}

// ------------------------------------------------------------------ areba

ArebaLearner::ArebaLearner(const NetworkConfig& net_config, std::size_t memory, double theta,
                           std::uint64_t seed)
    : net_(net_config, seed), queues_(memory), tracker_(theta) {}

double ArebaLearner::predict_proba(const std::vector<double>& x) const {
    return net_.forward(x);
}

void ArebaLearner::observe(const LabeledExample& example) {
    tracker_.update(example.y);
    queues_.areba_append(example, tracker_);
    net_.train_batch(uniform_batch(queues_));
}

// ---------------------------------------------------------------- factory

std::unique_ptr<OnlineLearner> make_learner(const LearnerConfig& config) {
    switch (config.kind) {
        case LearnerKind::Baseline:
            return std::make_unique<BaselineLearner>(config.network, config.seed);
        case LearnerKind::Sliding:
            return std::make_unique<SlidingLearner>(config.network, config.window, config.seed);
        case LearnerKind::AdaptiveCost:
            return std::make_unique<AdaptiveCostLearner>(config.network, config, config.seed);
        case LearnerKind::Oob:
            return std::make_unique<OobLearner>(config.network, config.ensemble, config.theta,
                                                config.seed);
        case LearnerKind::Qbr:
            return std::make_unique<QbrLearner>(config.network, config.memory, config.seed);
        case LearnerKind::Areba:
            return std::make_unique<ArebaLearner>(config.network, config.memory, config.theta,
                                                  config.seed);
    }
    throw std::invalid_argument("unknown learner kind");
}

}  // namespace areba
