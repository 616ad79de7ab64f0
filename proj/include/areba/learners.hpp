#ifndef AREBA_LEARNERS_HPP
#define AREBA_LEARNERS_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "areba/class_size.hpp"
#include "areba/example.hpp"
#include "areba/network.hpp"
#include "areba/queues.hpp"

namespace areba {

enum class LearnerKind { Baseline, Sliding, AdaptiveCost, Oob, Qbr, Areba };

/// Accepts baseline | sliding | adaptive_cs | oob | qbr | areba.
LearnerKind learner_kind_from_string(const std::string& name);
std::string to_string(LearnerKind kind);

struct LearnerConfig {
    LearnerKind kind = LearnerKind::Areba;
    NetworkConfig network;
    std::uint64_t seed = 0;
    std::size_t memory = 20;         // B: total queue budget (qbr, areba)
    std::size_t window = 100;        // W: sliding window length
    int ensemble = 1;                // oob member count
    double theta = 0.99;             // class-size decay factor
    double initial_cost_ratio = 19.0;
    double max_cost_ratio = 50.0;
    long cost_refresh_period = 250;
};

/// Shared contract: predict before the label is revealed, then observe the
/// labeled example exactly once. Every observe performs one optimizer step
/// (oob: one per Poisson draw per member).
class OnlineLearner {
public:
    virtual ~OnlineLearner() = default;

    virtual double predict_proba(const std::vector<double>& x) const = 0;
    virtual void observe(const LabeledExample& example) = 0;

    int predict(const std::vector<double>& x) const {
        return predict_proba(x) >= 0.5 ? 1 : 0;
    }
};

std::unique_ptr<OnlineLearner> make_learner(const LearnerConfig& config);

/// Poisson rate for an arriving example whose class has time-decayed size
/// s_this against the other class's s_other: oversample (rate > 1) only when
/// the arriving class is currently the minority. s_this = 0 (cold start)
/// falls back to 1.
double oob_poisson_rate(double s_this, double s_other);

/// Cost ratio recomputed at a refresh step: s_majority / s_minority clamped
/// to [1, max_ratio]; an unseen minority class (size 0) yields max_ratio.
double refreshed_cost_ratio(const ClassSizeTracker& tracker, double max_ratio);

/// Trains on each example as it arrives; no memory, no imbalance handling.
class BaselineLearner : public OnlineLearner {
public:
    BaselineLearner(const NetworkConfig& net_config, std::uint64_t seed);

    double predict_proba(const std::vector<double>& x) const override;
    void observe(const LabeledExample& example) override;

    const Network& network() const { return net_; }

private:
    Network net_;
};

/// Retrains each step on the W most recent examples regardless of class.
class SlidingLearner : public OnlineLearner {
public:
    SlidingLearner(const NetworkConfig& net_config, std::size_t window, std::uint64_t seed);

    double predict_proba(const std::vector<double>& x) const override;
    void observe(const LabeledExample& example) override;

    const Network& network() const { return net_; }
    const BoundedQueue& window() const { return window_; }

private:
    Network net_;
    BoundedQueue window_;
};

/// Cost-sensitive single-example training: minority arrivals are up-weighted
/// by a cost ratio that is re-estimated from the class-size tracker every
/// refresh_period steps. Starts with the positive class as minority at
/// ratio 19 until the first refresh.
class AdaptiveCostLearner : public OnlineLearner {
public:
    AdaptiveCostLearner(const NetworkConfig& net_config, const LearnerConfig& params,
                        std::uint64_t seed);

    double predict_proba(const std::vector<double>& x) const override;
    void observe(const LabeledExample& example) override;

    const Network& network() const { return net_; }
    const ClassSizeTracker& tracker() const { return tracker_; }
    double cost_ratio() const { return cost_ratio_; }
    int minority_label() const { return minority_label_; }

private:
    Network net_;
    ClassSizeTracker tracker_;
    double cost_ratio_;
    double max_cost_ratio_;
    long refresh_period_;
    int minority_label_ = 1;
};

/// Online bagging ensemble with imbalance-aware oversampling: each member
/// trains K ~ Poisson(rate) times per arrival, where the rate exceeds 1 only
/// for minority arrivals. Prediction is the mean member probability.
class OobLearner : public OnlineLearner {
public:
    OobLearner(const NetworkConfig& net_config, int n_members, double theta,
               std::uint64_t seed);

    double predict_proba(const std::vector<double>& x) const override;
    void observe(const LabeledExample& example) override;

    const std::vector<Network>& members() const { return members_; }
    const ClassSizeTracker& tracker() const { return tracker_; }
    double last_rate() const { return last_rate_; }

private:
    std::vector<Network> members_;
    std::vector<std::mt19937_64> rngs_;
    ClassSizeTracker tracker_;
    double last_rate_ = 1.0;
};

/// Queue-based resampling: one bounded queue per class, capacities growing
/// one slot at a time toward an even split of the budget; trains each step on
/// the union of both queues.
class QbrLearner : public OnlineLearner {
public:
    QbrLearner(const NetworkConfig& net_config, std::size_t memory, std::uint64_t seed);

    double predict_proba(const std::vector<double>& x) const override;
    void observe(const LabeledExample& example) override;

    const Network& network() const { return net_; }
    const BalancedQueues& queues() const { return queues_; }

private:
    Network net_;
    BalancedQueues queues_;
};

/// Adaptive rebalancing: like qbr but queue capacities follow the tracked
/// class sizes, so the stored set stays balanced under imbalance and drift.
class ArebaLearner : public OnlineLearner {
public:
    ArebaLearner(const NetworkConfig& net_config, std::size_t memory, double theta,
                 std::uint64_t seed);

    double predict_proba(const std::vector<double>& x) const override;
    void observe(const LabeledExample& example) override;

    const Network& network() const { return net_; }
    const BalancedQueues& queues() const { return queues_; }
    const ClassSizeTracker& tracker() const { return tracker_; }

private:
    Network net_;
    BalancedQueues queues_;
    ClassSizeTracker tracker_;
};

}  // namespace areba

#endif
