#ifndef AREBA_STREAM_HPP
#define AREBA_STREAM_HPP

#include <cstdint>
#include <random>
#include <stdexcept>

#include "areba/example.hpp"

namespace areba {

/// Raised when a stream cannot produce an example (degenerate sampling region).
struct StreamError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class ConceptKind { Circle, Sine, Sea };

/// A fixed two-dimensional classification concept on [0,1]^2.
///
/// Circle: positive inside the circle centred at (0.4, 0.5) with radius 0.2.
/// Sine:   native features x1 in [0, 2*pi], x2 in [-1, 1], positive below
///         x2 = sin(x1); both rescaled to [0,1].
/// Sea:    native features x1, x2 in [0, 10], positive where x1 + x2 <= 7;
///         rescaled to [0,1].
/// Points exactly on the boundary classify as positive.
struct ConceptSpec {
    ConceptKind kind = ConceptKind::Circle;

    double circle_center_x1 = 0.4;
    double circle_center_x2 = 0.5;
    double circle_radius = 0.2;
    double sea_threshold = 7.0;  // on the native [0,10] scale
};

enum class DriftType { None, Prior, Likelihood, Posterior };

/// Abrupt drift: the regime switches in a single step at onset_step.
struct DriftSpec {
    DriftType type = DriftType::None;
    long onset_step = 0;
};

struct StreamConfig {
    ConceptSpec concept_spec;
    double imbalance_rate = 0.01;  // p(y=1) before drift, in (0, 0.5]
    DriftSpec drift;
    double noise_prob = 0.0;  // probability the emitted label is flipped
    std::uint64_t seed = 0;
    long steps = 5000;

    void validate() const;
};

/// The distribution actually in force at one step.
struct Regime {
    double prior_positive = 0.0;
    bool flipped = false;  // posterior drift swaps the concept labels
    // Likelihood constraint on the negative class: p(x1 < 0.6 | y=0).
    bool likelihood_constrained = false;
    double prob_x1_below = 0.0;
};

constexpr double kLikelihoodSplit = 0.6;

/// Noiseless concept label of x under the (possibly flipped) concept.
/// Throws std::invalid_argument if x is outside [0,1]^2.
int classify_concept(const ConceptSpec& concept_spec, const std::vector<double>& x, bool flipped);

/// Active prior, likelihood constraint and flip flag at step t (0-based).
Regime effective_regime(const StreamConfig& config, long t);

/// Draws one labeled example for step t. The label is sampled from the active
/// prior, x is rejection-sampled from the matching concept region (and, under
/// likelihood drift, from the active x1 region for negatives), and label noise
/// is applied last.
LabeledExample sample_example(const StreamConfig& config, long t, std::mt19937_64& rng);

/// Stateful generator owning its RNG; one instance per repetition.
class SyntheticStream {
public:
    explicit SyntheticStream(const StreamConfig& config)
        : config_(config), rng_(config.seed) {
        config.validate();
    }

    LabeledExample next() { return sample_example(config_, t_++, rng_); }

    long step() const { return t_; }
    const StreamConfig& config() const { return config_; }

private:
    StreamConfig config_;
    std::mt19937_64 rng_;
    long t_ = 0;
};

}  // namespace areba

#endif
