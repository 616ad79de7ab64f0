#include "areba/stream.hpp"

#include <cmath>
#include <numbers>

namespace areba {

void StreamConfig::validate() const {
    if (!(imbalance_rate > 0.0 && imbalance_rate <= 0.5))
        throw std::invalid_argument("imbalance_rate must lie in (0, 0.5]");
    if (!(noise_prob >= 0.0 && noise_prob <= 1.0))
        throw std::invalid_argument("noise_prob must lie in [0, 1]");
    if (steps < 0)
        throw std::invalid_argument("steps must be non-negative");
    if (drift.type != DriftType::None) {
        if (drift.onset_step < 0 || drift.onset_step >= steps)
            throw std::invalid_argument("drift onset_step must lie in [0, steps)");
    }
}

int classify_concept(const ConceptSpec& concept_spec, const std::vector<double>& x, bool flipped) {
    if (x.size() != 2)
        throw std::invalid_argument("concept features must be two-dimensional");
    for (double v : x) {
        if (!(v >= 0.0 && v <= 1.0))
            throw std::invalid_argument("concept features must lie in [0,1]^2");
    }

    bool positive = false;
    switch (concept_spec.kind) {
        case ConceptKind::Circle: {
            const double dx = x[0] - concept_spec.circle_center_x1;
            const double dy = x[1] - concept_spec.circle_center_x2;
            positive = dx * dx + dy * dy <= concept_spec.circle_radius * concept_spec.circle_radius;
            break;
        }
        case ConceptKind::Sine: {
            // Undo the [0,1] rescaling: x1 spans [0, 2*pi], x2 spans [-1, 1].
            const double native_x1 = 2.0 * std::numbers::pi * x[0];
            const double native_x2 = 2.0 * x[1] - 1.0;
            positive = native_x2 <= std::sin(native_x1);
            break;
        }
        case ConceptKind::Sea: {
            positive = 10.0 * (x[0] + x[1]) <= concept_spec.sea_threshold;
            break;
        }
    }
    if (flipped) positive = !positive;
    return positive ? 1 : 0;
}

Regime effective_regime(const StreamConfig& config, long t) {
    const bool post = config.drift.type != DriftType::None && t >= config.drift.onset_step;
    Regime regime;
    regime.prior_positive = config.imbalance_rate;
    switch (config.drift.type) {
        case DriftType::None:
            break;
        case DriftType::Prior:
            if (post) regime.prior_positive = 1.0 - config.imbalance_rate;
            break;
        case DriftType::Likelihood:
            regime.likelihood_constrained = true;
            regime.prob_x1_below = post ? 0.1 : 0.9;
            break;
        case DriftType::Posterior:
            regime.flipped = post;
            break;
    }
    return regime;
}

namespace {

constexpr long kMaxRejectionIterations = 1'000'000;

std::vector<double> sample_features(const ConceptSpec& concept_spec, const Regime& regime, int label,
                                    std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    // Under the likelihood constraint, negatives first commit to an x1 region.
    bool constrain_region = false;
    bool region_below = false;
    if (regime.likelihood_constrained && label == 0) {
        constrain_region = true;
        region_below = std::bernoulli_distribution(regime.prob_x1_below)(rng);
    }

    std::vector<double> x(2);
    for (long iter = 0; iter < kMaxRejectionIterations; ++iter) {
        x[0] = unit(rng);
        x[1] = unit(rng);
        if (constrain_region && (x[0] < kLikelihoodSplit) != region_below) continue;
        if (classify_concept(concept_spec, x, regime.flipped) == label) return x;
    }
    throw StreamError("rejection sampling exceeded iteration cap; concept region is degenerate");
}

}  // namespace

LabeledExample sample_example(const StreamConfig& config, long t, std::mt19937_64& rng) {
    const Regime regime = effective_regime(config, t);

    const int concept_label = std::bernoulli_distribution(regime.prior_positive)(rng) ? 1 : 0;
    LabeledExample example;
    example.x = sample_features(config.concept_spec, regime, concept_label, rng);
    example.y = concept_label;
    if (config.noise_prob > 0.0 && std::bernoulli_distribution(config.noise_prob)(rng))
        example.y = 1 - example.y;
    return example;
}

}  // namespace areba
