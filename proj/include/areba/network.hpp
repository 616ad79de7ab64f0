#ifndef AREBA_NETWORK_HPP
#define AREBA_NETWORK_HPP

#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

#include "areba/example.hpp"

namespace areba {

/// Dense feed-forward binary classifier: LeakyReLU hidden layers, sigmoid
/// output, weighted binary cross-entropy with optional L2 on the weights,
/// trained with Adam (one optimizer step per batch).
struct NetworkConfig {
    std::vector<int> layer_sizes;  // input, hidden..., output (output must be 1)
    double leaky_slope = 0.3;
    double learning_rate = 0.01;
    double l2 = 0.0;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double epsilon = 1e-8;

    void validate() const;
};

inline double leaky_relu(double z, double slope) { return z > 0.0 ? z : slope * z; }

inline double sigmoid(double z) {
    if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
    const double e = std::exp(z);
    return e / (1.0 + e);
}

/// Probability clip keeping the cross-entropy finite.
constexpr double kProbabilityClip = 1e-7;

/// w * (-y*ln(p) - (1-y)*ln(1-p)) with p clamped away from {0,1}.
double weighted_bce(int y, double p_hat, double weight);

/// One bias-corrected Adam update of a single parameter; step_count is the
/// number of optimizer steps including this one (>= 1).
inline void adam_update(double& param, double& m, double& v, double grad, long step_count,
                        double lr, double beta1, double beta2, double epsilon) {
    m = beta1 * m + (1.0 - beta1) * grad;
    v = beta2 * v + (1.0 - beta2) * grad * grad;
    const double m_hat = m / (1.0 - std::pow(beta1, static_cast<double>(step_count)));
    const double v_hat = v / (1.0 - std::pow(beta2, static_cast<double>(step_count)));
    param -= lr * m_hat / (std::sqrt(v_hat) + epsilon);
}

/// A training-set entry: borrowed example plus its misclassification weight.
struct WeightedExample {
    const LabeledExample* example;
    double weight = 1.0;
};

class Network {
public:
    Network(const NetworkConfig& config, std::mt19937_64& rng);
    Network(const NetworkConfig& config, std::uint64_t seed);

    /// p(y=1|x) estimate in (0,1).
    double forward(const std::vector<double>& x) const;

    int predict(const std::vector<double>& x) const { return forward(x) >= 0.5 ? 1 : 0; }

    /// Mean weighted cross-entropy over the batch plus the L2 penalty;
    /// applies exactly one Adam step. Returns the pre-update cost.
    double train_batch(std::span<const WeightedExample> batch);

    /// Cost of the batch at the current parameters, no update.
    double batch_cost(std::span<const WeightedExample> batch) const;

    /// Cost and its gradient in flat parameter order (no update).
    std::pair<double, std::vector<double>> cost_and_gradient(
        std::span<const WeightedExample> batch) const;

    // Flat parameter view, layer-major: W0 (row-major), b0, W1, b1, ...
    std::size_t parameter_count() const { return parameter_count_; }
    double get_parameter(std::size_t i) const;
    void set_parameter(std::size_t i, double value);

    long update_count() const { return update_count_; }
    const NetworkConfig& config() const { return config_; }
    int input_size() const { return config_.layer_sizes.front(); }

private:
    struct Layer {
        int in = 0;
        int out = 0;
        std::vector<double> weights;  // out x in, row-major
        std::vector<double> bias;     // out
    };

    void init(std::mt19937_64& rng);

    void accumulate_gradient(const LabeledExample& example, double weight, double inv_batch,
                             std::vector<std::vector<double>>& grad_w,
                             std::vector<std::vector<double>>& grad_b) const;

    NetworkConfig config_;
    std::vector<Layer> layers_;
    std::vector<std::vector<double>> m_w_, v_w_, m_b_, v_b_;  // Adam moments
    std::size_t parameter_count_ = 0;
    long update_count_ = 0;
};

}  // namespace areba

#endif
