#include "areba/network.hpp"

#include <algorithm>

namespace areba {

void NetworkConfig::validate() const {
    if (layer_sizes.size() < 2)
        throw std::invalid_argument("network needs at least input and output layers");
    for (int size : layer_sizes)
        if (size < 1) throw std::invalid_argument("layer sizes must be >= 1");
    if (layer_sizes.back() != 1)
        throw std::invalid_argument("binary classifier output layer must have size 1");
    if (!(learning_rate > 0.0)) throw std::invalid_argument("learning_rate must be > 0");
    if (l2 < 0.0) throw std::invalid_argument("l2 must be >= 0");
    if (!(beta1 > 0.0 && beta1 < 1.0 && beta2 > 0.0 && beta2 < 1.0))
        throw std::invalid_argument("adam betas must lie in (0, 1)");
    if (!(epsilon > 0.0)) throw std::invalid_argument("adam epsilon must be > 0");
}

double weighted_bce(int y, double p_hat, double weight) {
    const double p = std::clamp(p_hat, kProbabilityClip, 1.0 - kProbabilityClip);
    const double nll = y == 1 ? -std::log(p) : -std::log(1.0 - p);
    return weight * nll;
}

Network::Network(const NetworkConfig& config, std::mt19937_64& rng) : config_(config) {
    init(rng);
}

Network::Network(const NetworkConfig& config, std::uint64_t seed) : config_(config) {
    std::mt19937_64 rng(seed);
    init(rng);
}

void Network::init(std::mt19937_64& rng) {
    config_.validate();
    const auto& sizes = config_.layer_sizes;
    layers_.resize(sizes.size() - 1);
    for (std::size_t l = 0; l < layers_.size(); ++l) {
        Layer& layer = layers_[l];
        layer.in = sizes[l];
        layer.out = sizes[l + 1];
        layer.weights.resize(static_cast<std::size_t>(layer.in) * layer.out);
        layer.bias.assign(static_cast<std::size_t>(layer.out), 0.0);
        // He normal: stddev sqrt(2 / fan_in).
        std::normal_distribution<double> he(0.0, std::sqrt(2.0 / layer.in));
        for (double& w : layer.weights) w = he(rng);
        parameter_count_ += layer.weights.size() + layer.bias.size();
    }
    m_w_.resize(layers_.size());
    v_w_.resize(layers_.size());
    m_b_.resize(layers_.size());
    v_b_.resize(layers_.size());
    for (std::size_t l = 0; l < layers_.size(); ++l) {
        m_w_[l].assign(layers_[l].weights.size(), 0.0);
        v_w_[l].assign(layers_[l].weights.size(), 0.0);
        m_b_[l].assign(layers_[l].bias.size(), 0.0);
        v_b_[l].assign(layers_[l].bias.size(), 0.0);
    }
}

double Network::forward(const std::vector<double>& x) const {
    if (static_cast<int>(x.size()) != layers_.front().in)
        throw std::invalid_argument("input dimension mismatch");
    std::vector<double> activation = x;
    std::vector<double> next;
    for (std::size_t l = 0; l < layers_.size(); ++l) {
        const Layer& layer = layers_[l];
        next.assign(static_cast<std::size_t>(layer.out), 0.0);
        for (int o = 0; o < layer.out; ++o) {
            double z = layer.bias[o];
            const double* row = layer.weights.data() + static_cast<std::size_t>(o) * layer.in;
            for (int i = 0; i < layer.in; ++i) z += row[i] * activation[i];
            const bool output_layer = l + 1 == layers_.size();
            next[o] = output_layer ? sigmoid(z) : leaky_relu(z, config_.leaky_slope);
        }
        activation.swap(next);
    }
    return activation[0];
}

void Network::accumulate_gradient(const LabeledExample& example, double weight, double inv_batch,
                                  std::vector<std::vector<double>>& grad_w,
                                  std::vector<std::vector<double>>& grad_b) const {
    // Forward pass, keeping pre-activations and activations per layer.
    std::vector<std::vector<double>> activations(layers_.size() + 1);
    std::vector<std::vector<double>> pre(layers_.size());
    activations[0] = example.x;
    for (std::size_t l = 0; l < layers_.size(); ++l) {
        const Layer& layer = layers_[l];
        pre[l].assign(static_cast<std::size_t>(layer.out), 0.0);
        activations[l + 1].assign(static_cast<std::size_t>(layer.out), 0.0);
        for (int o = 0; o < layer.out; ++o) {
            double z = layer.bias[o];
            const double* row = layer.weights.data() + static_cast<std::size_t>(o) * layer.in;
            for (int i = 0; i < layer.in; ++i) z += row[i] * activations[l][i];
            pre[l][o] = z;
            const bool output_layer = l + 1 == layers_.size();
            activations[l + 1][o] = output_layer ? sigmoid(z) : leaky_relu(z, config_.leaky_slope);
        }
    }

    const double p = activations.back()[0];
    // d(mean cost)/dz at the output; zero when the probability clip is active,
    // matching the clamped loss actually evaluated.
    double delta_out = 0.0;
    if (p > kProbabilityClip && p < 1.0 - kProbabilityClip)
        delta_out = inv_batch * weight * (p - example.y);

    std::vector<double> delta{delta_out};
    std::vector<double> delta_prev;
    for (std::size_t l = layers_.size(); l-- > 0;) {
        const Layer& layer = layers_[l];
        for (int o = 0; o < layer.out; ++o) {
            const double d = delta[o];
            if (d == 0.0) continue;
            double* grow = grad_w[l].data() + static_cast<std::size_t>(o) * layer.in;
            for (int i = 0; i < layer.in; ++i) grow[i] += d * activations[l][i];
            grad_b[l][o] += d;
        }
        if (l == 0) break;
        delta_prev.assign(static_cast<std::size_t>(layer.in), 0.0);
        for (int i = 0; i < layer.in; ++i) {
            double acc = 0.0;
            for (int o = 0; o < layer.out; ++o)
                acc += layer.weights[static_cast<std::size_t>(o) * layer.in + i] * delta[o];
            const double z = pre[l - 1][i];
            delta_prev[i] = acc * (z > 0.0 ? 1.0 : config_.leaky_slope);
        }
        delta.swap(delta_prev);
    }
}

double Network::batch_cost(std::span<const WeightedExample> batch) const {
    if (batch.empty()) throw std::invalid_argument("batch must be non-empty");
    double cost = 0.0;
    for (const WeightedExample& item : batch)
        cost += weighted_bce(item.example->y, forward(item.example->x), item.weight);
    cost /= static_cast<double>(batch.size());
    if (config_.l2 > 0.0) {
        double sq = 0.0;
        for (const Layer& layer : layers_)
            for (double w : layer.weights) sq += w * w;
        cost += 0.5 * config_.l2 * sq;
    }
    return cost;
}

std::pair<double, std::vector<double>> Network::cost_and_gradient(
    std::span<const WeightedExample> batch) const {
    if (batch.empty()) throw std::invalid_argument("batch must be non-empty");

    std::vector<std::vector<double>> grad_w(layers_.size()), grad_b(layers_.size());
    for (std::size_t l = 0; l < layers_.size(); ++l) {
        grad_w[l].assign(layers_[l].weights.size(), 0.0);
        grad_b[l].assign(layers_[l].bias.size(), 0.0);
    }

    const double inv_batch = 1.0 / static_cast<double>(batch.size());
    double cost = 0.0;
    for (const WeightedExample& item : batch) {
        cost += weighted_bce(item.example->y, forward(item.example->x), item.weight);
        accumulate_gradient(*item.example, item.weight, inv_batch, grad_w, grad_b);
    }
    cost *= inv_batch;

    if (config_.l2 > 0.0) {
        double sq = 0.0;
        for (std::size_t l = 0; l < layers_.size(); ++l) {
            for (std::size_t i = 0; i < layers_[l].weights.size(); ++i) {
                const double w = layers_[l].weights[i];
                sq += w * w;
                grad_w[l][i] += config_.l2 * w;
            }
        }
        cost += 0.5 * config_.l2 * sq;
    }

    std::vector<double> flat;
    flat.reserve(parameter_count_);
    for (std::size_t l = 0; l < layers_.size(); ++l) {
        flat.insert(flat.end(), grad_w[l].begin(), grad_w[l].end());
        flat.insert(flat.end(), grad_b[l].begin(), grad_b[l].end());
    }
    return {cost, std::move(flat)};
}

double Network::train_batch(std::span<const WeightedExample> batch) {
    auto [cost, grad] = cost_and_gradient(batch);
    ++update_count_;
    std::size_t k = 0;
    for (std::size_t l = 0; l < layers_.size(); ++l) {
        Layer& layer = layers_[l];
        for (std::size_t i = 0; i < layer.weights.size(); ++i, ++k)
            adam_update(layer.weights[i], m_w_[l][i], v_w_[l][i], grad[k], update_count_,
                        config_.learning_rate, config_.beta1, config_.beta2, config_.epsilon);
        for (std::size_t i = 0; i < layer.bias.size(); ++i, ++k)
            adam_update(layer.bias[i], m_b_[l][i], v_b_[l][i], grad[k], update_count_,
                        config_.learning_rate, config_.beta1, config_.beta2, config_.epsilon);
    }
    return cost;
}

double Network::get_parameter(std::size_t i) const {
    for (const Layer& layer : layers_) {
        if (i < layer.weights.size()) return layer.weights[i];
        i -= layer.weights.size();
        if (i < layer.bias.size()) return layer.bias[i];
        i -= layer.bias.size();
    }
    throw std::out_of_range("parameter index");
}

void Network::set_parameter(std::size_t i, double value) {
    for (Layer& layer : layers_) {
        if (i < layer.weights.size()) {
            layer.weights[i] = value;
            return;
        }
        i -= layer.weights.size();
        if (i < layer.bias.size()) {
            layer.bias[i] = value;
            return;
        }
        i -= layer.bias.size();
    }
    throw std::out_of_range("parameter index");
}

}  // namespace areba
