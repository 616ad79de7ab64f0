#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "areba/network.hpp"

using namespace areba;

namespace {

NetworkConfig small_config(std::vector<int> sizes) {
    NetworkConfig config;
    config.layer_sizes = std::move(sizes);
    return config;
}

/// Sets every parameter of `net` to `value`.
void fill_parameters(Network& net, double value) {
    for (std::size_t i = 0; i < net.parameter_count(); ++i) net.set_parameter(i, value);
}

/// Mean and standard deviation of a parameter range [begin, begin+count).
std::pair<double, double> parameter_stats(const Network& net, std::size_t begin,
                                          std::size_t count) {
    double mean = 0.0;
    for (std::size_t i = 0; i < count; ++i) mean += net.get_parameter(begin + i);
    mean /= static_cast<double>(count);
    double var = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
        const double d = net.get_parameter(begin + i) - mean;
        var += d * d;
    }
    var /= static_cast<double>(count - 1);
    return {mean, std::sqrt(var)};
}

}  // namespace

TEST_CASE("activation and loss primitives") {
    CHECK(leaky_relu(2.0, 0.3) == 2.0);
    CHECK(leaky_relu(-1.0, 0.3) == doctest::Approx(-0.3));
    CHECK(leaky_relu(0.0, 0.3) == 0.0);

    CHECK(sigmoid(0.0) == 0.5);
    CHECK(sigmoid(100.0) == doctest::Approx(1.0));
    CHECK(sigmoid(-100.0) == doctest::Approx(0.0));
    // Large-|z| inputs stay finite in both branches.
    CHECK(std::isfinite(sigmoid(1000.0)));
    CHECK(std::isfinite(sigmoid(-1000.0)));

    SUBCASE("cross-entropy closed forms") {
        CHECK(weighted_bce(1, 0.5, 1.0) == doctest::Approx(std::log(2.0)));
        CHECK(weighted_bce(0, 0.5, 19.0) == doctest::Approx(19.0 * std::log(2.0)));
        CHECK(weighted_bce(1, 0.25, 2.0) == doctest::Approx(-2.0 * std::log(0.25)));
        // The clip keeps confidently-wrong losses finite.
        CHECK(weighted_bce(0, 1.0, 1.0) == doctest::Approx(-std::log(kProbabilityClip)));
        CHECK(weighted_bce(1, 0.0, 1.0) == doctest::Approx(-std::log(kProbabilityClip)));
        // ... and confidently-right losses near zero.
        CHECK(weighted_bce(1, 1.0, 1.0) == doctest::Approx(1e-7).epsilon(1e-6));
    }
}

TEST_CASE("initialization") {
    SUBCASE("He-normal weights, zero biases, fan-in 2") {
        Network net(small_config({2, 400, 1}), 7);
        // Layout: W0 (800), b0 (400), W1 (400), b1 (1).
        REQUIRE(net.parameter_count() == 800 + 400 + 400 + 1);
        const auto [w_mean, w_std] = parameter_stats(net, 0, 800);
        CHECK(w_mean == doctest::Approx(0.0).epsilon(0.15));
        CHECK(w_std == doctest::Approx(1.0).epsilon(0.1));  // sqrt(2/2)
        for (std::size_t i = 0; i < 400; ++i) CHECK(net.get_parameter(800 + i) == 0.0);
        CHECK(net.get_parameter(800 + 400 + 400) == 0.0);  // output bias
    }

    SUBCASE("fan-in 8 halves the weight scale") {
        Network net(small_config({8, 400, 1}), 7);
        const auto [w_mean, w_std] = parameter_stats(net, 0, 8 * 400);
        CHECK(w_mean == doctest::Approx(0.0).epsilon(0.05));
        CHECK(w_std == doctest::Approx(0.5).epsilon(0.05));  // sqrt(2/8)
    }

    SUBCASE("the same seed reproduces the same parameters") {
        Network a(small_config({2, 8, 1}), 42);
        Network b(small_config({2, 8, 1}), 42);
        REQUIRE(a.parameter_count() == b.parameter_count());
        for (std::size_t i = 0; i < a.parameter_count(); ++i)
            REQUIRE(a.get_parameter(i) == b.get_parameter(i));
    }

    SUBCASE("a shared generator advances between networks") {
        std::mt19937_64 rng(42);
        Network a(small_config({2, 8, 1}), rng);
        Network b(small_config({2, 8, 1}), rng);
        CHECK(a.get_parameter(0) != b.get_parameter(0));
    }
}

TEST_CASE("forward pass") {
    SUBCASE("all-zero parameters give probability one half") {
        Network net(small_config({2, 8, 1}), 3);
        fill_parameters(net, 0.0);
        CHECK(net.forward({0.3, 0.9}) == 0.5);
        CHECK(net.predict({0.3, 0.9}) == 1);  // the 0.5 threshold is inclusive
    }

    SUBCASE("a hand-computed single-layer network") {
        Network net(small_config({2, 1}), 3);
        net.set_parameter(0, 1.0);   // w1
        net.set_parameter(1, -1.0);  // w2
        net.set_parameter(2, 0.5);   // bias
        const double z = 1.0 * 0.2 - 1.0 * 0.4 + 0.5;
        CHECK(net.forward({0.2, 0.4}) == doctest::Approx(sigmoid(z)));
    }

    SUBCASE("the hidden activation is leaky, not dead") {
        Network net(small_config({1, 1, 1}), 3);
        net.set_parameter(0, -1.0);  // hidden weight: z = -x
        net.set_parameter(1, 0.0);   // hidden bias
        net.set_parameter(2, 1.0);   // output weight
        net.set_parameter(3, 0.0);   // output bias
        // x=1 -> hidden pre-activation -1 -> leaky 0.3 slope -> -0.3.
        CHECK(net.forward({1.0}) == doctest::Approx(sigmoid(-0.3)));
    }

    SUBCASE("outputs stay strictly inside (0,1) over random inputs") {
        Network net(small_config({2, 8, 1}), 11);
        std::mt19937_64 rng(5);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        for (int i = 0; i < 10000; ++i) {
            const double p = net.forward({unit(rng), unit(rng)});
            REQUIRE(p > 0.0);
            REQUIRE(p < 1.0);
        }
    }

    SUBCASE("input dimension mismatch throws") {
        Network net(small_config({2, 8, 1}), 3);
        CHECK_THROWS_AS(net.forward({0.1}), std::invalid_argument);
        CHECK_THROWS_AS(net.forward({0.1, 0.2, 0.3}), std::invalid_argument);
    }
}

TEST_CASE("batch cost") {
    Network net(small_config({2, 1}), 3);
    net.set_parameter(0, 1.0);
    net.set_parameter(1, -1.0);
    net.set_parameter(2, 0.5);

    const LabeledExample pos{{0.2, 0.4}, 1};
    const LabeledExample neg{{0.9, 0.1}, 0};
    const std::vector<WeightedExample> batch = {{&pos, 3.0}, {&neg, 1.0}};

    const double p_pos = sigmoid(0.2 - 0.4 + 0.5);
    const double p_neg = sigmoid(0.9 - 0.1 + 0.5);
    const double expected_bce = (3.0 * -std::log(p_pos) + -std::log(1.0 - p_neg)) / 2.0;

    SUBCASE("mean weighted cross-entropy without regularization") {
        CHECK(net.batch_cost(batch) == doctest::Approx(expected_bce).epsilon(1e-12));
    }

    SUBCASE("the L2 penalty adds half l2 times the squared weight norm, biases excluded") {
        NetworkConfig config = small_config({2, 1});
        config.l2 = 0.1;
        Network reg(config, 3);
        reg.set_parameter(0, 1.0);
        reg.set_parameter(1, -1.0);
        reg.set_parameter(2, 0.5);
        // Weight norm uses w1, w2 only: 0.5 * 0.1 * (1 + 1) = 0.1.
        CHECK(reg.batch_cost(batch) == doctest::Approx(expected_bce + 0.1).epsilon(1e-12));
    }

    SUBCASE("an empty batch is rejected") {
        CHECK_THROWS_AS(net.batch_cost({}), std::invalid_argument);
        CHECK_THROWS_AS(net.train_batch({}), std::invalid_argument);
        CHECK_THROWS_AS(net.cost_and_gradient({}), std::invalid_argument);
    }
}

TEST_CASE("one optimizer step per batch") {
    Network net(small_config({2, 1}), 3);
    fill_parameters(net, 0.0);

    const LabeledExample pos{{1.0, 1.0}, 1};
    const std::vector<WeightedExample> batch = {{&pos, 1.0}};

    // At zero parameters p = 0.5, so the output delta is (p - y) = -0.5 and
    // every parameter sees gradient -0.5. The first bias-corrected step moves
    // each by lr * g / (|g| + eps) ~= lr in the descent direction.
    const double cost = net.train_batch(batch);
    CHECK(cost == doctest::Approx(std::log(2.0)).epsilon(1e-12));
    CHECK(net.update_count() == 1);
    for (std::size_t i = 0; i < net.parameter_count(); ++i)
        CHECK(net.get_parameter(i) == doctest::Approx(0.01).epsilon(1e-6));

    SUBCASE("repeated steps drive the cost down") {
        double last = cost;
        for (int i = 0; i < 200; ++i) last = net.train_batch(batch);
        CHECK(net.update_count() == 201);
        CHECK(last < 0.1);
        CHECK(net.forward(pos.x) > 0.9);
    }
}

TEST_CASE("analytic gradients match central differences") {
    NetworkConfig config = small_config({2, 4, 1});
    config.l2 = 0.01;
    Network net(config, 1234);

    std::mt19937_64 rng(4321);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_real_distribution<double> weight_dist(0.5, 20.0);
    std::uniform_int_distribution<int> size_dist(1, 8);
    std::uniform_int_distribution<int> label_dist(0, 1);

    double max_rel = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
        const int batch_size = size_dist(rng);
        std::vector<LabeledExample> storage;
        storage.reserve(static_cast<std::size_t>(batch_size));
        std::vector<WeightedExample> batch;
        for (int i = 0; i < batch_size; ++i) {
            storage.push_back({{unit(rng), unit(rng)}, label_dist(rng)});
            batch.push_back({&storage.back(), weight_dist(rng)});
        }

        const auto [cost, grad] = net.cost_and_gradient(batch);
        CHECK(cost == doctest::Approx(net.batch_cost(batch)).epsilon(1e-12));

        for (std::size_t k = 0; k < net.parameter_count(); ++k) {
            const double theta = net.get_parameter(k);
            const double h = 1e-6 * std::max(1.0, std::fabs(theta));
            net.set_parameter(k, theta + h);
            const double cost_hi = net.batch_cost(batch);
            net.set_parameter(k, theta - h);
            const double cost_lo = net.batch_cost(batch);
            net.set_parameter(k, theta);
            const double numeric = (cost_hi - cost_lo) / (2.0 * h);
            const double denom = std::max(1e-4, std::fabs(numeric) + std::fabs(grad[k]));
            max_rel = std::max(max_rel, std::fabs(numeric - grad[k]) / denom);
        }
        // Perturb the parameters a little so each trial sees a new point.
        net.train_batch(batch);
    }
    CHECK(max_rel < 1e-4);
}

TEST_CASE("the gradient is gated where the probability clip is active") {
    NetworkConfig config = small_config({2, 1});
    Network net(config, 3);
    fill_parameters(net, 0.0);
    net.set_parameter(2, 50.0);  // p = sigmoid(50), clipped to 1 - 1e-7

    const LabeledExample neg{{0.5, 0.5}, 0};
    const std::vector<WeightedExample> batch = {{&neg, 1.0}};

    const auto [cost, grad] = net.cost_and_gradient(batch);
    CHECK(cost == doctest::Approx(-std::log(kProbabilityClip)));
    // The clamped loss is locally flat, so the exact gradient of the cost
    // actually evaluated is zero; central differences agree.
    for (double g : grad) CHECK(g == 0.0);
}

TEST_CASE("training is deterministic given the seed") {
    const NetworkConfig config = small_config({2, 8, 1});
    Network a(config, 77);
    Network b(config, 77);

    std::mt19937_64 rng(6);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        const LabeledExample example{{unit(rng), unit(rng)}, i % 2};
        const std::vector<WeightedExample> batch = {{&example, 1.0 + (i % 3)}};
        const double cost_a = a.train_batch(batch);
        const double cost_b = b.train_batch(batch);
        REQUIRE(cost_a == cost_b);
    }
    for (std::size_t i = 0; i < a.parameter_count(); ++i)
        REQUIRE(a.get_parameter(i) == b.get_parameter(i));
}

TEST_CASE("configuration validation") {
    CHECK_THROWS_AS(Network(small_config({2}), 0), std::invalid_argument);
    CHECK_THROWS_AS(Network(small_config({2, 8, 2}), 0), std::invalid_argument);
    CHECK_THROWS_AS(Network(small_config({2, 0, 1}), 0), std::invalid_argument);

    NetworkConfig bad = small_config({2, 1});
    SUBCASE("learning rate") {
        bad.learning_rate = 0.0;
        CHECK_THROWS_AS(Network(bad, 0), std::invalid_argument);
    }
    SUBCASE("l2") {
        bad.l2 = -0.1;
        CHECK_THROWS_AS(Network(bad, 0), std::invalid_argument);
    }
    SUBCASE("betas") {
        bad.beta1 = 1.0;
        CHECK_THROWS_AS(Network(bad, 0), std::invalid_argument);
    }
    SUBCASE("epsilon") {
        bad.epsilon = 0.0;
        CHECK_THROWS_AS(Network(bad, 0), std::invalid_argument);
    }

    SUBCASE("parameter index bounds") {
        Network net(small_config({2, 1}), 0);
        CHECK_THROWS_AS(net.get_parameter(3), std::out_of_range);
        CHECK_THROWS_AS(net.set_parameter(3, 0.0), std::out_of_range);
    }
}
