// Copyright 2026 The AHL Simulator Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "ahl/circuit.hpp"
#include "ahl/training.hpp"

#include "test_util.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace ahl {
namespace {

using std::numbers::pi;

Dataset small_cosine(std::size_t n_train, std::size_t n_test, std::uint64_t seed) {
    Rng rng(seed);
    Dataset d;
    for (std::size_t k = 0; k < n_train + n_test; ++k) {
        const double x = rng.uniform(0.0, 2.0 * pi);
        d.inputs.push_back({x, x});
        d.labels.push_back(std::cos(x));
    }
    d.n_train = n_train;
    d.n_test = n_test;
    return d;
}

CircuitIR small_model(std::size_t layers, std::optional<double> p = std::nullopt) {
    // Unit-angle coefficients: every parameterized gate turns by its parameter.
    const auto spec = LatticeSpec::chain(2, 0.5 / pi, 1.0 / pi, 0.5);
    return build_ahl_circuit(spec, layers, p).with_readout({1});
}

TEST(TrainConfig, Validation) {
    TrainConfig ok;
    EXPECT_NO_THROW(ok.validate());
    auto c = ok;
    c.learning_rate = 0.0;
    EXPECT_NO_THROW(c.validate());
    c.learning_rate = -0.1;
    EXPECT_THROW(c.validate(), std::invalid_argument);
    c = ok;
    c.epochs = 0;
    EXPECT_THROW(c.validate(), std::invalid_argument);
    c = ok;
    c.fd_step = 0.0;
    EXPECT_THROW(c.validate(), std::invalid_argument);
    c = ok;
    c.decision_boundary = 1.0;
    EXPECT_THROW(c.validate(), std::invalid_argument);
    c = ok;
    c.p_damp = 1.5;
    EXPECT_THROW(c.validate(), std::invalid_argument);
}

TEST(Dataset, Validation) {
    Dataset d = small_cosine(3, 2, 1);
    EXPECT_NO_THROW(d.validate());
    EXPECT_EQ(d.train_inputs().size(), 3u);
    EXPECT_EQ(d.test_labels().size(), 2u);
    d.n_test = 3;
    EXPECT_THROW(d.validate(), std::invalid_argument);
    d.n_test = 2;
    d.labels.pop_back();
    EXPECT_THROW(d.validate(), std::invalid_argument);
}

TEST(Predict, IdentityCircuitReadsPlusOne) {
    const auto c = small_model(2);
    const double x[] = {0.0, 0.0};
    // Zero parameters leave only the CNOTs, which fix |00>.
    EXPECT_NEAR(predict(c, ParamSet(c.layout()), x), 1.0, 1e-15);
}

TEST(Predict, Deterministic) {
    Rng rng(71);
    const auto c = small_model(3, 0.05);
    const auto p = random_params(c.layout(), 5);
    const double x[] = {0.4, 1.3};
    const double a = predict(c, p, x);
    const double b = predict(c, p, x);
    EXPECT_EQ(a, b);
}

TEST(Predict, MatchesStatevectorOracle) {
    Rng rng(72);
    const auto c = build_ahl_circuit(LatticeSpec::diagonal(1), 1, 0.0);
    for (int trial = 0; trial < 20; ++trial) {
        const auto p = random_params(c.layout(), rng.next());
        const double x[] = {rng.uniform(0, pi), rng.uniform(0, pi)};
        std::vector<Operation> ops;
        for (const auto &g : angle_encode(x, 2)) {
            ops.emplace_back(g);
        }
        for (const auto &op : c.bind(p)) {
            if (std::holds_alternative<Gate>(op)) {
                ops.push_back(op);
            }
        }
        const auto psi = run(ops, StateVector(2));
        const double oracle = expectation(psi, z_observable(2, 1));
        EXPECT_NEAR(predict(c, p, x), oracle, 1e-9);
    }
}

TEST(Predict, RejectsIncompatibleWidth) {
    const auto c = small_model(1);
    const double x[] = {0.1, 0.2, 0.3};
    EXPECT_THROW((void)predict(c, ParamSet(c.layout()), x), std::invalid_argument);
}

TEST(BatchPredictor, AgreesWithPredict) {
    Rng rng(73);
    const CircuitIR circuits[] = {small_model(3, 0.1), build_qnn_cls_circuit(2, 3, 0.05),
                                  build_qnn_sim_circuit(2, 0.2)};
    for (const auto &c : circuits) {
        std::vector<std::vector<double>> inputs;
        for (int k = 0; k < 10; ++k) {
            std::vector<double> x(c.n_qubits());
            for (auto &v : x) {
                v = rng.uniform(0.0, 2.0 * pi);
            }
            inputs.push_back(x);
        }
        const BatchPredictor batch(c, inputs);
        EXPECT_EQ(batch.size(), 10u);
        const auto p = random_params(c.layout(), rng.next());
        const auto fast = batch.predict(p);
        for (std::size_t k = 0; k < inputs.size(); ++k) {
            EXPECT_NEAR(fast[k], predict(c, p, inputs[k]), 1e-12);
        }
    }
}

TEST(Loss, Examples) {
    const double y[] = {0.5, -0.3};
    EXPECT_EQ(loss(y, y), 0.0);
    const double ones[] = {1.0, 1.0};
    const double zeros[] = {0.0, 0.0};
    EXPECT_NEAR(loss(ones, zeros), 1.0, 0.0);
    const double p3[] = {0.2, -0.4, 0.9};
    const double y3[] = {0.0, 0.0, 1.0};
    EXPECT_NEAR(loss(p3, y3), 0.7 / 3.0, 1e-15);
    EXPECT_THROW((void)loss(p3, y), std::invalid_argument);
    EXPECT_THROW((void)loss(std::span<const double>(), std::span<const double>()),
                 std::invalid_argument);
}

TEST(Loss, NonNegativeAndZeroOnlyOnEquality) {
    Rng rng(74);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<double> a(5);
        std::vector<double> b(5);
        for (std::size_t i = 0; i < 5; ++i) {
            a[i] = rng.uniform(-1, 1);
            b[i] = rng.uniform(-1, 1);
        }
        EXPECT_GT(loss(a, b), 0.0);
        EXPECT_EQ(loss(a, a), 0.0);
    }
}

TEST(FdGradient, Examples) {
    const ParamSet p(qnn_layout(1), {0.0, 0.0});
    EXPECT_EQ(fd_gradient([](const ParamSet &) { return 3.0; }, p, 0, 1e-3), 0.0);
    EXPECT_NEAR(fd_gradient([](const ParamSet &q) { return std::sin(q[0]); }, p, 0,
                            1e-4),
                1.0, 1e-6);

    int calls = 0;
    (void)fd_gradient(
        [&](const ParamSet &) {
            ++calls;
            return 0.0;
        },
        p, 1, 1e-3);
    EXPECT_EQ(calls, 2);

    EXPECT_THROW((void)fd_gradient([](const ParamSet &) { return 0.0; }, p, 0, 0.0),
                 std::invalid_argument);
    EXPECT_THROW((void)fd_gradient([](const ParamSet &) { return NAN; }, p, 0, 1e-3),
                 std::runtime_error);
}

TEST(FdGradient, SingleRxExpectation) {
    CircuitIR c(1, qnn_layout(1), {0});
    c.append(ParamGate{GateKind::RX, 0, {ParamGroup::ALPHA, 0}, 1.0});
    const double x[] = {0.0};
    const Objective f = [&](const ParamSet &q) { return predict(c, q, x); };
    const ParamSet p(c.layout(), {0.7, 0.0});
    EXPECT_NEAR(fd_gradient(f, p, 0, 1e-3), -std::sin(0.7), 1e-5);
}

TEST(FdGradient, MatchesParameterShift) {
    Rng rng(75);
    CircuitIR c(2, qnn_layout(1), {1});
    c.append(Gate::ry(0, 0.4));
    c.append(ParamGate{GateKind::RY, 1, {ParamGroup::THETA, 0}, 1.0});
    c.append(Gate::cnot(0, 1));
    const double x[] = {0.3, 0.9};
    const Objective f = [&](const ParamSet &q) { return predict(c, q, x); };
    for (int trial = 0; trial < 50; ++trial) {
        const double t = rng.uniform(0.0, 2.0 * pi);
        const ParamSet p(c.layout(), {0.0, t});
        const double shift =
            0.5 * (f(p.with(1, t + pi / 2)) - f(p.with(1, t - pi / 2)));
        EXPECT_NEAR(fd_gradient(f, p, 1, 1e-4), shift, 1e-4);
    }
}

TEST(SgdStep, Examples) {
    const ParamLayout three({ParamGroup::THETA, ParamGroup::RHO, ParamGroup::GAMMA}, 1);
    const ParamSet p(three, {1.0, 2.0, 3.0});
    const double zero[] = {0.0, 0.0, 0.0};
    const double half[] = {0.5, 0.5, 0.5};
    EXPECT_EQ(sgd_step(p, zero, 0.2), p);
    EXPECT_EQ(sgd_step(p, half, 0.0), p);
    const auto q = sgd_step(p, half, 0.2);
    EXPECT_NEAR(q[0], 0.9, 1e-15);
    EXPECT_NEAR(q[1], 1.9, 1e-15);
    EXPECT_NEAR(q[2], 2.9, 1e-15);
    const double two[] = {0.5, 0.5};
    EXPECT_THROW((void)sgd_step(p, two, 0.2), std::invalid_argument);
}

TEST(SgdStep, Linear) {
    Rng rng(76);
    const auto layout = ahl_layout(3);
    for (int trial = 0; trial < 50; ++trial) {
        const auto p = random_params(layout, rng.next());
        std::vector<double> g1(layout.size());
        std::vector<double> g2(layout.size());
        std::vector<double> sum(layout.size());
        for (std::size_t i = 0; i < layout.size(); ++i) {
            g1[i] = rng.uniform(-1, 1);
            g2[i] = rng.uniform(-1, 1);
            sum[i] = g1[i] + g2[i];
        }
        const double r = rng.uniform(0, 1);
        const auto once = sgd_step(p, sum, r);
        const auto twice = sgd_step(sgd_step(p, g1, r), g2, r);
        for (std::size_t i = 0; i < layout.size(); ++i) {
            EXPECT_NEAR(once[i], twice[i], 1e-12);
        }
    }
}

TEST(RandomParams, UniformRangeAndSeeded) {
    const auto layout = ahl_layout(10);
    const auto a = random_params(layout, 9);
    EXPECT_EQ(a, random_params(layout, 9));
    EXPECT_NE(a, random_params(layout, 10));
    for (double v : a.values()) {
        EXPECT_GE(v, 0.0);
        EXPECT_LT(v, 2.0 * pi);
    }
}

TEST(Train, FrozenSingleEpoch) {
    const auto c = small_model(2);
    TrainConfig cfg;
    cfg.epochs = 1;
    cfg.learning_rate = 0.0;
    const auto rec = train(c, small_cosine(20, 10, 3), cfg);
    EXPECT_EQ(rec.loss_curve.size(), 1u);
    EXPECT_EQ(rec.final_params, rec.initial_params);
    EXPECT_EQ(rec.initial_params, random_params(c.layout(), cfg.seed));
    EXPECT_EQ(rec.train_metric, rec.initial_train_metric);
    EXPECT_EQ(rec.config_echo, cfg);
}

TEST(Train, DeterministicForFixedSeed) {
    const auto c = small_model(3, 0.05);
    const auto data = small_cosine(30, 10, 4);
    TrainConfig cfg;
    cfg.epochs = 15;
    const auto a = train(c, data, cfg);
    const auto b = train(c, data, cfg);
    EXPECT_EQ(a.loss_curve, b.loss_curve);
    EXPECT_EQ(a.final_params, b.final_params);
    EXPECT_EQ(a.test_metric, b.test_metric);
    EXPECT_EQ(loss_csv(a), loss_csv(b));
    EXPECT_EQ(summary_csv(a), summary_csv(b));
}

TEST(Train, LossCurveLengthAndDecrease) {
    const auto c = small_model(2);
    TrainConfig cfg;
    cfg.epochs = 40;
    const auto rec = train(c, small_cosine(40, 20, 5), cfg);
    EXPECT_EQ(rec.loss_curve.size(), 40u);
    EXPECT_LT(rec.loss_curve.back(), rec.loss_curve.front());
    EXPECT_LT(rec.train_metric, rec.initial_train_metric);
}

TEST(Train, ParametersStayInPeriod) {
    const auto c = small_model(2);
    TrainConfig cfg;
    cfg.epochs = 20;
    cfg.learning_rate = 3.0;
    const auto rec = train(c, small_cosine(20, 5, 6), cfg);
    for (double v : rec.final_params.values()) {
        EXPECT_GE(v, 0.0);
        EXPECT_LT(v, 2.0 * pi);
    }
}

TEST(Train, RejectsInvalidInputs) {
    const auto c = small_model(1);
    TrainConfig cfg;
    cfg.epochs = 0;
    EXPECT_THROW((void)train(c, small_cosine(5, 5, 7), cfg), std::invalid_argument);
    cfg.epochs = 1;
    auto bad = small_cosine(5, 5, 7);
    bad.n_train = 0;
    bad.n_test = 10;
    EXPECT_THROW((void)train(c, bad, cfg), std::invalid_argument);
}

TEST(Classify, SignRuleWithTiesToPlus) {
    EXPECT_EQ(classify(0.9, 0.3), 1);
    EXPECT_EQ(classify(-0.9, 0.3), -1);
    EXPECT_EQ(classify(0.0, 0.3), 1);
    EXPECT_EQ(classify(-1e-300, 0.0), -1);
    EXPECT_THROW((void)classify(0.1, 1.0), std::invalid_argument);
    EXPECT_THROW((void)classify(0.1, -0.1), std::invalid_argument);
}

TEST(Accuracy, Examples) {
    const double pred[] = {0.5, -0.2, 0.0};
    const double same[] = {1.0, -1.0, 1.0};
    const double flip[] = {-1.0, 1.0, -1.0};
    EXPECT_EQ(accuracy(pred, same), 1.0);
    EXPECT_EQ(accuracy(pred, flip), 0.0);

    std::vector<int> got(150, 1);
    std::vector<int> want(150, 1);
    want[0] = want[10] = want[20] = -1;
    EXPECT_NEAR(match_fraction(got, want), 0.98, 1e-15);

    EXPECT_THROW((void)accuracy(pred, std::span<const double>(same, 2)),
                 std::invalid_argument);
    EXPECT_THROW((void)match_fraction(std::span<const int>(), std::span<const int>()),
                 std::invalid_argument);
}

TEST(Csv, LossAndSummaryLayout) {
    const auto c = small_model(1);
    TrainConfig cfg;
    cfg.epochs = 3;
    const auto rec = train(c, small_cosine(6, 2, 8), cfg);
    const auto lc = loss_csv(rec);
    EXPECT_EQ(lc.rfind("epoch,loss\n0,", 0), 0u);
    EXPECT_EQ(std::count(lc.begin(), lc.end(), '\n'), 4);
    const auto sc = summary_csv(rec);
    EXPECT_EQ(sc.rfind("key,value\nmetric,mae\n", 0), 0u);
    EXPECT_NE(sc.find("test_mae,"), std::string::npos);
}

} // namespace
} // namespace ahl
