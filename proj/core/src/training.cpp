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
#include "ahl/training.hpp"

#include "ahl/format.hpp"
#include "ahl/rng.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ahl {

std::string_view to_string(Metric m) {
    return m == Metric::MAE ? "mae" : "accuracy";
}

void TrainConfig::validate() const {
    if (!(learning_rate >= 0.0) || !std::isfinite(learning_rate)) {
        throw std::invalid_argument("TrainConfig: learning_rate must be >= 0");
    }
    if (epochs == 0) {
        throw std::invalid_argument("TrainConfig: epochs must be >= 1");
    }
    if (!(fd_step > 0.0) || !std::isfinite(fd_step)) {
        throw std::invalid_argument("TrainConfig: fd_step must be > 0");
    }
    if (!(decision_boundary >= 0.0 && decision_boundary < 1.0)) {
        throw std::invalid_argument(
            "TrainConfig: decision_boundary must lie in [0, 1)");
    }
    if (!(p_damp >= 0.0 && p_damp <= 1.0)) {
        throw std::invalid_argument("TrainConfig: p_damp must lie in [0, 1]");
    }
}

void Dataset::validate() const {
    if (inputs.size() != labels.size()) {
        throw std::invalid_argument("Dataset: inputs and labels differ in size");
    }
    if (n_train + n_test != inputs.size()) {
        throw std::invalid_argument("Dataset: split counts do not sum to total");
    }
    if (n_train == 0) {
        throw std::invalid_argument("Dataset: empty training split");
    }
}

double predict(const CircuitIR &circuit, const ParamSet &params,
               std::span<const double> x) {
    const std::size_t n = circuit.n_qubits();
    // Features wrap onto the register in whole rounds.
    if (x.size() > n && x.size() % n != 0) {
        throw std::invalid_argument("predict: feature width " +
                                    std::to_string(x.size()) +
                                    " incompatible with " + std::to_string(n) +
                                    "-qubit circuit");
    }
    std::vector<Operation> ops;
    for (auto &g : angle_encode(x, n)) {
        ops.emplace_back(std::move(g));
    }
    for (auto &op : circuit.bind(params)) {
        ops.push_back(std::move(op));
    }
    const DensityMatrix out = run(ops, DensityMatrix(n));
    double acc = 0.0;
    for (auto q : circuit.readout_qubits()) {
        acc += readout(out, q);
    }
    return acc / static_cast<double>(circuit.readout_qubits().size());
}

BatchPredictor::BatchPredictor(const CircuitIR &circuit,
                               std::span<const std::vector<double>> inputs)
    : circuit_(&circuit),
      observable_(mean_z_observable(circuit.n_qubits(),
                                    circuit.readout_qubits())) {
    const std::size_t n = circuit.n_qubits();
    encoded_.reserve(inputs.size());
    for (const auto &x : inputs) {
        std::vector<Operation> ops;
        for (auto &g : angle_encode(x, n)) {
            ops.emplace_back(std::move(g));
        }
        encoded_.push_back(run(ops, StateVector(n)).amplitudes());
    }
}

std::vector<double> BatchPredictor::predict(const ParamSet &params) const {
    const auto ops = circuit_->bind(params);
    const CMatrix obs = heisenberg(ops, circuit_->n_qubits(), observable_);
    const std::size_t d = obs.rows();
    std::vector<double> out;
    out.reserve(encoded_.size());
    for (const auto &psi : encoded_) {
        Complex acc{0.0, 0.0};
        for (std::size_t i = 0; i < d; ++i) {
            Complex row{0.0, 0.0};
            for (std::size_t j = 0; j < d; ++j) {
                row += obs(i, j) * psi[j];
            }
            acc += std::conj(psi[i]) * row;
        }
        out.push_back(std::clamp(acc.real(), -1.0, 1.0));
    }
    return out;
}

double loss(std::span<const double> predictions,
            std::span<const double> labels) {
    if (predictions.size() != labels.size()) {
        throw std::invalid_argument("loss: length mismatch");
    }
    if (predictions.empty()) {
        throw std::invalid_argument("loss: empty batch");
    }
    double sum = 0.0;
    for (std::size_t k = 0; k < predictions.size(); ++k) {
        sum += std::abs(predictions[k] - labels[k]);
    }
    return sum / static_cast<double>(predictions.size());
}

double fd_gradient(const Objective &objective, const ParamSet &params,
                   std::size_t index, double step) {
    if (!(step > 0.0)) {
        throw std::invalid_argument("fd_gradient: step must be > 0");
    }
    const double v = params[index];
    const double up = objective(params.with(index, v + step));
    const double down = objective(params.with(index, v - step));
    if (!std::isfinite(up) || !std::isfinite(down)) {
        throw std::runtime_error("fd_gradient: non-finite objective value");
    }
    return (up - down) / (2.0 * step);
}

ParamSet sgd_step(const ParamSet &params, std::span<const double> grads,
                  double rate) {
    if (grads.size() != params.size()) {
        throw std::invalid_argument("sgd_step: gradient length mismatch");
    }
    std::vector<double> next(params.values().begin(), params.values().end());
    for (std::size_t i = 0; i < next.size(); ++i) {
        next[i] -= rate * grads[i];
    }
    return ParamSet(params.layout(), std::move(next));
}

ParamSet random_params(const ParamLayout &layout, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<double> values(layout.size());
    for (auto &v : values) {
        v = rng.uniform(0.0, 2.0 * std::numbers::pi);
    }
    return ParamSet(layout, std::move(values));
}

namespace {

double metric_value(Metric m, std::span<const double> pred,
                    std::span<const double> labels) {
    if (labels.empty()) {
        return 0.0;
    }
    return m == Metric::MAE ? loss(pred, labels) : accuracy(pred, labels);
}

// A slot that leaves [0, 2 pi) is folded back by whole periods of its own
// gate action, which leaves the bound circuit unchanged.
ParamSet wrap(const CircuitIR &circuit, const ParamSet &params) {
    constexpr double kTwoPi = 2.0 * std::numbers::pi;
    std::vector<double> values(params.values().begin(), params.values().end());
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] >= 0.0 && values[i] < kTwoPi) {
            continue;
        }
        const auto period = circuit.slot_period(params.layout().slot(i));
        if (period) {
            values[i] -= *period * std::floor(values[i] / *period);
        }
    }
    return ParamSet(params.layout(), std::move(values));
}

} // namespace

RunRecord train(const CircuitIR &circuit, const Dataset &data,
                const TrainConfig &cfg) {
    cfg.validate();
    data.validate();

    const BatchPredictor train_batch(circuit, data.train_inputs());
    const BatchPredictor test_batch(circuit, data.test_inputs());
    const auto train_labels = data.train_labels();
    const auto test_labels = data.test_labels();

    const Objective objective = [&](const ParamSet &p) {
        return loss(train_batch.predict(p), train_labels);
    };

    ParamSet params = random_params(circuit.layout(), cfg.seed);
    RunRecord rec{.loss_curve = {},
                  .initial_params = params,
                  .final_params = params,
                  .metric = cfg.metric,
                  .initial_train_metric = metric_value(
                      cfg.metric, train_batch.predict(params), train_labels),
                  .initial_test_metric = metric_value(
                      cfg.metric, test_batch.predict(params), test_labels),
                  .train_metric = 0.0,
                  .test_metric = 0.0,
                  .config_echo = cfg};
    rec.loss_curve.reserve(cfg.epochs);

    // Slots are visited layer by layer, group by group (theta_j, rho_j,
    // gamma_j, then layer j+1), and each one is updated in place before the
    // next gradient is taken.
    const ParamLayout &layout = circuit.layout();
    std::vector<std::size_t> order;
    order.reserve(layout.size());
    for (std::size_t layer = 0; layer < layout.layers(); ++layer) {
        for (auto g : layout.groups()) {
            order.push_back(layout.index({g, layer}));
        }
    }

    std::vector<double> onehot(params.size(), 0.0);
    for (std::size_t epoch = 0; epoch < cfg.epochs; ++epoch) {
        const double current = objective(params);
        if (!std::isfinite(current)) {
            throw std::runtime_error("train: loss diverged at epoch " +
                                     std::to_string(epoch));
        }
        rec.loss_curve.push_back(current);
        for (auto j : order) {
            onehot[j] = fd_gradient(objective, params, j, cfg.fd_step);
            params = wrap(circuit, sgd_step(params, onehot, cfg.learning_rate));
            onehot[j] = 0.0;
        }
    }

    rec.final_params = params;
    rec.train_metric =
        metric_value(cfg.metric, train_batch.predict(params), train_labels);
    rec.test_metric =
        metric_value(cfg.metric, test_batch.predict(params), test_labels);
    return rec;
}

int classify(double prediction, double g) {
    if (!(g >= 0.0 && g < 1.0)) {
        throw std::invalid_argument("classify: boundary width outside [0, 1)");
    }
    return prediction >= 0.0 ? 1 : -1;
}

double accuracy(std::span<const double> predictions,
                std::span<const double> labels) {
    if (predictions.size() != labels.size()) {
        throw std::invalid_argument("accuracy: length mismatch");
    }
    if (predictions.empty()) {
        throw std::invalid_argument("accuracy: empty batch");
    }
    std::size_t hits = 0;
    for (std::size_t k = 0; k < predictions.size(); ++k) {
        const int want = labels[k] >= 0.0 ? 1 : -1;
        hits += classify(predictions[k], 0.0) == want ? 1 : 0;
    }
    return static_cast<double>(hits) / static_cast<double>(predictions.size());
}

double match_fraction(std::span<const int> predicted,
                      std::span<const int> labels) {
    if (predicted.size() != labels.size()) {
        throw std::invalid_argument("match_fraction: length mismatch");
    }
    if (predicted.empty()) {
        throw std::invalid_argument("match_fraction: empty batch");
    }
    std::size_t hits = 0;
    for (std::size_t k = 0; k < predicted.size(); ++k) {
        hits += predicted[k] == labels[k] ? 1 : 0;
    }
    return static_cast<double>(hits) / static_cast<double>(predicted.size());
}

std::string loss_csv(const RunRecord &record) {
    std::string out = "epoch,loss\n";
    for (std::size_t e = 0; e < record.loss_curve.size(); ++e) {
        out += std::to_string(e) + "," + format_double(record.loss_curve[e]) +
               "\n";
    }
    return out;
}

std::string summary_csv(const RunRecord &record) {
    const std::string m(to_string(record.metric));
    const auto &c = record.config_echo;
    std::string out = "key,value\n";
    auto row = [&](const std::string &k, const std::string &v) {
        out += k + "," + v + "\n";
    };
    row("metric", m);
    row("initial_train_" + m, format_double(record.initial_train_metric));
    row("initial_test_" + m, format_double(record.initial_test_metric));
    row("train_" + m, format_double(record.train_metric));
    row("test_" + m, format_double(record.test_metric));
    row("initial_loss", record.loss_curve.empty()
                            ? "nan"
                            : format_double(record.loss_curve.front()));
    row("final_loss", record.loss_curve.empty()
                          ? "nan"
                          : format_double(record.loss_curve.back()));
    row("learning_rate", format_double(c.learning_rate));
    row("epochs", std::to_string(c.epochs));
    row("fd_step", format_double(c.fd_step));
    row("seed", std::to_string(c.seed));
    row("decision_boundary", format_double(c.decision_boundary));
    row("p_damp", format_double(c.p_damp));
    const auto &layout = record.final_params.layout();
    for (std::size_t i = 0; i < record.final_params.size(); ++i) {
        const auto s = layout.slot(i);
        row("param." + std::string(to_string(s.group)) + "." +
                std::to_string(s.layer),
            format_double(record.final_params[i]));
    }
    return out;
}

} // namespace ahl
