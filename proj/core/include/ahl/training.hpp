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
/**
 * @file training.hpp
 * Mean-absolute-error loss, central finite-difference gradients, plain
 * gradient descent and the full-batch training loop.
 */
#pragma once

#include "ahl/circuit.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace ahl {

enum class Metric { MAE, ACCURACY };

std::string_view to_string(Metric m);

struct TrainConfig {
    double learning_rate = 0.2;
    std::size_t epochs = 300;
    double fd_step = 1e-3;
    std::uint64_t seed = 42;
    double decision_boundary = 0.0;
    /// Echoed into the summary; the channels themselves live in the circuit.
    double p_damp = 0.0;
    Metric metric = Metric::MAE;

    /// Throws std::invalid_argument unless R >= 0, E_t >= 1, fd_step > 0
    /// and 0 <= g < 1. R = 0 freezes the parameters.
    void validate() const;

    friend bool operator==(const TrainConfig &, const TrainConfig &) = default;
};

/// Samples [0, n_train) are the training split, the rest the test split.
struct Dataset {
    std::vector<std::vector<double>> inputs;
    std::vector<double> labels;
    std::size_t n_train = 0;
    std::size_t n_test = 0;

    void validate() const;

    [[nodiscard]] std::span<const std::vector<double>> train_inputs() const {
        return std::span(inputs).first(n_train);
    }
    [[nodiscard]] std::span<const double> train_labels() const {
        return std::span(labels).first(n_train);
    }
    [[nodiscard]] std::span<const std::vector<double>> test_inputs() const {
        return std::span(inputs).subspan(n_train, n_test);
    }
    [[nodiscard]] std::span<const double> test_labels() const {
        return std::span(labels).subspan(n_train, n_test);
    }
};

struct RunRecord {
    std::vector<double> loss_curve; // full-batch training loss before each epoch's update
    ParamSet initial_params;
    ParamSet final_params;
    Metric metric = Metric::MAE;
    double initial_train_metric = 0.0;
    double initial_test_metric = 0.0;
    double train_metric = 0.0;
    double test_metric = 0.0;
    TrainConfig config_echo;
};

/// Forward density-matrix simulation of angle_encode(x) + bound circuit,
/// returning the mean <Z> over the circuit's readout qubits.
double predict(const CircuitIR &circuit, const ParamSet &params,
               std::span<const double> x);

/**
 * Evaluates one circuit on a fixed batch of inputs for many parameter
 * sets. The encoded inputs are pure product states, so each call pulls the
 * readout observable back through the bound circuit once and then costs a
 * single quadratic form per sample. Agrees with predict() to rounding.
 */
class BatchPredictor {
  public:
    BatchPredictor(const CircuitIR &circuit,
                   std::span<const std::vector<double>> inputs);

    [[nodiscard]] std::vector<double> predict(const ParamSet &params) const;
    [[nodiscard]] std::size_t size() const noexcept { return encoded_.size(); }

  private:
    const CircuitIR *circuit_;
    CMatrix observable_;
    std::vector<std::vector<Complex>> encoded_;
};

/// (1/W) sum |pred_k - label_k|
double loss(std::span<const double> predictions, std::span<const double> labels);

using Objective = std::function<double(const ParamSet &)>;

/// (f(p + step e_j) - f(p - step e_j)) / (2 step); exactly two evaluations.
double fd_gradient(const Objective &objective, const ParamSet &params,
                   std::size_t index, double step);

/// p - rate * grads, elementwise.
ParamSet sgd_step(const ParamSet &params, std::span<const double> grads,
                  double rate);

/// Initial parameters: uniform in [0, 2 pi) from `seed`.
ParamSet random_params(const ParamLayout &layout, std::uint64_t seed);

/// Full-batch finite-difference gradient descent. Throws std::runtime_error
/// if the loss becomes non-finite.
RunRecord train(const CircuitIR &circuit, const Dataset &data,
                const TrainConfig &cfg);

/// Sign rule with ties to +1. Returns +1 or -1; `g` only has to be a valid
/// boundary width, it does not create a reject region.
int classify(double prediction, double g);

/// Fraction of entries whose sign label matches.
double accuracy(std::span<const double> predictions,
                std::span<const double> labels);

/// Fraction of exact matches between two label lists.
double match_fraction(std::span<const int> predicted,
                      std::span<const int> labels);

/// `epoch,loss` rows, 17 significant digits.
std::string loss_csv(const RunRecord &record);

/// `key,value` rows: metrics, final parameters and the config echo.
std::string summary_csv(const RunRecord &record);

} // namespace ahl
