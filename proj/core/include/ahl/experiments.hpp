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
 * @file experiments.hpp
 * Dataset generators, model construction, presets and the run harness that
 * trains one configuration and writes its CSV/SVG artifacts.
 */
#pragma once

#include "ahl/config.hpp"
#include "ahl/hamiltonian.hpp"
#include "ahl/training.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ahl {

inline constexpr double kDampedSineDecay = 0.3;     // lambda
inline constexpr double kDampedSineFrequency = 2.0; // omega
inline constexpr double kDiskRadius = 0.35;         // r0, centred in [0,1]^2
inline constexpr std::uint64_t kDataStream = 0x9E3779B97F4A7C15ULL;

/// Seed of the dataset stream, kept apart from the parameter stream.
inline std::uint64_t data_seed(std::uint64_t seed) { return seed ^ kDataStream; }

/// exp(-lambda x) sin(omega x); already bounded by 1 in magnitude.
double damped_sine(double x);

/// Raw 1-D inputs x ~ U[0, 2 pi), y = cos x.
Dataset gen_cosine(std::size_t n_train, std::size_t n_test, std::uint64_t seed);

/// Raw 1-D inputs x ~ U[0, 2 pi), y = damped_sine(x).
Dataset gen_damped_sine(std::size_t n_train, std::size_t n_test,
                        std::uint64_t seed);

/// True when `p` lies outside the exclusion band |r - r0| < g r0.
bool outside_band(std::span<const double> p, double g);

/// +1 inside the centred disk of radius r0, -1 outside.
int disk_label(std::span<const double> p);

/**
 * 2-D points in [0,1]^2 labelled by disk_label. Points inside the band are
 * redrawn; samples alternate between the classes so both splits are
 * balanced. Throws std::invalid_argument unless total = n_train + n_test,
 * both are >= 1 and 0 <= g < 1.
 */
Dataset gen_nonlinear_classes(std::size_t total, std::size_t n_train,
                              std::size_t n_test, double g,
                              std::uint64_t seed);

/// Dataset for the configured task (raw features).
Dataset make_dataset(const ExperimentConfig &cfg);

/**
 * Rotation angles for one raw sample. Regression inputs are used as-is,
 * classification features in [0,1] are scaled by 2 pi; the features are
 * then repeated until every qubit carries one.
 */
std::vector<double> encode_features(Task task, std::span<const double> raw,
                                    std::size_t n_qubits);

/**
 * Lattice behind the RQNN model: a SHARED chain on `n_qubits` with
 * V = 1/(2 pi), J = 1/pi and hbar = 1/2, so every parameterized gate turns
 * by exactly its parameter.
 */
LatticeSpec model_lattice(std::size_t n_qubits);

/**
 * Circuit for the configured model. Regression reads the last qubit,
 * classification the mean over all qubits. Noise is attached when
 * p_damp > 0.
 */
CircuitIR build_model(const ExperimentConfig &cfg);

TrainConfig train_config(const ExperimentConfig &cfg);

struct ExperimentResult {
    ExperimentConfig config;
    Dataset data; // raw features
    RunRecord record;
    std::vector<double> train_predictions;
    std::vector<double> test_predictions;
};

/// Trains `cfg` and, when `write_artifacts`, writes into cfg.output_dir:
/// config.txt, loss.csv, summary.csv, loss.svg and either predictions.csv +
/// fit.svg (regression) or accuracy.csv (classification).
ExperimentResult run_experiment(const ExperimentConfig &cfg,
                                bool write_artifacts = true);

/// `x,y_true,y_pred` rows of the test split.
std::string predictions_csv(const ExperimentResult &result);

/// `model,split,accuracy` rows for train and test.
std::string accuracy_csv(const ExperimentResult &result);

struct AccuracyRow {
    std::string model;
    double train_accuracy = 0.0;
    double test_accuracy = 0.0;
};

/// `model,train_accuracy,test_accuracy` rows plus a `Gap` row
/// (RQNN - QNN) when both models are present. Throws on an empty list.
std::string compare_table(std::span<const AccuracyRow> rows);
std::string compare_table(std::span<const ExperimentResult> results);

struct Preset {
    std::string name;
    std::string description;
    std::vector<ExperimentConfig> runs;
};

/// exp01, exp02, exp03 and cls.
const std::vector<Preset> &presets();

/// Runs of a top-level preset, or the single run with that name
/// (e.g. "exp01-d10", "cls-qnn"). Throws std::invalid_argument otherwise.
std::vector<ExperimentConfig> resolve_preset(std::string_view name);

/// Seeds used for multi-seed comparisons.
inline constexpr std::uint64_t kDefaultSeeds[5] = {42, 43, 44, 45, 46};

} // namespace ahl
