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
 * @file config.hpp
 * Experiment configuration and its flat `key=value` file format. One key per
 * line, `#` starts a comment, keys are the field names of ExperimentConfig.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace ahl {

enum class Task { COS, DAMPED_SINE, CLASSIFY };
enum class Model { RQNN, QNN };

std::string_view to_string(Task t);
std::string_view to_string(Model m);
/// Case-insensitive; throws std::invalid_argument on unknown names.
Task task_from_string(std::string_view s);
Model model_from_string(std::string_view s);

struct ExperimentConfig {
    std::string name = "custom";
    Task task = Task::COS;
    Model model = Model::RQNN;
    std::size_t depth = 10;
    std::size_t n_qubits = 2;
    std::size_t n_train = 600;
    std::size_t n_test = 200;
    double learning_rate = 0.2;
    std::size_t epochs = 300;
    double p_damp = 0.05;
    double decision_boundary = 0.0;
    std::uint64_t seed = 42;
    std::string output_dir = "out";

    /// Throws std::invalid_argument naming the offending field.
    void validate() const;

    friend bool operator==(const ExperimentConfig &,
                           const ExperimentConfig &) = default;
};

/**
 * Applies the `key=value` lines of `text` on top of `base`. Unknown keys,
 * duplicate keys, lines without '=' and unparsable values throw
 * std::invalid_argument with the line number. The result is validated.
 */
ExperimentConfig parse_config(std::string_view text,
                              const ExperimentConfig &base = {});

/// Reads and parses a config file; errors carry the path.
ExperimentConfig load_config(const std::string &path);

/// Inverse of parse_config: every field, one per line, in declaration order.
std::string format_config(const ExperimentConfig &cfg);

} // namespace ahl
