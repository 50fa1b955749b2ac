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
#include "ahl/config.hpp"

#include "ahl/format.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ahl {

namespace {

std::string upper(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
        return static_cast<char>(std::toupper(c));
    });
    return out;
}

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

template <class T> T parse_integer(std::string_view v) {
    T out{};
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc{} || ptr != v.data() + v.size()) {
        throw std::invalid_argument("expected a non-negative integer, got '" +
                                    std::string(v) + "'");
    }
    return out;
}

double parse_real(std::string_view v) {
    std::istringstream in{std::string(v)};
    in.imbue(std::locale::classic());
    double out = 0.0;
    in >> out;
    if (in.fail() || !in.eof() || !std::isfinite(out)) {
        throw std::invalid_argument("expected a finite number, got '" +
                                    std::string(v) + "'");
    }
    return out;
}

void set_field(ExperimentConfig &cfg, std::string_view key,
               std::string_view value) {
    if (key == "name") {
        cfg.name = value;
    } else if (key == "task") {
        cfg.task = task_from_string(value);
    } else if (key == "model") {
        cfg.model = model_from_string(value);
    } else if (key == "depth") {
        cfg.depth = parse_integer<std::size_t>(value);
    } else if (key == "n_qubits") {
        cfg.n_qubits = parse_integer<std::size_t>(value);
    } else if (key == "n_train") {
        cfg.n_train = parse_integer<std::size_t>(value);
    } else if (key == "n_test") {
        cfg.n_test = parse_integer<std::size_t>(value);
    } else if (key == "learning_rate") {
        cfg.learning_rate = parse_real(value);
    } else if (key == "epochs") {
        cfg.epochs = parse_integer<std::size_t>(value);
    } else if (key == "p_damp") {
        cfg.p_damp = parse_real(value);
    } else if (key == "decision_boundary") {
        cfg.decision_boundary = parse_real(value);
    } else if (key == "seed") {
        cfg.seed = parse_integer<std::uint64_t>(value);
    } else if (key == "output_dir") {
        cfg.output_dir = value;
    } else {
        throw std::invalid_argument("unknown key '" + std::string(key) + "'");
    }
}

} // namespace

std::string_view to_string(Task t) {
    switch (t) {
    case Task::COS:
        return "COS";
    case Task::DAMPED_SINE:
        return "DAMPED_SINE";
    case Task::CLASSIFY:
        return "CLASSIFY";
    }
    return "?";
}

std::string_view to_string(Model m) {
    return m == Model::RQNN ? "RQNN" : "QNN";
}

Task task_from_string(std::string_view s) {
    const auto u = upper(s);
    if (u == "COS") {
        return Task::COS;
    }
    if (u == "DAMPED_SINE") {
        return Task::DAMPED_SINE;
    }
    if (u == "CLASSIFY") {
        return Task::CLASSIFY;
    }
    throw std::invalid_argument("unknown task '" + std::string(s) + "'");
}

Model model_from_string(std::string_view s) {
    const auto u = upper(s);
    if (u == "RQNN") {
        return Model::RQNN;
    }
    if (u == "QNN") {
        return Model::QNN;
    }
    throw std::invalid_argument("unknown model '" + std::string(s) + "'");
}

void ExperimentConfig::validate() const {
    auto fail = [](const std::string &msg) {
        throw std::invalid_argument("ExperimentConfig: " + msg);
    };
    if (name.empty()) {
        fail("name is empty");
    }
    if (depth == 0) {
        fail("depth must be >= 1");
    }
    if (n_qubits < 2 || n_qubits > 8) {
        fail("n_qubits must lie in [2, 8]");
    }
    if (n_train == 0 || n_test == 0) {
        fail("n_train and n_test must be >= 1");
    }
    if (!(learning_rate >= 0.0)) {
        fail("learning_rate must be >= 0");
    }
    if (epochs == 0) {
        fail("epochs must be >= 1");
    }
    if (!(p_damp >= 0.0 && p_damp <= 1.0)) {
        fail("p_damp must lie in [0, 1]");
    }
    if (!(decision_boundary >= 0.0 && decision_boundary < 1.0)) {
        fail("decision_boundary must lie in [0, 1)");
    }
    if (output_dir.empty()) {
        fail("output_dir is empty");
    }
}

ExperimentConfig parse_config(std::string_view text,
                              const ExperimentConfig &base) {
    ExperimentConfig cfg = base;
    std::set<std::string, std::less<>> seen;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{}
                                            : text.substr(nl + 1);
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        const auto where = "config line " + std::to_string(line_no) + ": ";
        if (eq == std::string_view::npos) {
            throw std::invalid_argument(where + "expected key=value");
        }
        const auto key = trim(line.substr(0, eq));
        const auto value = trim(line.substr(eq + 1));
        if (!seen.insert(std::string(key)).second) {
            throw std::invalid_argument(where + "duplicate key '" +
                                        std::string(key) + "'");
        }
        try {
            set_field(cfg, key, value);
        } catch (const std::invalid_argument &e) {
            throw std::invalid_argument(where + e.what());
        }
    }
    cfg.validate();
    return cfg;
}

ExperimentConfig load_config(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open config file " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_config(buf.str());
    } catch (const std::invalid_argument &e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

std::string format_config(const ExperimentConfig &cfg) {
    std::string out;
    auto line = [&](std::string_view k, const std::string &v) {
        out.append(k).append("=").append(v).append("\n");
    };
    line("name", cfg.name);
    line("task", std::string(to_string(cfg.task)));
    line("model", std::string(to_string(cfg.model)));
    line("depth", std::to_string(cfg.depth));
    line("n_qubits", std::to_string(cfg.n_qubits));
    line("n_train", std::to_string(cfg.n_train));
    line("n_test", std::to_string(cfg.n_test));
    line("learning_rate", format_double(cfg.learning_rate));
    line("epochs", std::to_string(cfg.epochs));
    line("p_damp", format_double(cfg.p_damp));
    line("decision_boundary", format_double(cfg.decision_boundary));
    line("seed", std::to_string(cfg.seed));
    line("output_dir", cfg.output_dir);
    return out;
}

} // namespace ahl
