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
#include "ahl/experiments.hpp"

#include "ahl/format.hpp"
#include "ahl/plot.hpp"
#include "ahl/rng.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace ahl {

namespace {

using std::numbers::pi;

constexpr std::size_t kMaxDraws = 10'000'000;

void require_sizes(std::size_t n_train, std::size_t n_test, const char *who) {
    if (n_train == 0 || n_test == 0) {
        throw std::invalid_argument(std::string(who) +
                                    ": split sizes must be >= 1");
    }
}

template <class F>
Dataset gen_regression(std::size_t n_train, std::size_t n_test,
                       std::uint64_t seed, F f) {
    Rng rng(data_seed(seed));
    Dataset d;
    d.n_train = n_train;
    d.n_test = n_test;
    const std::size_t total = n_train + n_test;
    d.inputs.reserve(total);
    d.labels.reserve(total);
    for (std::size_t k = 0; k < total; ++k) {
        const double x = rng.uniform(0.0, 2.0 * pi);
        d.inputs.push_back({x});
        d.labels.push_back(f(x));
    }
    return d;
}

void write_file(const std::filesystem::path &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open " + path.string() +
                                 " for writing");
    }
    out << text;
    if (!out) {
        throw std::runtime_error("write failed for " + path.string());
    }
}

ExperimentConfig run(std::string name, Task task, Model model,
                     std::size_t depth, double p_damp) {
    ExperimentConfig c;
    c.name = name;
    c.task = task;
    c.model = model;
    c.depth = depth;
    c.p_damp = p_damp;
    c.output_dir = "out/" + name;
    if (task == Task::CLASSIFY) {
        c.n_qubits = 4;
        c.n_train = 300;
        c.n_test = 150;
        c.learning_rate = 0.1;
        c.epochs = 100;
        c.decision_boundary = 0.3;
    }
    return c;
}

} // namespace

double damped_sine(double x) {
    return std::exp(-kDampedSineDecay * x) * std::sin(kDampedSineFrequency * x);
}

Dataset gen_cosine(std::size_t n_train, std::size_t n_test,
                   std::uint64_t seed) {
    require_sizes(n_train, n_test, "gen_cosine");
    return gen_regression(n_train, n_test, seed,
                          [](double x) { return std::cos(x); });
}

Dataset gen_damped_sine(std::size_t n_train, std::size_t n_test,
                        std::uint64_t seed) {
    require_sizes(n_train, n_test, "gen_damped_sine");
    return gen_regression(n_train, n_test, seed, damped_sine);
}

bool outside_band(std::span<const double> p, double g) {
    const double r = std::hypot(p[0] - 0.5, p[1] - 0.5);
    return !(std::abs(r - kDiskRadius) < g * kDiskRadius);
}

int disk_label(std::span<const double> p) {
    return std::hypot(p[0] - 0.5, p[1] - 0.5) < kDiskRadius ? 1 : -1;
}

Dataset gen_nonlinear_classes(std::size_t total, std::size_t n_train,
                              std::size_t n_test, double g,
                              std::uint64_t seed) {
    require_sizes(n_train, n_test, "gen_nonlinear_classes");
    if (total != n_train + n_test) {
        throw std::invalid_argument(
            "gen_nonlinear_classes: total must equal n_train + n_test");
    }
    if (!(g >= 0.0 && g < 1.0)) {
        throw std::invalid_argument(
            "gen_nonlinear_classes: boundary width must lie in [0, 1)");
    }
    Rng rng(data_seed(seed));
    Dataset d;
    d.n_train = n_train;
    d.n_test = n_test;
    d.inputs.reserve(total);
    d.labels.reserve(total);
    for (std::size_t k = 0; k < total; ++k) {
        const int want = k % 2 == 0 ? 1 : -1;
        std::size_t draws = 0;
        for (;;) {
            if (++draws > kMaxDraws) {
                throw std::runtime_error(
                    "gen_nonlinear_classes: sampler made no progress");
            }
            std::vector<double> p{rng.uniform(), rng.uniform()};
            if (!outside_band(p, g) || disk_label(p) != want) {
                continue;
            }
            d.inputs.push_back(std::move(p));
            d.labels.push_back(want);
            break;
        }
    }
    return d;
}

Dataset make_dataset(const ExperimentConfig &cfg) {
    switch (cfg.task) {
    case Task::COS:
        return gen_cosine(cfg.n_train, cfg.n_test, cfg.seed);
    case Task::DAMPED_SINE:
        return gen_damped_sine(cfg.n_train, cfg.n_test, cfg.seed);
    case Task::CLASSIFY:
        return gen_nonlinear_classes(cfg.n_train + cfg.n_test, cfg.n_train,
                                     cfg.n_test, cfg.decision_boundary,
                                     cfg.seed);
    }
    throw std::logic_error("make_dataset: unknown task");
}

std::vector<double> encode_features(Task task, std::span<const double> raw,
                                    std::size_t n_qubits) {
    if (raw.empty()) {
        throw std::invalid_argument("encode_features: empty sample");
    }
    const double scale = task == Task::CLASSIFY ? 2.0 * pi : 1.0;
    std::vector<double> angles(std::max(n_qubits, raw.size()));
    for (std::size_t q = 0; q < angles.size(); ++q) {
        angles[q] = scale * raw[q % raw.size()];
    }
    return angles;
}

LatticeSpec model_lattice(std::size_t n_qubits) {
    return LatticeSpec::chain(n_qubits, 1.0 / (2.0 * pi), 1.0 / pi, 0.5);
}

CircuitIR build_model(const ExperimentConfig &cfg) {
    cfg.validate();
    const std::optional<double> noise =
        cfg.p_damp > 0.0 ? std::optional<double>(cfg.p_damp) : std::nullopt;
    const bool cls = cfg.task == Task::CLASSIFY;
    std::vector<std::size_t> readout;
    if (cls) {
        readout.resize(cfg.n_qubits);
        std::iota(readout.begin(), readout.end(), std::size_t{0});
    } else {
        readout.push_back(cfg.n_qubits - 1);
    }
    if (cfg.model == Model::RQNN) {
        return build_ahl_circuit(model_lattice(cfg.n_qubits), cfg.depth, noise)
            .with_readout(std::move(readout));
    }
    if (cls) {
        return build_qnn_cls_circuit(cfg.depth, cfg.n_qubits, noise);
    }
    if (cfg.n_qubits != 2) {
        throw std::invalid_argument(
            "build_model: the regression QNN is a 2-qubit circuit");
    }
    return build_qnn_sim_circuit(cfg.depth, noise);
}

TrainConfig train_config(const ExperimentConfig &cfg) {
    TrainConfig t;
    t.learning_rate = cfg.learning_rate;
    t.epochs = cfg.epochs;
    t.seed = cfg.seed;
    t.decision_boundary = cfg.decision_boundary;
    t.p_damp = cfg.p_damp;
    t.metric = cfg.task == Task::CLASSIFY ? Metric::ACCURACY : Metric::MAE;
    return t;
}

ExperimentResult run_experiment(const ExperimentConfig &cfg,
                                bool write_artifacts) {
    cfg.validate();
    Dataset data = make_dataset(cfg);
    Dataset encoded = data;
    for (auto &x : encoded.inputs) {
        x = encode_features(cfg.task, x, cfg.n_qubits);
    }
    const CircuitIR circuit = build_model(cfg);
    RunRecord record = train(circuit, encoded, train_config(cfg));
    auto train_pred = BatchPredictor(circuit, encoded.train_inputs())
                          .predict(record.final_params);
    auto test_pred = BatchPredictor(circuit, encoded.test_inputs())
                         .predict(record.final_params);
    ExperimentResult result{.config = cfg,
                            .data = std::move(data),
                            .record = std::move(record),
                            .train_predictions = std::move(train_pred),
                            .test_predictions = std::move(test_pred)};

    if (!write_artifacts) {
        return result;
    }
    const std::filesystem::path dir(cfg.output_dir);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
        throw std::runtime_error("cannot create " + dir.string() + ": " +
                                 ec.message());
    }
    write_file(dir / "config.txt", format_config(cfg));
    write_file(dir / "loss.csv", loss_csv(result.record));
    write_file(dir / "summary.csv", summary_csv(result.record));

    const auto &curve = result.record.loss_curve;
    std::vector<double> epochs(curve.size());
    std::iota(epochs.begin(), epochs.end(), 0.0);
    emit_plot({.title = cfg.name + " training loss",
               .x_label = "epoch",
               .y_label = "loss",
               .series = {{std::string(to_string(cfg.model)), epochs, curve}},
               .path = (dir / "loss.svg").string()});

    if (cfg.task == Task::CLASSIFY) {
        write_file(dir / "accuracy.csv", accuracy_csv(result));
        return result;
    }
    write_file(dir / "predictions.csv", predictions_csv(result));
    const auto test_x = result.data.test_inputs();
    const auto test_y = result.data.test_labels();
    std::vector<std::size_t> order(test_x.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) {
                         return test_x[a][0] < test_x[b][0];
                     });
    Series truth{"target", {}, {}};
    Series fit{std::string(to_string(cfg.model)), {}, {}};
    for (auto i : order) {
        truth.x.push_back(test_x[i][0]);
        truth.y.push_back(test_y[i]);
        fit.x.push_back(test_x[i][0]);
        fit.y.push_back(result.test_predictions[i]);
    }
    emit_plot({.title = cfg.name + " test fit",
               .x_label = "x",
               .y_label = "y",
               .series = {truth, fit},
               .path = (dir / "fit.svg").string()});
    return result;
}

std::string predictions_csv(const ExperimentResult &result) {
    std::string out = "x,y_true,y_pred\n";
    const auto x = result.data.test_inputs();
    const auto y = result.data.test_labels();
    for (std::size_t i = 0; i < x.size(); ++i) {
        out += format_double(x[i][0]) + "," + format_double(y[i]) + "," +
               format_double(result.test_predictions[i]) + "\n";
    }
    return out;
}

std::string accuracy_csv(const ExperimentResult &result) {
    const std::string m(to_string(result.config.model));
    return "model,split,accuracy\n" + m + ",train," +
           format_double(result.record.train_metric) + "\n" + m + ",test," +
           format_double(result.record.test_metric) + "\n";
}

std::string compare_table(std::span<const AccuracyRow> rows) {
    if (rows.empty()) {
        throw std::invalid_argument("compare_table: no records");
    }
    std::string out = "model,train_accuracy,test_accuracy\n";
    const AccuracyRow *rqnn = nullptr;
    const AccuracyRow *qnn = nullptr;
    for (const auto &r : rows) {
        out += r.model + "," + format_double(r.train_accuracy) + "," +
               format_double(r.test_accuracy) + "\n";
        if (r.model == "RQNN") {
            rqnn = &r;
        } else if (r.model == "QNN") {
            qnn = &r;
        }
    }
    if (rows.size() > 1 && rqnn != nullptr && qnn != nullptr) {
        out += "Gap," + format_double(rqnn->train_accuracy - qnn->train_accuracy) +
               "," + format_double(rqnn->test_accuracy - qnn->test_accuracy) +
               "\n";
    }
    return out;
}

std::string compare_table(std::span<const ExperimentResult> results) {
    std::vector<AccuracyRow> rows;
    for (const auto &r : results) {
        rows.push_back({std::string(to_string(r.config.model)),
                        r.record.train_metric, r.record.test_metric});
    }
    return compare_table(rows);
}

const std::vector<Preset> &presets() {
    static const std::vector<Preset> all = [] {
        std::vector<Preset> p;
        p.push_back({"exp01",
                     "RQNN on the cosine at depths 2, 6 and 10 under damping, "
                     "plus a noise-free depth-10 run",
                     {run("exp01-d2", Task::COS, Model::RQNN, 2, 0.05),
                      run("exp01-d6", Task::COS, Model::RQNN, 6, 0.05),
                      run("exp01-d10", Task::COS, Model::RQNN, 10, 0.05),
                      run("exp01-noisefree", Task::COS, Model::RQNN, 10, 0.0)}});
        p.push_back({"exp02", "RQNN vs QNN on the cosine, depth 10, damping 0.05",
                     {run("exp02-rqnn", Task::COS, Model::RQNN, 10, 0.05),
                      run("exp02-qnn", Task::COS, Model::QNN, 10, 0.05)}});
        p.push_back(
            {"exp03", "RQNN vs QNN on the damped sine, depth 10, damping 0.05",
             {run("exp03-rqnn", Task::DAMPED_SINE, Model::RQNN, 10, 0.05),
              run("exp03-qnn", Task::DAMPED_SINE, Model::QNN, 10, 0.05)}});
        p.push_back({"cls",
                     "RQNN vs QNN classification on 4 qubits, depth 4, "
                     "damping 0.05",
                     {run("cls-rqnn", Task::CLASSIFY, Model::RQNN, 4, 0.05),
                      run("cls-qnn", Task::CLASSIFY, Model::QNN, 4, 0.05)}});
        return p;
    }();
    return all;
}

std::vector<ExperimentConfig> resolve_preset(std::string_view name) {
    for (const auto &p : presets()) {
        if (p.name == name) {
            return p.runs;
        }
        for (const auto &r : p.runs) {
            if (r.name == name) {
                return {r};
            }
        }
    }
    throw std::invalid_argument("unknown preset '" + std::string(name) + "'");
}

} // namespace ahl
