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

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

namespace ahl {
namespace {

using std::numbers::pi;

std::string slurp(const std::filesystem::path &p) {
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> split_line(const std::string &line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) {
        out.push_back(cell);
    }
    return out;
}

std::vector<std::vector<std::string>> rows_of(const std::string &csv) {
    std::vector<std::vector<std::string>> rows;
    std::stringstream ss(csv);
    for (std::string line; std::getline(ss, line);) {
        rows.push_back(split_line(line));
    }
    return rows;
}

TEST(GenCosine, SizesRangeAndDeterminism) {
    const auto d = gen_cosine(600, 200, 42);
    EXPECT_EQ(d.n_train, 600u);
    EXPECT_EQ(d.n_test, 200u);
    EXPECT_EQ(d.inputs.size(), 800u);
    for (std::size_t k = 0; k < d.inputs.size(); ++k) {
        ASSERT_EQ(d.inputs[k].size(), 1u);
        const double x = d.inputs[k][0];
        EXPECT_GE(x, 0.0);
        EXPECT_LT(x, 2.0 * pi);
        EXPECT_EQ(d.labels[k], std::cos(x));
        EXPECT_LE(std::abs(d.labels[k]), 1.0);
    }
    const auto again = gen_cosine(600, 200, 42);
    EXPECT_EQ(again.inputs, d.inputs);
    EXPECT_NE(gen_cosine(600, 200, 43).inputs, d.inputs);
    EXPECT_EQ(std::cos(0.0), 1.0);
}

TEST(GenDampedSine, FormulaAndEnvelope) {
    EXPECT_EQ(damped_sine(0.0), 0.0);
    // Reference evaluation of exp(-0.3 x) sin(2 x).
    const double xs[] = {0.1, 0.5, 0.785, 1.0, 1.7, 2.2, 3.0, 4.1, 5.0, 6.2};
    for (double x : xs) {
        EXPECT_NEAR(damped_sine(x), std::exp(-0.3 * x) * std::sin(2.0 * x),
                    1e-15);
    }
    const auto d = gen_damped_sine(300, 100, 7);
    for (std::size_t k = 0; k < d.inputs.size(); ++k) {
        const double x = d.inputs[k][0];
        EXPECT_EQ(d.labels[k], damped_sine(x));
        EXPECT_LE(std::abs(d.labels[k]), std::exp(-0.3 * x));
        EXPECT_LE(std::abs(d.labels[k]), 1.0);
    }
}

TEST(GenNonlinearClasses, PresetSizesBandAndBalance) {
    const auto d = gen_nonlinear_classes(450, 300, 150, 0.3, 42);
    EXPECT_EQ(d.n_train, 300u);
    EXPECT_EQ(d.n_test, 150u);
    int plus_train = 0;
    int plus_test = 0;
    for (std::size_t k = 0; k < d.inputs.size(); ++k) {
        const auto &p = d.inputs[k];
        ASSERT_EQ(p.size(), 2u);
        EXPECT_GE(p[0], 0.0);
        EXPECT_LT(p[0], 1.0);
        EXPECT_TRUE(outside_band(p, 0.3));
        const double r = std::hypot(p[0] - 0.5, p[1] - 0.5);
        EXPECT_GE(std::abs(r - kDiskRadius), 0.3 * kDiskRadius);
        EXPECT_EQ(d.labels[k], r < kDiskRadius ? 1.0 : -1.0);
        (k < 300 ? plus_train : plus_test) += d.labels[k] > 0 ? 1 : 0;
    }
    EXPECT_NEAR(plus_train / 300.0, 0.5, 0.05);
    EXPECT_NEAR(plus_test / 150.0, 0.5, 0.05);
}

TEST(GenNonlinearClasses, ZeroBandAndErrors) {
    const double on_edge[] = {0.5 + kDiskRadius, 0.5};
    EXPECT_TRUE(outside_band(on_edge, 0.0));
    EXPECT_FALSE(outside_band(on_edge, 0.1));
    const auto d = gen_nonlinear_classes(40, 30, 10, 0.0, 3);
    EXPECT_EQ(d.inputs.size(), 40u);
    EXPECT_THROW((void)gen_nonlinear_classes(40, 30, 9, 0.0, 3),
                 std::invalid_argument);
    EXPECT_THROW((void)gen_nonlinear_classes(40, 30, 10, 1.0, 3),
                 std::invalid_argument);
}

TEST(DataSeed, SeparatesStreams) {
    EXPECT_NE(data_seed(42), 42u);
    EXPECT_EQ(data_seed(data_seed(42)), 42u);
}

TEST(EncodeFeatures, RegressionAndClassification) {
    const double x[] = {1.25};
    EXPECT_EQ(encode_features(Task::COS, x, 2), (std::vector<double>{1.25, 1.25}));
    const double f[] = {0.25, 0.5};
    const auto e = encode_features(Task::CLASSIFY, f, 4);
    ASSERT_EQ(e.size(), 4u);
    EXPECT_NEAR(e[0], 0.5 * pi, 1e-15);
    EXPECT_NEAR(e[1], pi, 1e-15);
    EXPECT_EQ(e[2], e[0]);
    EXPECT_EQ(e[3], e[1]);
}

TEST(ModelLattice, UnitAngleGates) {
    const auto spec = model_lattice(2);
    const auto c = build_ahl_circuit(spec, 1);
    for (const auto &ins : c.instructions()) {
        if (const auto *pg = std::get_if<ParamGate>(&ins)) {
            EXPECT_NEAR(pg->scale, 1.0, 1e-15);
        }
    }
    EXPECT_EQ(spec.n_qubits(), 2u);
}

TEST(BuildModel, ShapesPerTaskAndModel) {
    ExperimentConfig cfg;
    cfg.depth = 3;
    const auto rqnn = build_model(cfg);
    EXPECT_EQ(rqnn.layout().size(), 9u);
    EXPECT_EQ(rqnn.readout_qubits(), std::vector<std::size_t>{1});
    EXPECT_EQ(rqnn.channel_count(), 6u);

    cfg.model = Model::QNN;
    const auto qnn = build_model(cfg);
    EXPECT_EQ(qnn.layout().size(), 6u);
    EXPECT_EQ(qnn.readout_qubits(), std::vector<std::size_t>{1});

    cfg.p_damp = 0.0;
    EXPECT_EQ(build_model(cfg).channel_count(), 0u);

    const auto cls = resolve_preset("cls-rqnn").front();
    const auto cm = build_model(cls);
    EXPECT_EQ(cm.n_qubits(), 4u);
    EXPECT_EQ(cm.readout_qubits().size(), 4u);
    EXPECT_EQ(train_config(cls).metric, Metric::ACCURACY);
    EXPECT_EQ(train_config(cls).learning_rate, 0.1);
}

TEST(Presets, RunSettings) {
    ASSERT_EQ(presets().size(), 4u);
    const auto d10 = resolve_preset("exp01-d10");
    ASSERT_EQ(d10.size(), 1u);
    EXPECT_EQ(d10[0].task, Task::COS);
    EXPECT_EQ(d10[0].model, Model::RQNN);
    EXPECT_EQ(d10[0].depth, 10u);
    EXPECT_EQ(d10[0].learning_rate, 0.2);
    EXPECT_EQ(d10[0].epochs, 300u);
    EXPECT_EQ(d10[0].p_damp, 0.05);
    EXPECT_EQ(d10[0].n_train, 600u);
    EXPECT_EQ(d10[0].n_test, 200u);

    const auto exp01 = resolve_preset("exp01");
    ASSERT_EQ(exp01.size(), 4u);
    EXPECT_EQ(exp01[0].depth, 2u);
    EXPECT_EQ(exp01[1].depth, 6u);
    EXPECT_EQ(exp01[3].p_damp, 0.0);

    for (const char *name : {"exp02", "exp03"}) {
        const auto runs = resolve_preset(name);
        ASSERT_EQ(runs.size(), 2u);
        EXPECT_EQ(runs[0].model, Model::RQNN);
        EXPECT_EQ(runs[1].model, Model::QNN);
        EXPECT_EQ(runs[0].depth, 10u);
        EXPECT_EQ(runs[1].depth, 10u);
    }
    EXPECT_EQ(resolve_preset("exp03")[0].task, Task::DAMPED_SINE);

    const auto cls = resolve_preset("cls");
    ASSERT_EQ(cls.size(), 2u);
    for (const auto &c : cls) {
        EXPECT_EQ(c.task, Task::CLASSIFY);
        EXPECT_EQ(c.n_qubits, 4u);
        EXPECT_EQ(c.n_train + c.n_test, 450u);
        EXPECT_EQ(c.n_train, 300u);
        EXPECT_EQ(c.decision_boundary, 0.3);
        EXPECT_EQ(c.learning_rate, 0.1);
        EXPECT_EQ(c.epochs, 100u);
        EXPECT_EQ(c.p_damp, 0.05);
    }
    EXPECT_THROW((void)resolve_preset("exp04"), std::invalid_argument);
}

TEST(CompareTable, ReferenceRows) {
    const AccuracyRow rows[] = {{"QNN", 0.9000, 0.8333}, {"RQNN", 0.9800, 0.9867}};
    const auto t = rows_of(compare_table(rows));
    ASSERT_EQ(t.size(), 4u);
    EXPECT_EQ(t[0], (std::vector<std::string>{"model", "train_accuracy",
                                              "test_accuracy"}));
    EXPECT_EQ(t[3][0], "Gap");
    EXPECT_NEAR(std::stod(t[3][1]), 0.0800, 1e-12);
    EXPECT_NEAR(std::stod(t[3][2]), 0.1534, 1e-12);
}

TEST(CompareTable, SyntheticGapAndSingleRow) {
    const AccuracyRow rows[] = {{"RQNN", 0.95, 0.9}, {"QNN", 0.9, 0.8}};
    const auto t = rows_of(compare_table(rows));
    ASSERT_EQ(t.size(), 4u);
    EXPECT_NEAR(std::stod(t[3][1]), 0.05, 1e-12);
    EXPECT_NEAR(std::stod(t[3][2]), 0.10, 1e-12);

    const auto single = rows_of(compare_table(std::span(rows, 1)));
    EXPECT_EQ(single.size(), 2u);
    EXPECT_THROW((void)compare_table(std::span<const AccuracyRow>()),
                 std::invalid_argument);
}

TEST(RunExperiment, RegressionArtifactsAndEcho) {
    const auto dir = std::filesystem::temp_directory_path() / "ahl_run_reg";
    std::filesystem::remove_all(dir);
    ExperimentConfig cfg;
    cfg.name = "tiny";
    cfg.depth = 2;
    cfg.n_train = 20;
    cfg.n_test = 10;
    cfg.epochs = 5;
    cfg.output_dir = (dir / "tiny").string();
    const ExperimentConfig before = cfg;
    const auto res = run_experiment(cfg);
    EXPECT_EQ(cfg, before);
    EXPECT_EQ(res.config, cfg);
    EXPECT_EQ(res.record.config_echo, train_config(cfg));
    EXPECT_EQ(res.record.loss_curve.size(), 5u);
    EXPECT_EQ(res.test_predictions.size(), 10u);

    for (const char *f : {"config.txt", "loss.csv", "summary.csv", "loss.svg",
                          "predictions.csv", "fit.svg"}) {
        EXPECT_TRUE(std::filesystem::exists(dir / "tiny" / f)) << f;
    }
    EXPECT_EQ(parse_config(slurp(dir / "tiny" / "config.txt")), cfg);
    EXPECT_EQ(slurp(dir / "tiny" / "loss.csv"), loss_csv(res.record));
    const auto pred = rows_of(slurp(dir / "tiny" / "predictions.csv"));
    ASSERT_EQ(pred.size(), 11u);
    EXPECT_EQ(pred[0], (std::vector<std::string>{"x", "y_true", "y_pred"}));

    const auto again = run_experiment(cfg, false);
    EXPECT_EQ(loss_csv(again.record), loss_csv(res.record));
    EXPECT_EQ(predictions_csv(again), slurp(dir / "tiny" / "predictions.csv"));
    std::filesystem::remove_all(dir);
}

TEST(RunExperiment, ClassificationArtifacts) {
    const auto dir = std::filesystem::temp_directory_path() / "ahl_run_cls";
    std::filesystem::remove_all(dir);
    auto cfg = resolve_preset("cls-qnn").front();
    cfg.n_train = 30;
    cfg.n_test = 20;
    cfg.epochs = 3;
    cfg.output_dir = dir.string();
    const auto res = run_experiment(cfg);
    EXPECT_TRUE(std::filesystem::exists(dir / "accuracy.csv"));
    EXPECT_FALSE(std::filesystem::exists(dir / "predictions.csv"));
    const auto acc = rows_of(accuracy_csv(res));
    ASSERT_EQ(acc.size(), 3u);
    EXPECT_EQ(acc[1][0], "QNN");
    EXPECT_EQ(acc[1][1], "train");
    EXPECT_EQ(acc[2][1], "test");
    EXPECT_EQ(std::stod(acc[2][2]), res.record.test_metric);
    std::filesystem::remove_all(dir);
}

TEST(RunExperiment, UnwritableDirectoryReportsPath) {
    ExperimentConfig cfg;
    cfg.depth = 1;
    cfg.n_train = 4;
    cfg.n_test = 2;
    cfg.epochs = 1;
    cfg.output_dir = "/proc/ahl-no-such-dir";
    try {
        (void)run_experiment(cfg);
        ADD_FAILURE() << "expected an error";
    } catch (const std::exception &e) {
        EXPECT_NE(std::string(e.what()).find(cfg.output_dir), std::string::npos)
            << e.what();
    }
}

// Full-size training properties of the cosine task.

TEST(TrainingProperties, NoisyDepthTenReducesTestMaeFivefold) {
    const auto cfg = resolve_preset("exp01-d10").front();
    const auto res = run_experiment(cfg, false);
    EXPECT_LE(res.record.test_metric * 5.0, res.record.initial_test_metric)
        << "initial " << res.record.initial_test_metric << " final "
        << res.record.test_metric;
}

TEST(TrainingProperties, NoiselessDepthTenBeatsDepthTwoOnTrainLoss) {
    auto cfg = resolve_preset("exp01-noisefree").front();
    const auto deep = run_experiment(cfg, false);
    cfg.depth = 2;
    const auto shallow = run_experiment(cfg, false);
    EXPECT_LT(deep.record.train_metric, shallow.record.train_metric)
        << "L=10 " << deep.record.train_metric << " L=2 "
        << shallow.record.train_metric;
}

} // namespace
} // namespace ahl
