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
// ahl-sim: run presets or config files, list presets, run self-checks.

#include "ahl/checks.hpp"
#include "ahl/config.hpp"
#include "ahl/experiments.hpp"
#include "ahl/format.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

namespace {

struct RunOptions {
    std::string target;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> out;
    std::optional<double> noise;
    std::optional<std::size_t> depth;
    std::optional<std::string> model;
};

std::vector<ahl::ExperimentConfig> configs_for(const RunOptions &o) {
    std::vector<ahl::ExperimentConfig> runs;
    if (std::filesystem::is_regular_file(o.target)) {
        runs.push_back(ahl::load_config(o.target));
    } else {
        runs = ahl::resolve_preset(o.target);
    }
    if (o.model) {
        const auto m = ahl::model_from_string(*o.model);
        std::vector<ahl::ExperimentConfig> kept;
        for (const auto &r : runs) {
            if (r.model == m) {
                kept.push_back(r);
            }
        }
        if (kept.empty()) {
            for (auto r : runs) {
                r.model = m;
                kept.push_back(r);
            }
        }
        runs = kept;
    }
    for (auto &r : runs) {
        if (o.seed) {
            r.seed = *o.seed;
        }
        if (o.noise) {
            r.p_damp = *o.noise;
        }
        if (o.depth) {
            r.depth = *o.depth;
        }
        if (o.out) {
            r.output_dir = (std::filesystem::path(*o.out) / r.name).string();
        }
        r.validate();
    }
    return runs;
}

int do_run(const RunOptions &o) {
    const auto runs = configs_for(o);
    std::vector<ahl::ExperimentResult> results;
    for (const auto &cfg : runs) {
        std::cout << cfg.name << " (" << ahl::to_string(cfg.model) << ", "
                  << ahl::to_string(cfg.task) << ", L=" << cfg.depth
                  << ", p_damp=" << ahl::format_double(cfg.p_damp)
                  << ", seed=" << cfg.seed << ") ..." << std::flush;
        results.push_back(ahl::run_experiment(cfg));
        const auto &rec = results.back().record;
        std::cout << " " << ahl::to_string(rec.metric)
                  << " train=" << ahl::format_double(rec.train_metric)
                  << " test=" << ahl::format_double(rec.test_metric)
                  << " -> " << cfg.output_dir << "\n";
    }
    const bool classification =
        !results.empty() &&
        std::all_of(results.begin(), results.end(), [](const auto &r) {
            return r.config.task == ahl::Task::CLASSIFY;
        });
    if (classification) {
        const auto table = ahl::compare_table(results);
        const auto root =
            std::filesystem::path(results.front().config.output_dir)
                .parent_path();
        const auto path = root / "compare.csv";
        std::ofstream out(path, std::ios::binary);
        if (!out) {
            throw std::runtime_error("cannot write " + path.string());
        }
        out << table;
        std::cout << table;
    }
    return 0;
}

int do_presets() {
    for (const auto &p : ahl::presets()) {
        std::cout << p.name << "  " << p.description << "\n";
        for (const auto &r : p.runs) {
            std::cout << "    " << r.name << "\n";
        }
    }
    return 0;
}

int do_check() {
    int failed = 0;
    for (const auto &c : ahl::run_invariant_checks()) {
        std::cout << (c.passed ? "[PASS] " : "[FAIL] ") << c.name << " ("
                  << c.detail << ")\n";
        failed += c.passed ? 0 : 1;
    }
    return failed == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"AHL density-matrix simulator and experiment runner"};
    app.require_subcommand(1);

    RunOptions opts;
    auto *run = app.add_subcommand("run", "Run a preset or a config file");
    run->add_option("target", opts.target, "Preset name or config file path")
        ->required();
    run->add_option("--seed", opts.seed, "Override the seed");
    run->add_option("--out", opts.out, "Output root directory");
    run->add_option("--noise", opts.noise, "Override p_damp")
        ->check(CLI::Range(0.0, 1.0));
    run->add_option("--depth", opts.depth, "Override the layer count")
        ->check(CLI::PositiveNumber);
    run->add_option("--model", opts.model, "rqnn or qnn")
        ->check(CLI::IsMember({"rqnn", "qnn", "RQNN", "QNN"}));

    auto *list = app.add_subcommand("presets", "List the presets");
    auto *check = app.add_subcommand("check", "Run the invariant self-checks");

    CLI11_PARSE(app, argc, argv);
    try {
        if (*run) {
            return do_run(opts);
        }
        if (*list) {
            return do_presets();
        }
        if (*check) {
            return do_check();
        }
    } catch (const std::exception &e) {
        std::cerr << "ahl-sim: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
