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
// Acceptance suite. `ahl_acceptance` runs every criterion,
// `ahl_acceptance --criterion N` runs one. Each criterion prints one line
// and the exit status is nonzero if any selected criterion fails.
#include "ahl/circuit.hpp"
#include "ahl/experiments.hpp"
#include "ahl/hamiltonian.hpp"
#include "ahl/noise.hpp"
#include "ahl/rng.hpp"
#include "ahl/training.hpp"

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace {

using namespace ahl;
using std::numbers::pi;
using EMat = Eigen::MatrixXcd;

struct Outcome {
    bool passed = false;
    std::string detail;
};

std::string fmt(const char *f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

EMat to_eigen(const CMatrix &m) {
    EMat e(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            e(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = m(r, c);
        }
    }
    return e;
}

double max_abs(const EMat &a, const EMat &b) { return (a - b).cwiseAbs().maxCoeff(); }

class Stopwatch {
  public:
    [[nodiscard]] double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_)
            .count();
    }

  private:
    std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

DensityMatrix random_density(std::size_t n, Rng &rng) {
    const std::size_t d = std::size_t{1} << n;
    CMatrix g(d, d);
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) {
            g(r, c) = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
        }
    }
    CMatrix rho = g * g.adjoint();
    rho *= Complex{1.0 / rho.trace().real(), 0.0};
    return DensityMatrix(n, rho);
}

// Trained runs are shared between criteria when the whole suite runs.
std::map<std::pair<std::string, std::uint64_t>, ExperimentResult> g_runs;

const ExperimentResult &trained(const std::string &name, std::uint64_t seed) {
    const auto key = std::make_pair(name, seed);
    auto it = g_runs.find(key);
    if (it == g_runs.end()) {
        auto cfg = resolve_preset(name).front();
        cfg.seed = seed;
        it = g_runs.emplace(key, run_experiment(cfg, false)).first;
    }
    return it->second;
}

Outcome criterion_1() {
    Stopwatch sw;
    Rng rng(1001);
    double worst_trace = 0.0;
    double worst_herm = 0.0;
    double worst_complete = 0.0;
    for (int k = 0; k < 1000; ++k) {
        const std::size_t n = 1 + static_cast<std::size_t>(k % 2);
        const auto rho = random_density(n, rng);
        const std::size_t q = static_cast<std::size_t>(k) % n;
        for (int i = 0; i <= 10; ++i) {
            const auto ch = amplitude_damping(0.1 * i, q);
            worst_complete = std::max(worst_complete, ch.completeness_residual());
            const auto out = apply_channel(rho, ch);
            worst_trace = std::max(worst_trace,
                                   std::abs(out.matrix().trace() - Complex{1.0, 0.0}));
            worst_herm = std::max(worst_herm, hermiticity_residual(out.matrix()));
        }
    }
    const double t = sw.seconds();
    const bool ok = worst_trace <= 1e-10 && worst_herm <= 1e-10 &&
                    worst_complete <= 1e-10 && t < 5.0;
    return {ok, "trace err " + fmt("%.2e", worst_trace) + ", hermiticity " +
                    fmt("%.2e", worst_herm) + ", completeness " +
                    fmt("%.2e", worst_complete) + ", " + fmt("%.2f", t) + " s"};
}

Outcome criterion_2() {
    Stopwatch sw;
    Rng rng(1002);
    double worst = 0.0;
    for (const auto &spec : {model_lattice(2), LatticeSpec::diagonal(1)}) {
        const std::size_t n = spec.n_qubits();
        const std::size_t nx = spec.n_x_ops;
        const auto circuit = build_ahl_circuit(spec, 1);
        const EMat hb = to_eigen(build_h_b(spec).matrix());
        const EMat hr = to_eigen(build_h_redun(spec).matrix());
        for (int trial = 0; trial < 100; ++trial) {
            const auto p = random_params(circuit.layout(), rng.next());
            const double th = p.at({ParamGroup::THETA, 0});
            const double ga = p.at({ParamGroup::GAMMA, 0});
            const auto ops = circuit.bind(p);
            const std::span<const Operation> theta_block(ops.data(), nx);
            const std::span<const Operation> gamma_block(ops.data() + ops.size() - nx,
                                                         nx);
            const EMat ut = to_eigen(circuit_unitary(theta_block, n));
            const EMat ug = to_eigen(circuit_unitary(gamma_block, n));
            const EMat et = (Complex{0.0, -th} * hb).exp();
            const EMat eg = (Complex{0.0, -ga} * hr).exp();
            worst = std::max({worst, max_abs(ut, et), max_abs(ug, eg),
                              max_abs(ut, to_eigen(exponential(build_h_b(spec), th))),
                              max_abs(ug, to_eigen(exponential(build_h_redun(spec), ga)))});
        }
    }
    const double t = sw.seconds();
    return {worst <= 1e-10 && t < 5.0,
            "max deviation " + fmt("%.2e", worst) + ", " + fmt("%.2f", t) + " s"};
}

Outcome criterion_3() {
    Stopwatch sw;
    Rng rng(1003);
    CircuitIR c(1, qnn_layout(1), {0});
    c.append(ParamGate{GateKind::RX, 0, {ParamGroup::ALPHA, 0}, 1.0});
    const double x[] = {0.0};
    const Objective f = [&](const ParamSet &q) { return predict(c, q, x); };
    double worst = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        const double th = rng.uniform(0.0, 2.0 * pi);
        const ParamSet p(c.layout(), {th, 0.0});
        const double shift =
            0.5 * (f(p.with(0, th + pi / 2)) - f(p.with(0, th - pi / 2)));
        worst = std::max(worst, std::abs(fd_gradient(f, p, 0, 1e-4) - shift));
    }
    const double t = sw.seconds();
    return {worst <= 1e-4 && t < 2.0,
            "max |fd - shift| " + fmt("%.2e", worst) + ", " + fmt("%.2f", t) + " s"};
}

Outcome criterion_4() {
    Stopwatch sw;
    const double d2 = trained("exp01-d2", 42).record.test_metric;
    const double d10 = trained("exp01-d10", 42).record.test_metric;
    const double clean = trained("exp01-noisefree", 42).record.test_metric;
    const double t = sw.seconds();
    const bool ok = d10 < d2 && clean <= 0.05 && t < 600.0;
    return {ok, "noisy test MAE L=10 " + fmt("%.4f", d10) + " vs L=2 " +
                    fmt("%.4f", d2) + " (need L=10 < L=2); noise-free L=10 " +
                    fmt("%.4f", clean) + " (need <= 0.05); " + fmt("%.1f", t) + " s"};
}

Outcome criterion_5() {
    Stopwatch sw;
    int cos_wins = 0;
    int damp_wins = 0;
    std::string cells;
    for (auto seed : kDefaultSeeds) {
        const double rc = trained("exp02-rqnn", seed).record.test_metric;
        const double qc = trained("exp02-qnn", seed).record.test_metric;
        const double rd = trained("exp03-rqnn", seed).record.test_metric;
        const double qd = trained("exp03-qnn", seed).record.test_metric;
        cos_wins += rc < qc ? 1 : 0;
        damp_wins += rd < qd ? 1 : 0;
        cells += " s" + std::to_string(seed) + " cos " + fmt("%.3f", rc) + "/" +
                 fmt("%.3f", qc) + " damp " + fmt("%.3f", rd) + "/" + fmt("%.3f", qd) +
                 ";";
    }
    const double t = sw.seconds();
    return {cos_wins >= 4 && damp_wins >= 4,
            "RQNN < QNN test MAE: cosine " + std::to_string(cos_wins) +
                "/5, damped sine " + std::to_string(damp_wins) +
                "/5 (need >= 4 each); RQNN/QNN" + cells + " " + fmt("%.1f", t) + " s"};
}

Outcome criterion_6() {
    Stopwatch sw;
    int good = 0;
    std::string cells;
    for (auto seed : kDefaultSeeds) {
        const auto &r = trained("cls-rqnn", seed).record;
        const auto &q = trained("cls-qnn", seed).record;
        const bool ok = r.train_metric >= 0.93 && r.test_metric >= 0.93 &&
                        r.test_metric - q.test_metric >= 0.03;
        good += ok ? 1 : 0;
        cells += " s" + std::to_string(seed) + " RQNN " + fmt("%.3f", r.train_metric) +
                 "/" + fmt("%.3f", r.test_metric) + " QNN " +
                 fmt("%.3f", q.train_metric) + "/" + fmt("%.3f", q.test_metric) + ";";
    }
    const double t = sw.seconds();
    return {good >= 3 && t < 900.0,
            std::to_string(good) + "/5 seeds meet RQNN >= 0.93/0.93 and test gap >= "
                                   "0.03 (need >= 3);" +
                cells + " " + fmt("%.1f", t) + " s"};
}

Outcome criterion_7() {
    int good = 0;
    int total = 0;
    std::string failures;
    for (const auto &p : presets()) {
        for (const auto &run : p.runs) {
            const auto &curve = trained(run.name, run.seed).record.loss_curve;
            const double ratio = curve.back() / curve.front();
            ++total;
            if (curve.back() <= 0.5 * curve.front()) {
                ++good;
            } else {
                failures += " " + run.name + " " + fmt("%.3f", ratio);
            }
        }
    }
    return {good == total, std::to_string(good) + "/" + std::to_string(total) +
                               " runs reach final <= 0.5 x initial loss" +
                               (failures.empty() ? "" : "; final/initial:" + failures)};
}

Outcome criterion_8() {
    Stopwatch sw;
    const auto spec = LatticeSpec::chain(3);
    const auto hb = build_h_b(spec);
    const auto hp = build_h_p(spec);
    double worst = 0.0;
    for (double s : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        const auto h = interpolate(hb, hp, s);
        Eigen::SelfAdjointEigenSolver<EMat> es(to_eigen(h.matrix()));
        worst = std::max(worst, std::abs(ground_energy(h) - es.eigenvalues().minCoeff()));
    }
    const double t = sw.seconds();
    return {worst <= 1e-8 && t < 2.0,
            "max |E - oracle| " + fmt("%.2e", worst) + ", " + fmt("%.2f", t) + " s"};
}

std::string read_file(const std::filesystem::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Outcome criterion_9() {
    const auto root = std::filesystem::temp_directory_path() / "ahl_acceptance_c9";
    std::filesystem::remove_all(root);
    auto cfg = resolve_preset("exp01-d10").front();
    cfg.seed = 42;
    cfg.output_dir = (root / "a").string();
    (void)run_experiment(cfg);
    cfg.output_dir = (root / "b").string();
    (void)run_experiment(cfg);
    const auto a = read_file(root / "a" / "loss.csv");
    const auto b = read_file(root / "b" / "loss.csv");
    std::filesystem::remove_all(root);
    const bool ok = !a.empty() && a == b;
    return {ok, "loss.csv " + std::to_string(a.size()) + " bytes, " +
                    (a == b ? "identical" : "different")};
}

struct Criterion {
    const char *title;
    std::function<Outcome()> run;
};

const Criterion kCriteria[] = {
    {"CPTP suite", criterion_1},
    {"decomposition equivalence", criterion_2},
    {"gradient oracle", criterion_3},
    {"depth capacity", criterion_4},
    {"robustness ordering", criterion_5},
    {"classification reproduction", criterion_6},
    {"loss-curve convergence", criterion_7},
    {"adiabatic utility", criterion_8},
    {"determinism", criterion_9},
};

bool report(std::size_t index) {
    Outcome o;
    try {
        o = kCriteria[index].run();
    } catch (const std::exception &e) {
        o = {false, std::string("error: ") + e.what()};
    }
    std::printf("[%s] criterion %zu %s: %s\n", o.passed ? "PASS" : "FAIL", index + 1,
                kCriteria[index].title, o.detail.c_str());
    std::fflush(stdout);
    return o.passed;
}

} // namespace

int main(int argc, char **argv) {
    constexpr std::size_t count = std::size(kCriteria);
    if (argc == 3 && std::strcmp(argv[1], "--criterion") == 0) {
        const long n = std::strtol(argv[2], nullptr, 10);
        if (n < 1 || n > static_cast<long>(count)) {
            std::fprintf(stderr, "criterion must be 1..%zu\n", count);
            return 2;
        }
        return report(static_cast<std::size_t>(n - 1)) ? 0 : 1;
    }
    if (argc != 1) {
        std::fprintf(stderr, "usage: %s [--criterion N]\n", argv[0]);
        return 2;
    }
    bool all = true;
    for (std::size_t i = 0; i < count; ++i) {
        all = report(i) && all;
    }
    return all ? 0 : 1;
}
