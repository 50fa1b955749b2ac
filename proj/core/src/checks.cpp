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
#include "ahl/checks.hpp"

#include "ahl/config.hpp"
#include "ahl/experiments.hpp"
#include "ahl/format.hpp"
#include "ahl/rng.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

namespace ahl {

namespace {

using std::numbers::pi;

DensityMatrix random_state(std::size_t n, Rng &rng) {
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

std::string worst(double v) { return "worst residual " + format_double(v); }

CheckResult channel_is_cptp() {
    Rng rng(7);
    double err = 0.0;
    for (int k = 0; k <= 10; ++k) {
        const double p = 0.1 * k;
        for (std::size_t q = 0; q < 2; ++q) {
            const auto ch = amplitude_damping(p, q);
            err = std::max(err, ch.completeness_residual());
            const auto out = apply_channel(random_state(2, rng), ch);
            const auto diag = purify_check(out);
            err = std::max({err, std::abs(diag.trace_re - 1.0),
                            std::abs(diag.trace_im), diag.hermiticity_residual,
                            std::max(0.0, -diag.min_eigenvalue)});
        }
    }
    return {"amplitude damping is trace preserving and positive", err <= 1e-10,
            worst(err)};
}

CheckResult blocks_match_exponentials() {
    const auto spec = model_lattice(2);
    const auto h_b = build_h_b(spec);
    const auto h_r = build_h_redun(spec);
    Rng rng(11);
    double err = 0.0;
    for (int k = 0; k < 10; ++k) {
        const double theta = rng.uniform(0.0, 2.0 * pi);
        const double gamma = rng.uniform(0.0, 2.0 * pi);
        std::vector<Operation> tb, gb;
        for (const auto &ins : ahl_layer(spec, 0)) {
            const auto *pg = std::get_if<ParamGate>(&ins);
            if (pg == nullptr) {
                continue;
            }
            if (pg->slot.group == ParamGroup::THETA) {
                tb.emplace_back(Gate::rotation(pg->kind, pg->target,
                                               pg->scale * theta));
            } else if (pg->slot.group == ParamGroup::GAMMA) {
                gb.emplace_back(Gate::rotation(pg->kind, pg->target,
                                               pg->scale * gamma));
            }
        }
        err = std::max(err, max_abs_diff(circuit_unitary(tb, 2),
                                         exponential(h_b, theta)));
        err = std::max(err, max_abs_diff(circuit_unitary(gb, 2),
                                         exponential(h_r, gamma)));
    }
    return {"ahl_layer theta/gamma blocks equal exp(-i H t)", err <= 1e-10,
            worst(err)};
}

CheckResult gradient_matches_shift_rule() {
    Rng rng(13);
    double err = 0.0;
    const ParamLayout layout({ParamGroup::THETA}, 1);
    CircuitIR c(1, layout, {0});
    c.append(ParamGate{GateKind::RX, 0, {ParamGroup::THETA, 0}, 1.0});
    const Objective f = [&](const ParamSet &p) {
        return expectation(run(c.bind(p), DensityMatrix(1)),
                           z_observable(1, 0));
    };
    for (int k = 0; k < 10; ++k) {
        const double a = rng.uniform(0.0, 2.0 * pi);
        const ParamSet p(layout, {a});
        const double shift = 0.5 * (f(p.with(0, a + pi / 2)) -
                                    f(p.with(0, a - pi / 2)));
        err = std::max(err, std::abs(fd_gradient(f, p, 0, 1e-4) - shift));
    }
    return {"finite differences match the parameter-shift rule", err <= 1e-4,
            worst(err)};
}

CheckResult readout_in_range() {
    ExperimentConfig cfg;
    cfg.depth = 3;
    cfg.p_damp = 0.3;
    const auto circuit = build_model(cfg);
    Rng rng(17);
    double excess = 0.0;
    for (int k = 0; k < 20; ++k) {
        const auto params = random_params(circuit.layout(), 100 + k);
        const double x = rng.uniform(0.0, 2.0 * pi);
        const std::vector<double> in{x, x};
        const double y = predict(circuit, params, in);
        excess = std::max(excess, std::abs(y) - 1.0);
    }
    return {"noisy readout stays in [-1, 1]", excess <= 0.0,
            "max |<Z>| - 1 = " + format_double(excess)};
}

CheckResult adiabatic_endpoint() {
    const auto spec = LatticeSpec::diagonal(1);
    const auto h = interpolate(build_h_b(spec), build_h_p(spec), 0.0);
    const double e = ground_energy(h);
    const double expected = -pi; // H_b = pi X on one qubit
    const double err = std::abs(e - expected);
    return {"ground energy of H(0) equals that of H_b", err <= 1e-8,
            worst(err)};
}

CheckResult config_round_trip() {
    for (const auto &p : presets()) {
        for (const auto &r : p.runs) {
            if (parse_config(format_config(r)) != r) {
                return {"config files round-trip", false, r.name};
            }
        }
    }
    return {"config files round-trip", true, "all preset runs"};
}

} // namespace

std::vector<CheckResult> run_invariant_checks() {
    const std::vector<std::function<CheckResult()>> checks = {
        channel_is_cptp,  blocks_match_exponentials, gradient_matches_shift_rule,
        readout_in_range, adiabatic_endpoint,        config_round_trip};
    std::vector<CheckResult> out;
    for (const auto &c : checks) {
        try {
            out.push_back(c());
        } catch (const std::exception &e) {
            out.push_back({"(check threw)", false, e.what()});
        }
    }
    return out;
}

} // namespace ahl
