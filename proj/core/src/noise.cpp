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
#include "ahl/noise.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace ahl {

namespace {

template <class... Ts> struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts> overloaded(Ts...) -> overloaded<Ts...>;

// rho <- sum_k K rho K^dagger, or with `adjoint` the dual map
// O <- sum_k K^dagger O K.
void channel_in_place(CMatrix &m, std::size_t n, const KrausChannel &ch,
                      bool adjoint) {
    CMatrix acc(m.rows(), m.cols());
    if (ch.targets().size() == 1) {
        const std::size_t q = ch.targets()[0];
        for (const auto &k : ch.operators()) {
            const auto kk = kernels::to_mat2(k);
            const auto kd = kernels::adjoint(kk);
            CMatrix term = m;
            kernels::left_1q(term, n, q, adjoint ? kd : kk);
            kernels::right_1q(term, n, q, adjoint ? kk : kd);
            acc += term;
        }
    } else {
        for (const auto &k : ch.operators()) {
            const CMatrix full = embed(k, ch.targets(), n);
            const CMatrix fd = full.adjoint();
            acc += adjoint ? fd * m * full : full * m * fd;
        }
    }
    m = std::move(acc);
}

} // namespace

KrausChannel::KrausChannel(std::vector<CMatrix> operators,
                           std::vector<std::size_t> targets, std::string label)
    : ops_(std::move(operators)), targets_(std::move(targets)),
      label_(std::move(label)) {
    if (ops_.empty()) {
        throw std::invalid_argument("KrausChannel: no operators");
    }
    if (targets_.empty()) {
        throw std::invalid_argument("KrausChannel: no targets");
    }
    const std::size_t d = std::size_t{1} << targets_.size();
    for (const auto &k : ops_) {
        if (k.rows() != d || k.cols() != d) {
            throw std::invalid_argument(
                "KrausChannel: operator shape does not match target count");
        }
    }
    for (std::size_t i = 0; i < targets_.size(); ++i) {
        for (std::size_t j = i + 1; j < targets_.size(); ++j) {
            if (targets_[i] == targets_[j]) {
                throw std::invalid_argument("KrausChannel: repeated target");
            }
        }
    }
    const double residual = completeness_residual();
    if (residual > kCompletenessTol) {
        throw std::invalid_argument(
            "KrausChannel: completeness violated (residual " +
            std::to_string(residual) + ")");
    }
}

KrausChannel KrausChannel::retarget(std::vector<std::size_t> targets) const {
    return KrausChannel(ops_, std::move(targets), label_);
}

double KrausChannel::completeness_residual() const {
    const std::size_t d = ops_.front().rows();
    CMatrix sum(d, d);
    for (const auto &k : ops_) {
        sum += k.adjoint() * k;
    }
    return max_abs_diff(sum, CMatrix::identity(d));
}

void KrausChannel::check_fits(std::size_t n_qubits) const {
    for (auto q : targets_) {
        if (q >= n_qubits) {
            throw std::out_of_range(label_ + ": qubit " + std::to_string(q) +
                                    " outside " + std::to_string(n_qubits) +
                                    "-qubit register");
        }
    }
}

std::string KrausChannel::str() const {
    std::string s = label_ + "(";
    for (std::size_t i = 0; i < targets_.size(); ++i) {
        s += (i ? ", q" : "q") + std::to_string(targets_[i]);
    }
    return s + ")";
}

KrausChannel amplitude_damping(double p, std::size_t target) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::domain_error("amplitude_damping: probability outside [0, 1]");
    }
    CMatrix k0{{1.0, 0.0}, {0.0, std::sqrt(1.0 - p)}};
    CMatrix k1{{0.0, std::sqrt(p)}, {0.0, 0.0}};
    char label[48];
    std::snprintf(label, sizeof label, "AD[p=%.17g]", p);
    return KrausChannel({std::move(k0), std::move(k1)}, {target}, label);
}

DensityMatrix apply_channel(const DensityMatrix &state,
                            const KrausChannel &ch) {
    ch.check_fits(state.n_qubits());
    CMatrix m = state.matrix();
    channel_in_place(m, state.n_qubits(), ch, false);
    return DensityMatrix::unchecked(state.n_qubits(), std::move(m));
}

std::string describe(const Operation &op) {
    return std::visit([](const auto &x) { return x.str(); }, op);
}

DensityMatrix run(std::span<const Operation> ops, DensityMatrix state) {
    const std::size_t n = state.n_qubits();
    CMatrix m = state.matrix();
    for (const auto &op : ops) {
        std::visit(overloaded{
                       [&](const Gate &g) {
                           g.check_fits(n);
                           if (is_rotation(g.kind())) {
                               const auto u = kernels::to_mat2(g.matrix());
                               kernels::left_1q(m, n, g.targets()[0], u);
                               kernels::right_1q(m, n, g.targets()[0],
                                                 kernels::adjoint(u));
                           } else {
                               kernels::left_cnot(m, n, g.targets()[0],
                                                  g.targets()[1]);
                               kernels::right_cnot(m, n, g.targets()[0],
                                                   g.targets()[1]);
                           }
                       },
                       [&](const KrausChannel &ch) {
                           ch.check_fits(n);
                           channel_in_place(m, n, ch, false);
                       },
                   },
                   op);
    }
    return DensityMatrix::unchecked(n, std::move(m));
}

StateVector run(std::span<const Operation> ops, StateVector state) {
    const std::size_t n = state.n_qubits();
    std::vector<Complex> amps = state.amplitudes();
    for (const auto &op : ops) {
        const auto *g = std::get_if<Gate>(&op);
        if (g == nullptr) {
            throw std::invalid_argument(
                "run: pure-state simulation cannot apply channel " +
                describe(op));
        }
        g->check_fits(n);
        if (is_rotation(g->kind())) {
            kernels::apply_1q(amps, n, g->targets()[0],
                              kernels::to_mat2(g->matrix()));
        } else {
            kernels::apply_cnot(amps, n, g->targets()[0], g->targets()[1]);
        }
    }
    return StateVector(n, std::move(amps));
}

CMatrix heisenberg(std::span<const Operation> ops, std::size_t n_qubits,
                   CMatrix observable) {
    check_register_size(n_qubits);
    const std::size_t d = std::size_t{1} << n_qubits;
    if (observable.rows() != d || observable.cols() != d) {
        throw std::invalid_argument("heisenberg: observable dimension mismatch");
    }
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
        std::visit(overloaded{
                       [&](const Gate &g) {
                           g.check_fits(n_qubits);
                           if (is_rotation(g.kind())) {
                               const auto u = kernels::to_mat2(g.matrix());
                               kernels::left_1q(observable, n_qubits,
                                                g.targets()[0],
                                                kernels::adjoint(u));
                               kernels::right_1q(observable, n_qubits,
                                                 g.targets()[0], u);
                           } else {
                               kernels::left_cnot(observable, n_qubits,
                                                  g.targets()[0],
                                                  g.targets()[1]);
                               kernels::right_cnot(observable, n_qubits,
                                                   g.targets()[0],
                                                   g.targets()[1]);
                           }
                       },
                       [&](const KrausChannel &ch) {
                           ch.check_fits(n_qubits);
                           channel_in_place(observable, n_qubits, ch, true);
                       },
                   },
                   *it);
    }
    return observable;
}

CMatrix circuit_unitary(std::span<const Operation> ops, std::size_t n_qubits) {
    check_register_size(n_qubits);
    CMatrix u = CMatrix::identity(std::size_t{1} << n_qubits);
    for (const auto &op : ops) {
        const auto *g = std::get_if<Gate>(&op);
        if (g == nullptr) {
            throw std::invalid_argument("circuit_unitary: sequence contains " +
                                        describe(op));
        }
        g->check_fits(n_qubits);
        if (is_rotation(g->kind())) {
            kernels::left_1q(u, n_qubits, g->targets()[0],
                             kernels::to_mat2(g->matrix()));
        } else {
            kernels::left_cnot(u, n_qubits, g->targets()[0], g->targets()[1]);
        }
    }
    return u;
}

} // namespace ahl
