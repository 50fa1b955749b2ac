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
#include "ahl/gates.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace ahl {

std::string_view to_string(GateKind kind) {
    switch (kind) {
    case GateKind::RX:
        return "RX";
    case GateKind::RY:
        return "RY";
    case GateKind::RZ:
        return "RZ";
    case GateKind::CNOT:
        return "CNOT";
    }
    return "?";
}

GateKind gate_kind_from_string(std::string_view name) {
    if (name == "RX") {
        return GateKind::RX;
    }
    if (name == "RY") {
        return GateKind::RY;
    }
    if (name == "RZ") {
        return GateKind::RZ;
    }
    if (name == "CNOT") {
        return GateKind::CNOT;
    }
    throw std::invalid_argument("unknown gate kind '" + std::string(name) +
                                "'");
}

CMatrix rotation_matrix(GateKind kind, double angle) {
    if (!std::isfinite(angle)) {
        throw std::domain_error("rotation_matrix: non-finite angle");
    }
    const double c = std::cos(angle / 2);
    const double s = std::sin(angle / 2);
    switch (kind) {
    case GateKind::RX:
        return {{c, Complex{0.0, -s}}, {Complex{0.0, -s}, c}};
    case GateKind::RY:
        return {{c, -s}, {s, c}};
    case GateKind::RZ:
        return {{Complex{c, -s}, 0.0}, {0.0, Complex{c, s}}};
    case GateKind::CNOT:
        break;
    }
    throw std::invalid_argument("rotation_matrix: CNOT is not a rotation");
}

Gate Gate::rotation(GateKind kind, std::size_t target, double angle) {
    if (!is_rotation(kind)) {
        throw std::invalid_argument("Gate::rotation: CNOT is not a rotation");
    }
    if (!std::isfinite(angle)) {
        throw std::domain_error("Gate::rotation: non-finite angle");
    }
    return Gate(kind, {target, target}, angle);
}

Gate Gate::cnot(std::size_t control, std::size_t target) {
    if (control == target) {
        throw std::invalid_argument("Gate::cnot: control equals target");
    }
    return Gate(GateKind::CNOT, {control, target}, 0.0);
}

CMatrix Gate::matrix() const {
    if (is_rotation(kind_)) {
        return rotation_matrix(kind_, angle_);
    }
    return {{1.0, 0.0, 0.0, 0.0},
            {0.0, 1.0, 0.0, 0.0},
            {0.0, 0.0, 0.0, 1.0},
            {0.0, 0.0, 1.0, 0.0}};
}

void Gate::check_fits(std::size_t n_qubits) const {
    for (auto q : targets()) {
        if (q >= n_qubits) {
            throw std::out_of_range(str() + ": qubit " + std::to_string(q) +
                                    " outside " + std::to_string(n_qubits) +
                                    "-qubit register");
        }
    }
}

std::string Gate::str() const {
    char buf[96];
    if (is_rotation(kind_)) {
        std::snprintf(buf, sizeof buf, "%s(q%zu, %.17g)",
                      std::string(to_string(kind_)).c_str(), qubits_[0],
                      angle_);
    } else {
        std::snprintf(buf, sizeof buf, "CNOT(q%zu, q%zu)", qubits_[0],
                      qubits_[1]);
    }
    return buf;
}

CMatrix embed(const CMatrix &op, std::span<const std::size_t> targets,
              std::size_t n_qubits) {
    check_register_size(n_qubits);
    const std::size_t k = targets.size();
    if (op.rows() != (std::size_t{1} << k) || !op.is_square()) {
        throw std::invalid_argument("embed: operator size does not match " +
                                    std::to_string(k) + " targets");
    }
    std::size_t target_mask = 0;
    for (auto q : targets) {
        if (q >= n_qubits) {
            throw std::out_of_range("embed: target out of range");
        }
        const std::size_t bit = qubit_mask(n_qubits, q);
        if (target_mask & bit) {
            throw std::invalid_argument("embed: repeated target");
        }
        target_mask |= bit;
    }
    auto local_index = [&](std::size_t full) {
        std::size_t idx = 0;
        for (auto q : targets) {
            idx = (idx << 1) | ((full & qubit_mask(n_qubits, q)) ? 1u : 0u);
        }
        return idx;
    };
    const std::size_t d = std::size_t{1} << n_qubits;
    CMatrix out(d, d);
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) {
            if ((r & ~target_mask) != (c & ~target_mask)) {
                continue;
            }
            out(r, c) = op(local_index(r), local_index(c));
        }
    }
    return out;
}

CMatrix gate_unitary(const Gate &g, std::size_t n_qubits) {
    g.check_fits(n_qubits);
    return embed(g.matrix(), g.targets(), n_qubits);
}

DensityMatrix apply_gate(const DensityMatrix &state, const Gate &g) {
    const std::size_t n = state.n_qubits();
    g.check_fits(n);
    CMatrix m = state.matrix();
    if (is_rotation(g.kind())) {
        const auto u = kernels::to_mat2(g.matrix());
        kernels::left_1q(m, n, g.targets()[0], u);
        kernels::right_1q(m, n, g.targets()[0], kernels::adjoint(u));
    } else {
        kernels::left_cnot(m, n, g.targets()[0], g.targets()[1]);
        kernels::right_cnot(m, n, g.targets()[0], g.targets()[1]);
    }
    return DensityMatrix::unchecked(n, std::move(m));
}

StateVector apply_gate(const StateVector &state, const Gate &g) {
    const std::size_t n = state.n_qubits();
    g.check_fits(n);
    std::vector<Complex> amps = state.amplitudes();
    if (is_rotation(g.kind())) {
        kernels::apply_1q(amps, n, g.targets()[0],
                          kernels::to_mat2(g.matrix()));
    } else {
        kernels::apply_cnot(amps, n, g.targets()[0], g.targets()[1]);
    }
    return StateVector(n, std::move(amps));
}

namespace kernels {

Mat2 to_mat2(const CMatrix &m) {
    if (m.rows() != 2 || m.cols() != 2) {
        throw std::invalid_argument("to_mat2: expected a 2x2 matrix");
    }
    return {m(0, 0), m(0, 1), m(1, 0), m(1, 1)};
}

Mat2 adjoint(const Mat2 &m) {
    return {std::conj(m[0]), std::conj(m[2]), std::conj(m[1]),
            std::conj(m[3])};
}

void left_1q(CMatrix &m, std::size_t n_qubits, std::size_t q, const Mat2 &u) {
    const std::size_t mask = qubit_mask(n_qubits, q);
    const std::size_t d = m.rows();
    const std::size_t cols = m.cols();
    for (std::size_t i0 = 0; i0 < d; ++i0) {
        if (i0 & mask) {
            continue;
        }
        const std::size_t i1 = i0 | mask;
        for (std::size_t c = 0; c < cols; ++c) {
            const Complex r0 = m(i0, c);
            const Complex r1 = m(i1, c);
            m(i0, c) = u[0] * r0 + u[1] * r1;
            m(i1, c) = u[2] * r0 + u[3] * r1;
        }
    }
}

void right_1q(CMatrix &m, std::size_t n_qubits, std::size_t q, const Mat2 &u) {
    const std::size_t mask = qubit_mask(n_qubits, q);
    const std::size_t rows = m.rows();
    const std::size_t d = m.cols();
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t j0 = 0; j0 < d; ++j0) {
            if (j0 & mask) {
                continue;
            }
            const std::size_t j1 = j0 | mask;
            const Complex x0 = m(r, j0);
            const Complex x1 = m(r, j1);
            m(r, j0) = x0 * u[0] + x1 * u[2];
            m(r, j1) = x0 * u[1] + x1 * u[3];
        }
    }
}

void left_cnot(CMatrix &m, std::size_t n_qubits, std::size_t control,
               std::size_t target) {
    const std::size_t cm = qubit_mask(n_qubits, control);
    const std::size_t tm = qubit_mask(n_qubits, target);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if ((i & cm) && !(i & tm)) {
            const std::size_t j = i | tm;
            for (std::size_t c = 0; c < m.cols(); ++c) {
                std::swap(m(i, c), m(j, c));
            }
        }
    }
}

void right_cnot(CMatrix &m, std::size_t n_qubits, std::size_t control,
                std::size_t target) {
    const std::size_t cm = qubit_mask(n_qubits, control);
    const std::size_t tm = qubit_mask(n_qubits, target);
    for (std::size_t j = 0; j < m.cols(); ++j) {
        if ((j & cm) && !(j & tm)) {
            const std::size_t k = j | tm;
            for (std::size_t r = 0; r < m.rows(); ++r) {
                std::swap(m(r, j), m(r, k));
            }
        }
    }
}

void apply_1q(std::span<Complex> psi, std::size_t n_qubits, std::size_t q,
              const Mat2 &u) {
    const std::size_t mask = qubit_mask(n_qubits, q);
    for (std::size_t i0 = 0; i0 < psi.size(); ++i0) {
        if (i0 & mask) {
            continue;
        }
        const std::size_t i1 = i0 | mask;
        const Complex a0 = psi[i0];
        const Complex a1 = psi[i1];
        psi[i0] = u[0] * a0 + u[1] * a1;
        psi[i1] = u[2] * a0 + u[3] * a1;
    }
}

void apply_cnot(std::span<Complex> psi, std::size_t n_qubits,
                std::size_t control, std::size_t target) {
    const std::size_t cm = qubit_mask(n_qubits, control);
    const std::size_t tm = qubit_mask(n_qubits, target);
    for (std::size_t i = 0; i < psi.size(); ++i) {
        if ((i & cm) && !(i & tm)) {
            std::swap(psi[i], psi[i | tm]);
        }
    }
}

} // namespace kernels

} // namespace ahl
