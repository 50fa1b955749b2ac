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
 * @file gates.hpp
 * The rotation + CNOT gate set. Rotations use the half-angle convention
 * R_P(angle) = exp(-i angle P / 2).
 */
#pragma once

#include "ahl/linalg.hpp"
#include "ahl/state.hpp"

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>

namespace ahl {

enum class GateKind { RX, RY, RZ, CNOT };

std::string_view to_string(GateKind kind);
GateKind gate_kind_from_string(std::string_view name);

[[nodiscard]] constexpr bool is_rotation(GateKind kind) {
    return kind != GateKind::CNOT;
}

/// exp(-i angle sigma / 2). Throws std::domain_error on non-finite angle.
CMatrix rotation_matrix(GateKind kind, double angle);

class Gate {
  public:
    static Gate rotation(GateKind kind, std::size_t target, double angle);
    static Gate rx(std::size_t target, double angle) {
        return rotation(GateKind::RX, target, angle);
    }
    static Gate ry(std::size_t target, double angle) {
        return rotation(GateKind::RY, target, angle);
    }
    static Gate rz(std::size_t target, double angle) {
        return rotation(GateKind::RZ, target, angle);
    }
    static Gate cnot(std::size_t control, std::size_t target);

    [[nodiscard]] GateKind kind() const noexcept { return kind_; }
    /// Rotations: {target}. CNOT: {control, target}.
    [[nodiscard]] std::span<const std::size_t> targets() const noexcept {
        return {qubits_.data(), is_rotation(kind_) ? 1u : 2u};
    }
    [[nodiscard]] double angle() const noexcept { return angle_; }

    /// 2x2 for rotations, 4x4 (control = leading factor) for CNOT.
    [[nodiscard]] CMatrix matrix() const;

    /// Throws std::out_of_range if any target is >= n_qubits.
    void check_fits(std::size_t n_qubits) const;

    [[nodiscard]] std::string str() const;

  private:
    Gate(GateKind kind, std::array<std::size_t, 2> qubits, double angle)
        : kind_(kind), qubits_(qubits), angle_(angle) {}

    GateKind kind_;
    std::array<std::size_t, 2> qubits_;
    double angle_;
};

/// Lift a 2^k x 2^k operator acting on `targets` (first target = leading
/// factor) to the full n-qubit space.
CMatrix embed(const CMatrix &op, std::span<const std::size_t> targets,
              std::size_t n_qubits);

/// Full 2^n x 2^n unitary of `g`.
CMatrix gate_unitary(const Gate &g, std::size_t n_qubits);

/// rho -> U rho U^dagger.
DensityMatrix apply_gate(const DensityMatrix &state, const Gate &g);

/// psi -> U psi.
StateVector apply_gate(const StateVector &state, const Gate &g);

namespace kernels {

/// Row-major [[a, b], [c, d]].
using Mat2 = std::array<Complex, 4>;

Mat2 to_mat2(const CMatrix &m);
Mat2 adjoint(const Mat2 &m);

/// m <- U_q m
void left_1q(CMatrix &m, std::size_t n_qubits, std::size_t q, const Mat2 &u);
/// m <- m U_q
void right_1q(CMatrix &m, std::size_t n_qubits, std::size_t q, const Mat2 &u);
/// m <- CNOT m (also equals CNOT^dagger m).
void left_cnot(CMatrix &m, std::size_t n_qubits, std::size_t control,
               std::size_t target);
/// m <- m CNOT
void right_cnot(CMatrix &m, std::size_t n_qubits, std::size_t control,
                std::size_t target);

void apply_1q(std::span<Complex> psi, std::size_t n_qubits, std::size_t q,
              const Mat2 &u);
void apply_cnot(std::span<Complex> psi, std::size_t n_qubits,
                std::size_t control, std::size_t target);

} // namespace kernels

} // namespace ahl
