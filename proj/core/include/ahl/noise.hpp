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
 * @file noise.hpp
 * Kraus-form quantum channels and the operation sequences the simulator
 * executes (gates interleaved with channels).
 */
#pragma once

#include "ahl/gates.hpp"
#include "ahl/linalg.hpp"
#include "ahl/state.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace ahl {

inline constexpr double kCompletenessTol = 1e-10;

class KrausChannel {
  public:
    /// Throws std::invalid_argument if the operators are not all
    /// 2^k x 2^k for k = targets.size(), or if sum K^dagger K deviates from
    /// the identity by more than kCompletenessTol.
    KrausChannel(std::vector<CMatrix> operators,
                 std::vector<std::size_t> targets, std::string label = "kraus");

    [[nodiscard]] const std::vector<CMatrix> &operators() const noexcept {
        return ops_;
    }
    [[nodiscard]] const std::vector<std::size_t> &targets() const noexcept {
        return targets_;
    }
    [[nodiscard]] const std::string &label() const noexcept { return label_; }

    /// Same operators on different qubits.
    [[nodiscard]] KrausChannel retarget(std::vector<std::size_t> targets) const;

    /// max |sum K^dagger K - I|
    [[nodiscard]] double completeness_residual() const;

    void check_fits(std::size_t n_qubits) const;

    [[nodiscard]] std::string str() const;

  private:
    std::vector<CMatrix> ops_;
    std::vector<std::size_t> targets_;
    std::string label_;
};

/// K0 = [[1, 0], [0, sqrt(1-p)]], K1 = [[0, sqrt(p)], [0, 0]].
/// Throws std::domain_error unless 0 <= p <= 1.
KrausChannel amplitude_damping(double p, std::size_t target = 0);

/// rho -> sum_k K_k rho K_k^dagger
DensityMatrix apply_channel(const DensityMatrix &state, const KrausChannel &ch);

/// One executable step of a bound circuit.
using Operation = std::variant<Gate, KrausChannel>;

std::string describe(const Operation &op);

/// Forward density-matrix simulation.
DensityMatrix run(std::span<const Operation> ops, DensityMatrix state);

/// Forward pure-state simulation. Throws std::invalid_argument if `ops`
/// contains a channel.
StateVector run(std::span<const Operation> ops, StateVector state);

/**
 * Heisenberg-picture image of `observable` under the whole sequence:
 * returns O' with tr(run(ops, rho) O) = tr(rho O') for every rho.
 * Gates map O -> U^dagger O U and channels O -> sum K^dagger O K, walked
 * from the last operation to the first.
 */
CMatrix heisenberg(std::span<const Operation> ops, std::size_t n_qubits,
                   CMatrix observable);

/// Product of all gate unitaries. Throws if `ops` contains a channel.
CMatrix circuit_unitary(std::span<const Operation> ops, std::size_t n_qubits);

} // namespace ahl
