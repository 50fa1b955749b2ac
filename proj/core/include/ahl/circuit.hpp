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
 * @file circuit.hpp
 * Parameterized circuit IR, trainable parameter sets, and the AHL and
 * baseline QNN ansatz builders.
 */
#pragma once

#include "ahl/gates.hpp"
#include "ahl/hamiltonian.hpp"
#include "ahl/noise.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace ahl {

/// THETA/RHO/GAMMA drive the AHL blocks; ALPHA/THETA drive the QNN baselines.
enum class ParamGroup { THETA, RHO, GAMMA, ALPHA };

std::string_view to_string(ParamGroup g);

struct ParamSlot {
    ParamGroup group = ParamGroup::THETA;
    std::size_t layer = 0;

    friend bool operator==(const ParamSlot &, const ParamSlot &) = default;
};

/// Which groups exist and how many layers each has. Flat index of a slot
/// is group_position * layers + layer.
class ParamLayout {
  public:
    ParamLayout(std::vector<ParamGroup> groups, std::size_t layers);

    [[nodiscard]] const std::vector<ParamGroup> &groups() const noexcept {
        return groups_;
    }
    [[nodiscard]] std::size_t layers() const noexcept { return layers_; }
    [[nodiscard]] std::size_t size() const noexcept {
        return groups_.size() * layers_;
    }
    /// Throws std::out_of_range for a slot outside the layout.
    [[nodiscard]] std::size_t index(const ParamSlot &slot) const;
    [[nodiscard]] ParamSlot slot(std::size_t index) const;
    [[nodiscard]] bool contains(const ParamSlot &slot) const;

    friend bool operator==(const ParamLayout &, const ParamLayout &) = default;

  private:
    std::vector<ParamGroup> groups_;
    std::size_t layers_;
};

/// Trainable vector: one value per slot of its layout.
class ParamSet {
  public:
    /// All zeros.
    explicit ParamSet(ParamLayout layout);
    /// Throws unless values.size() == layout.size() and all values are finite.
    ParamSet(ParamLayout layout, std::vector<double> values);

    [[nodiscard]] const ParamLayout &layout() const noexcept { return layout_; }
    [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
    [[nodiscard]] std::size_t layers() const noexcept {
        return layout_.layers();
    }
    [[nodiscard]] std::span<const double> values() const noexcept {
        return values_;
    }
    [[nodiscard]] double at(const ParamSlot &slot) const {
        return values_[layout_.index(slot)];
    }
    [[nodiscard]] double operator[](std::size_t i) const {
        return values_.at(i);
    }

    /// Copy with one flat entry replaced.
    [[nodiscard]] ParamSet with(std::size_t index, double value) const;
    /// Copy with one slot replaced.
    [[nodiscard]] ParamSet with(const ParamSlot &slot, double value) const;

    friend bool operator==(const ParamSet &, const ParamSet &) = default;

  private:
    ParamLayout layout_;
    std::vector<double> values_;
};

/// A rotation whose bound angle is scale * params[slot].
struct ParamGate {
    GateKind kind = GateKind::RX;
    std::size_t target = 0;
    ParamSlot slot;
    double scale = 1.0;
};

using Instruction = std::variant<Gate, ParamGate, KrausChannel>;

class CircuitIR {
  public:
    CircuitIR(std::size_t n_qubits, ParamLayout layout,
              std::vector<std::size_t> readout_qubits);

    /// Validates qubit ranges and that every referenced slot exists.
    void append(Instruction ins);
    void append(std::span<const Instruction> block);

    [[nodiscard]] std::size_t n_qubits() const noexcept { return n_qubits_; }
    [[nodiscard]] const ParamLayout &layout() const noexcept { return layout_; }
    [[nodiscard]] const std::vector<Instruction> &instructions() const noexcept {
        return instructions_;
    }
    /// Model output is the mean <Z> over these qubits.
    [[nodiscard]] const std::vector<std::size_t> &readout_qubits()
        const noexcept {
        return readout_qubits_;
    }

    /// Copy of this circuit measuring `qubits` instead.
    [[nodiscard]] CircuitIR with_readout(std::vector<std::size_t> qubits) const;

    [[nodiscard]] std::size_t gate_count() const;
    [[nodiscard]] std::size_t channel_count() const;

    /// Concrete operation list. Throws std::invalid_argument if the layout
    /// of `params` differs from this circuit's.
    [[nodiscard]] std::vector<Operation> bind(const ParamSet &params) const;

    /**
     * Period of the slot's effect on the channel it drives: 2*pi/|scale|
     * when every gate using the slot has the same |scale|, otherwise
     * std::nullopt. Unused slots report 2*pi.
     */
    [[nodiscard]] std::optional<double> slot_period(const ParamSlot &slot) const;

    /// One instruction per line; stable text used by golden files.
    [[nodiscard]] std::string to_text() const;

  private:
    void check_instruction(const Instruction &ins) const;

    std::size_t n_qubits_;
    ParamLayout layout_;
    std::vector<std::size_t> readout_qubits_;
    std::vector<Instruction> instructions_;
};

/// THETA/RHO/GAMMA over `layers`.
ParamLayout ahl_layout(std::size_t layers);
/// ALPHA/THETA over `layers`.
ParamLayout qnn_layout(std::size_t layers);

/**
 * Layer `alpha` of the AHL ansatz for `spec`:
 *   (a) RX(x-qubit n, THETA, scale 2 pi V_n)          = exp(-i H_b theta)
 *   (b) per coupling (j, k): RZ(z-qubit j, RHO, pi J), RX(x-qubit k, RHO,
 *       pi J), CNOT(z-qubit j -> x-qubit k)
 *   (c) RX(x-qubit n, GAMMA, scale 2 hbar)            = exp(-i H_redun gamma)
 */
std::vector<Instruction> ahl_layer(const LatticeSpec &spec, std::size_t alpha);

/// L AHL layers, each followed by per-qubit amplitude damping when
/// `p_damp` is set. Readout is the X-operator qubits.
CircuitIR build_ahl_circuit(const LatticeSpec &spec, std::size_t layers,
                            std::optional<double> p_damp = std::nullopt);

/**
 * Function-fitting QNN baseline on two qubits, per layer:
 * RX(q0, ALPHA), RX(q1, ALPHA), RZ(q0, THETA), CNOT(q0, q1), RX(q1, THETA).
 * Readout is qubit 1.
 */
CircuitIR build_qnn_sim_circuit(std::size_t layers,
                                std::optional<double> p_damp = std::nullopt);

/**
 * Classification QNN baseline, per layer: RX(ALPHA) on every qubit, then
 * for each neighbour pair (c, c+1): CNOT(c, c+1), RY(c+1, THETA),
 * CNOT(c, c+1). With n_qubits = 2 this is RX, RX, CNOT(q0,q1), RY(q1),
 * CNOT(q0,q1). Readout is the mean over all qubits.
 */
CircuitIR build_qnn_cls_circuit(std::size_t layers, std::size_t n_qubits = 2,
                                std::optional<double> p_damp = std::nullopt);

/// Feature i -> RX(x_i) on qubit i mod n_qubits.
std::vector<Gate> angle_encode(std::span<const double> x, std::size_t n_qubits);

/// <Z_qubit>
double readout(const DensityMatrix &state, std::size_t qubit);

/// Z on `qubit` embedded in an n-qubit register.
CMatrix z_observable(std::size_t n_qubits, std::size_t qubit);

/// Mean of Z over `qubits`, as a dense observable.
CMatrix mean_z_observable(std::size_t n_qubits,
                          std::span<const std::size_t> qubits);

} // namespace ahl
