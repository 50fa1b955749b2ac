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
#include "ahl/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace ahl {

using std::numbers::pi;

namespace {

template <class... Ts> struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts> overloaded(Ts...) -> overloaded<Ts...>;

std::string fmt_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void append_damping(CircuitIR &circuit, std::optional<double> p_damp) {
    if (!p_damp) {
        return;
    }
    const KrausChannel base = amplitude_damping(*p_damp);
    for (std::size_t q = 0; q < circuit.n_qubits(); ++q) {
        circuit.append(base.retarget({q}));
    }
}

void require_layers(std::size_t layers, const char *who) {
    if (layers == 0) {
        throw std::invalid_argument(std::string(who) +
                                    ": layer count must be >= 1");
    }
}

} // namespace

std::string_view to_string(ParamGroup g) {
    switch (g) {
    case ParamGroup::THETA:
        return "THETA";
    case ParamGroup::RHO:
        return "RHO";
    case ParamGroup::GAMMA:
        return "GAMMA";
    case ParamGroup::ALPHA:
        return "ALPHA";
    }
    return "?";
}

ParamLayout::ParamLayout(std::vector<ParamGroup> groups, std::size_t layers)
    : groups_(std::move(groups)), layers_(layers) {
    if (groups_.empty()) {
        throw std::invalid_argument("ParamLayout: no groups");
    }
    for (std::size_t i = 0; i < groups_.size(); ++i) {
        for (std::size_t j = i + 1; j < groups_.size(); ++j) {
            if (groups_[i] == groups_[j]) {
                throw std::invalid_argument("ParamLayout: duplicate group");
            }
        }
    }
}

std::size_t ParamLayout::index(const ParamSlot &slot) const {
    const auto it = std::find(groups_.begin(), groups_.end(), slot.group);
    if (it == groups_.end() || slot.layer >= layers_) {
        throw std::out_of_range("ParamLayout: slot " +
                                std::string(to_string(slot.group)) + "[" +
                                std::to_string(slot.layer) +
                                "] not in layout");
    }
    return static_cast<std::size_t>(it - groups_.begin()) * layers_ +
           slot.layer;
}

ParamSlot ParamLayout::slot(std::size_t index) const {
    if (index >= size()) {
        throw std::out_of_range("ParamLayout: flat index out of range");
    }
    return {groups_[index / layers_], index % layers_};
}

bool ParamLayout::contains(const ParamSlot &slot) const {
    return slot.layer < layers_ &&
           std::find(groups_.begin(), groups_.end(), slot.group) !=
               groups_.end();
}

ParamSet::ParamSet(ParamLayout layout)
    : layout_(std::move(layout)), values_(layout_.size(), 0.0) {}

ParamSet::ParamSet(ParamLayout layout, std::vector<double> values)
    : layout_(std::move(layout)), values_(std::move(values)) {
    if (values_.size() != layout_.size()) {
        throw std::invalid_argument("ParamSet: expected " +
                                    std::to_string(layout_.size()) +
                                    " values, got " +
                                    std::to_string(values_.size()));
    }
    for (double v : values_) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument("ParamSet: non-finite value");
        }
    }
}

ParamSet ParamSet::with(std::size_t index, double value) const {
    if (index >= values_.size()) {
        throw std::out_of_range("ParamSet::with: index out of range");
    }
    if (!std::isfinite(value)) {
        throw std::invalid_argument("ParamSet::with: non-finite value");
    }
    ParamSet out = *this;
    out.values_[index] = value;
    return out;
}

ParamSet ParamSet::with(const ParamSlot &slot, double value) const {
    return with(layout_.index(slot), value);
}

CircuitIR::CircuitIR(std::size_t n_qubits, ParamLayout layout,
                     std::vector<std::size_t> readout_qubits)
    : n_qubits_(n_qubits), layout_(std::move(layout)),
      readout_qubits_(std::move(readout_qubits)) {
    check_register_size(n_qubits);
    if (readout_qubits_.empty()) {
        throw std::invalid_argument("CircuitIR: no readout qubits");
    }
    for (auto q : readout_qubits_) {
        if (q >= n_qubits_) {
            throw std::out_of_range("CircuitIR: readout qubit out of range");
        }
    }
}

CircuitIR CircuitIR::with_readout(std::vector<std::size_t> qubits) const {
    CircuitIR out(n_qubits_, layout_, std::move(qubits));
    out.instructions_ = instructions_;
    return out;
}

void CircuitIR::check_instruction(const Instruction &ins) const {
    std::visit(overloaded{
                   [&](const Gate &g) { g.check_fits(n_qubits_); },
                   [&](const ParamGate &pg) {
                       if (!is_rotation(pg.kind)) {
                           throw std::invalid_argument(
                               "CircuitIR: parameterized CNOT");
                       }
                       if (pg.target >= n_qubits_) {
                           throw std::out_of_range(
                               "CircuitIR: parameterized gate target out of "
                               "range");
                       }
                       if (!layout_.contains(pg.slot)) {
                           throw std::out_of_range(
                               "CircuitIR: slot " +
                               std::string(to_string(pg.slot.group)) + "[" +
                               std::to_string(pg.slot.layer) +
                               "] missing from layout");
                       }
                       if (!std::isfinite(pg.scale)) {
                           throw std::invalid_argument(
                               "CircuitIR: non-finite scale");
                       }
                   },
                   [&](const KrausChannel &ch) { ch.check_fits(n_qubits_); },
               },
               ins);
}

void CircuitIR::append(Instruction ins) {
    check_instruction(ins);
    instructions_.push_back(std::move(ins));
}

void CircuitIR::append(std::span<const Instruction> block) {
    for (const auto &ins : block) {
        append(ins);
    }
}

std::size_t CircuitIR::gate_count() const {
    return static_cast<std::size_t>(std::count_if(
        instructions_.begin(), instructions_.end(), [](const Instruction &i) {
            return !std::holds_alternative<KrausChannel>(i);
        }));
}

std::size_t CircuitIR::channel_count() const {
    return instructions_.size() - gate_count();
}

std::vector<Operation> CircuitIR::bind(const ParamSet &params) const {
    if (!(params.layout() == layout_)) {
        throw std::invalid_argument(
            "CircuitIR::bind: parameter layout does not match circuit");
    }
    std::vector<Operation> ops;
    ops.reserve(instructions_.size());
    for (const auto &ins : instructions_) {
        std::visit(overloaded{
                       [&](const Gate &g) { ops.emplace_back(g); },
                       [&](const ParamGate &pg) {
                           ops.emplace_back(Gate::rotation(
                               pg.kind, pg.target,
                               pg.scale * params.at(pg.slot)));
                       },
                       [&](const KrausChannel &ch) { ops.emplace_back(ch); },
                   },
                   ins);
    }
    return ops;
}

std::optional<double> CircuitIR::slot_period(const ParamSlot &slot) const {
    std::optional<double> scale;
    for (const auto &ins : instructions_) {
        const auto *pg = std::get_if<ParamGate>(&ins);
        if (pg == nullptr || !(pg->slot == slot)) {
            continue;
        }
        const double s = std::abs(pg->scale);
        if (s == 0.0) {
            continue;
        }
        if (scale && *scale != s) {
            return std::nullopt;
        }
        scale = s;
    }
    return scale ? 2.0 * pi / *scale : 2.0 * pi;
}

std::string CircuitIR::to_text() const {
    std::string out = "# qubits=" + std::to_string(n_qubits_) +
                      " layers=" + std::to_string(layout_.layers()) +
                      " groups=";
    for (std::size_t i = 0; i < layout_.groups().size(); ++i) {
        out += (i ? "," : "") + std::string(to_string(layout_.groups()[i]));
    }
    out += " readout=";
    for (std::size_t i = 0; i < readout_qubits_.size(); ++i) {
        out += (i ? ",q" : "q") + std::to_string(readout_qubits_[i]);
    }
    out += '\n';
    for (const auto &ins : instructions_) {
        std::visit(
            overloaded{
                [&](const Gate &g) {
                    if (is_rotation(g.kind())) {
                        out += std::string(to_string(g.kind())) + " q" +
                               std::to_string(g.targets()[0]) + " " +
                               fmt_double(g.angle());
                    } else {
                        out += "CNOT q" + std::to_string(g.targets()[0]) +
                               " q" + std::to_string(g.targets()[1]);
                    }
                },
                [&](const ParamGate &pg) {
                    out += std::string(to_string(pg.kind)) + " q" +
                           std::to_string(pg.target) + " " +
                           std::string(to_string(pg.slot.group)) + "[" +
                           std::to_string(pg.slot.layer) + "]*" +
                           fmt_double(pg.scale);
                },
                [&](const KrausChannel &ch) { out += ch.str(); },
            },
            ins);
        out += '\n';
    }
    return out;
}

ParamLayout ahl_layout(std::size_t layers) {
    return ParamLayout({ParamGroup::THETA, ParamGroup::RHO, ParamGroup::GAMMA},
                       layers);
}

ParamLayout qnn_layout(std::size_t layers) {
    return ParamLayout({ParamGroup::ALPHA, ParamGroup::THETA}, layers);
}

std::vector<Instruction> ahl_layer(const LatticeSpec &spec, std::size_t alpha) {
    spec.validate();
    std::vector<Instruction> layer;
    for (std::size_t n = 0; n < spec.n_x_ops; ++n) {
        layer.emplace_back(ParamGate{GateKind::RX, spec.x_qubit(n),
                                     {ParamGroup::THETA, alpha},
                                     2.0 * pi * spec.nuclear_shifts[n]});
    }
    for (const auto &c : spec.couplings) {
        const std::size_t zq = spec.z_qubit(c.z_op);
        const std::size_t xq = spec.x_qubit(c.x_op);
        const ParamSlot rho{ParamGroup::RHO, alpha};
        layer.emplace_back(ParamGate{GateKind::RZ, zq, rho, pi * c.strength});
        layer.emplace_back(ParamGate{GateKind::RX, xq, rho, pi * c.strength});
        layer.emplace_back(Gate::cnot(zq, xq));
    }
    for (std::size_t n = 0; n < spec.n_x_ops; ++n) {
        layer.emplace_back(ParamGate{GateKind::RX, spec.x_qubit(n),
                                     {ParamGroup::GAMMA, alpha},
                                     2.0 * spec.hbar});
    }
    return layer;
}

CircuitIR build_ahl_circuit(const LatticeSpec &spec, std::size_t layers,
                            std::optional<double> p_damp) {
    require_layers(layers, "build_ahl_circuit");
    spec.validate();
    std::vector<std::size_t> readout;
    for (std::size_t n = 0; n < spec.n_x_ops; ++n) {
        readout.push_back(spec.x_qubit(n));
    }
    CircuitIR circuit(spec.n_qubits(), ahl_layout(layers), std::move(readout));
    for (std::size_t a = 0; a < layers; ++a) {
        circuit.append(ahl_layer(spec, a));
        append_damping(circuit, p_damp);
    }
    return circuit;
}

CircuitIR build_qnn_sim_circuit(std::size_t layers,
                                std::optional<double> p_damp) {
    require_layers(layers, "build_qnn_sim_circuit");
    CircuitIR circuit(2, qnn_layout(layers), {1});
    for (std::size_t a = 0; a < layers; ++a) {
        const ParamSlot alpha{ParamGroup::ALPHA, a};
        const ParamSlot theta{ParamGroup::THETA, a};
        circuit.append(ParamGate{GateKind::RX, 0, alpha, 1.0});
        circuit.append(ParamGate{GateKind::RX, 1, alpha, 1.0});
        circuit.append(ParamGate{GateKind::RZ, 0, theta, 1.0});
        circuit.append(Gate::cnot(0, 1));
        circuit.append(ParamGate{GateKind::RX, 1, theta, 1.0});
        append_damping(circuit, p_damp);
    }
    return circuit;
}

CircuitIR build_qnn_cls_circuit(std::size_t layers, std::size_t n_qubits,
                                std::optional<double> p_damp) {
    require_layers(layers, "build_qnn_cls_circuit");
    if (n_qubits < 2) {
        throw std::invalid_argument(
            "build_qnn_cls_circuit: need at least 2 qubits");
    }
    std::vector<std::size_t> readout(n_qubits);
    std::iota(readout.begin(), readout.end(), std::size_t{0});
    CircuitIR circuit(n_qubits, qnn_layout(layers), std::move(readout));
    for (std::size_t a = 0; a < layers; ++a) {
        const ParamSlot alpha{ParamGroup::ALPHA, a};
        const ParamSlot theta{ParamGroup::THETA, a};
        for (std::size_t q = 0; q < n_qubits; ++q) {
            circuit.append(ParamGate{GateKind::RX, q, alpha, 1.0});
        }
        for (std::size_t c = 0; c + 1 < n_qubits; ++c) {
            circuit.append(Gate::cnot(c, c + 1));
            circuit.append(ParamGate{GateKind::RY, c + 1, theta, 1.0});
            circuit.append(Gate::cnot(c, c + 1));
        }
        append_damping(circuit, p_damp);
    }
    return circuit;
}

std::vector<Gate> angle_encode(std::span<const double> x,
                               std::size_t n_qubits) {
    check_register_size(n_qubits);
    if (x.empty()) {
        throw std::invalid_argument("angle_encode: empty feature vector");
    }
    std::vector<Gate> prefix;
    prefix.reserve(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        prefix.push_back(Gate::rx(i % n_qubits, x[i]));
    }
    return prefix;
}

double readout(const DensityMatrix &state, std::size_t qubit) {
    const std::size_t n = state.n_qubits();
    if (qubit >= n) {
        throw std::out_of_range("readout: qubit " + std::to_string(qubit) +
                                " out of range");
    }
    const std::size_t mask = qubit_mask(n, qubit);
    const CMatrix &rho = state.matrix();
    double z = 0.0;
    for (std::size_t i = 0; i < rho.rows(); ++i) {
        z += (i & mask) ? -rho(i, i).real() : rho(i, i).real();
    }
    return std::clamp(z, -1.0, 1.0);
}

CMatrix z_observable(std::size_t n_qubits, std::size_t qubit) {
    return pauli_matrix(PauliString::single(n_qubits, qubit, Pauli::Z));
}

CMatrix mean_z_observable(std::size_t n_qubits,
                          std::span<const std::size_t> qubits) {
    if (qubits.empty()) {
        throw std::invalid_argument("mean_z_observable: no qubits");
    }
    const std::size_t d = std::size_t{1} << n_qubits;
    CMatrix obs(d, d);
    const double w = 1.0 / static_cast<double>(qubits.size());
    for (auto q : qubits) {
        obs += Complex{w, 0.0} * z_observable(n_qubits, q);
    }
    return obs;
}

} // namespace ahl
