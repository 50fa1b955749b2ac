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
#include "ahl/hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <set>
#include <stdexcept>
#include <utility>

namespace ahl {

using std::numbers::pi;

Hamiltonian::Hamiltonian(std::size_t n_qubits) : n_qubits_(n_qubits) {
    check_register_size(n_qubits);
}

Hamiltonian::Hamiltonian(std::size_t n_qubits, std::vector<PauliTerm> terms)
    : Hamiltonian(n_qubits) {
    for (auto &t : terms) {
        add_term(t.coefficient, std::move(t.string));
    }
}

void Hamiltonian::add_term(double coefficient, PauliString string) {
    if (!std::isfinite(coefficient)) {
        throw std::invalid_argument("Hamiltonian: non-finite coefficient");
    }
    if (string.n_qubits() != n_qubits_) {
        throw std::invalid_argument("Hamiltonian: term " + string.str() +
                                    " does not match " +
                                    std::to_string(n_qubits_) + " qubits");
    }
    terms_.push_back({coefficient, std::move(string)});
}

CMatrix Hamiltonian::matrix() const {
    const std::size_t d = std::size_t{1} << n_qubits_;
    CMatrix m(d, d);
    for (const auto &t : terms_) {
        m += Complex{t.coefficient, 0.0} * pauli_matrix(t.string);
    }
    return m;
}

Hamiltonian Hamiltonian::scaled(double factor) const {
    Hamiltonian out(n_qubits_);
    for (const auto &t : terms_) {
        out.add_term(factor * t.coefficient, t.string);
    }
    return out;
}

std::string Hamiltonian::str() const {
    std::string s;
    char buf[64];
    for (const auto &t : terms_) {
        std::snprintf(buf, sizeof buf, "%+.17g*", t.coefficient);
        if (!s.empty()) {
            s += ' ';
        }
        s += buf;
        s += t.string.str();
    }
    return s.empty() ? "0" : s;
}

std::size_t LatticeSpec::n_qubits() const {
    if (layout == RegisterLayout::SHARED) {
        return std::max(n_z_ops, n_x_ops);
    }
    return n_z_ops + n_x_ops;
}

std::size_t LatticeSpec::z_qubit(std::size_t j) const {
    if (j >= n_z_ops) {
        throw std::out_of_range("LatticeSpec: Z-operator index " +
                                std::to_string(j) + " out of range");
    }
    return j;
}

std::size_t LatticeSpec::x_qubit(std::size_t k) const {
    if (k >= n_x_ops) {
        throw std::out_of_range("LatticeSpec: X-operator index " +
                                std::to_string(k) + " out of range");
    }
    return layout == RegisterLayout::SHARED ? k : n_z_ops + k;
}

void LatticeSpec::validate() const {
    if (n_x_ops == 0) {
        throw std::invalid_argument("LatticeSpec: no X-operators");
    }
    if (nuclear_shifts.size() != n_x_ops) {
        throw std::invalid_argument(
            "LatticeSpec: expected one nuclear shift per X-operator");
    }
    if (n_qubits() > kMaxQubits) {
        throw std::invalid_argument("LatticeSpec: register of " +
                                    std::to_string(n_qubits()) +
                                    " qubits exceeds the dense limit");
    }
    for (double v : nuclear_shifts) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument("LatticeSpec: non-finite nuclear shift");
        }
    }
    if (!std::isfinite(hbar)) {
        throw std::invalid_argument("LatticeSpec: non-finite hbar");
    }
    for (const auto &c : couplings) {
        if (c.z_op >= n_z_ops || c.x_op >= n_x_ops) {
            throw std::invalid_argument("LatticeSpec: coupling (" +
                                        std::to_string(c.z_op) + ", " +
                                        std::to_string(c.x_op) +
                                        ") references a missing operator");
        }
        if (!std::isfinite(c.strength)) {
            throw std::invalid_argument("LatticeSpec: non-finite coupling");
        }
        if (z_qubit(c.z_op) == x_qubit(c.x_op)) {
            throw std::invalid_argument(
                "LatticeSpec: coupling joins a qubit to itself");
        }
    }
}

LatticeSpec LatticeSpec::diagonal(std::size_t size, double nuclear_shift,
                                  double coupling, double hbar) {
    LatticeSpec spec;
    spec.n_x_ops = size;
    spec.n_z_ops = size;
    spec.nuclear_shifts.assign(size, nuclear_shift);
    spec.hbar = hbar;
    for (std::size_t j = 0; j < size; ++j) {
        spec.couplings.push_back({j, j, coupling});
    }
    spec.validate();
    return spec;
}

LatticeSpec LatticeSpec::square(std::size_t k, double nuclear_shift,
                                double coupling, double hbar) {
    if (k == 0) {
        throw std::invalid_argument("LatticeSpec::square: k must be >= 1");
    }
    const std::size_t sites = k * k;
    LatticeSpec spec;
    spec.n_x_ops = sites;
    spec.n_z_ops = sites;
    spec.nuclear_shifts.assign(sites, nuclear_shift);
    spec.hbar = hbar;
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (std::size_t r = 0; r < k; ++r) {
        for (std::size_t c = 0; c < k; ++c) {
            const std::size_t site = r * k + c;
            const std::size_t nbrs[4] = {((r + 1) % k) * k + c,
                                         ((r + k - 1) % k) * k + c,
                                         r * k + (c + 1) % k,
                                         r * k + (c + k - 1) % k};
            for (auto nb : nbrs) {
                if (nb != site && seen.insert({site, nb}).second) {
                    spec.couplings.push_back({site, nb, coupling});
                }
            }
        }
    }
    spec.validate();
    return spec;
}

LatticeSpec LatticeSpec::chain(std::size_t n_qubits, double nuclear_shift,
                               double coupling, double hbar) {
    if (n_qubits < 2) {
        throw std::invalid_argument("LatticeSpec::chain: need >= 2 qubits");
    }
    LatticeSpec spec;
    spec.layout = RegisterLayout::SHARED;
    spec.n_x_ops = n_qubits;
    spec.n_z_ops = n_qubits - 1;
    spec.nuclear_shifts.assign(n_qubits, nuclear_shift);
    spec.hbar = hbar;
    for (std::size_t j = 0; j + 1 < n_qubits; ++j) {
        spec.couplings.push_back({j, j + 1, coupling});
    }
    spec.validate();
    return spec;
}

Hamiltonian build_h_b(const LatticeSpec &spec) {
    spec.validate();
    Hamiltonian h(spec.n_qubits());
    for (std::size_t n = 0; n < spec.n_x_ops; ++n) {
        h.add_term(pi * spec.nuclear_shifts[n],
                   PauliString::single(spec.n_qubits(), spec.x_qubit(n),
                                       Pauli::X));
    }
    return h;
}

Hamiltonian build_h_olap(const LatticeSpec &spec) {
    spec.validate();
    if (spec.couplings.empty()) {
        throw std::invalid_argument("build_h_olap: no couplings");
    }
    Hamiltonian h(spec.n_qubits());
    for (const auto &c : spec.couplings) {
        const double w = 0.5 * pi * c.strength;
        h.add_term(w, PauliString::single(spec.n_qubits(),
                                          spec.z_qubit(c.z_op), Pauli::Z));
        h.add_term(w, PauliString::single(spec.n_qubits(),
                                          spec.x_qubit(c.x_op), Pauli::X));
    }
    return h;
}

Hamiltonian build_h_redun(const LatticeSpec &spec) {
    spec.validate();
    Hamiltonian h(spec.n_qubits());
    for (std::size_t n = 0; n < spec.n_x_ops; ++n) {
        h.add_term(spec.hbar, PauliString::single(spec.n_qubits(),
                                                  spec.x_qubit(n), Pauli::X));
    }
    return h;
}

Hamiltonian build_h_p(const LatticeSpec &spec) {
    spec.validate();
    Hamiltonian h(spec.n_qubits());
    if (!spec.couplings.empty()) {
        const Hamiltonian olap = build_h_olap(spec);
        for (const auto &t : olap.terms()) {
            h.add_term(t.coefficient, t.string);
        }
    }
    const Hamiltonian redun = build_h_redun(spec);
    for (const auto &t : redun.terms()) {
        h.add_term(t.coefficient, t.string);
    }
    return h;
}

Hamiltonian interpolate(const Hamiltonian &h_b, const Hamiltonian &h_p,
                        double s) {
    if (!(s >= 0.0 && s <= 1.0)) {
        throw std::domain_error("interpolate: s outside [0, 1]");
    }
    if (h_b.n_qubits() != h_p.n_qubits()) {
        throw std::invalid_argument("interpolate: register sizes differ");
    }
    Hamiltonian h(h_b.n_qubits());
    for (const auto &t : h_b.terms()) {
        h.add_term((1.0 - s) * t.coefficient, t.string);
    }
    for (const auto &t : h_p.terms()) {
        h.add_term(s * t.coefficient, t.string);
    }
    return h;
}

double adiabatic_schedule(double t, double total_time) {
    if (!(total_time > 0.0)) {
        throw std::domain_error("adiabatic_schedule: total time must be > 0");
    }
    if (!(t >= 0.0 && t <= total_time)) {
        throw std::domain_error("adiabatic_schedule: t outside [0, T]");
    }
    return t / total_time;
}

CMatrix exponential(const Hamiltonian &h, double t) {
    if (h.n_qubits() > kMaxQubits) {
        throw std::invalid_argument("exponential: register too large");
    }
    return expm(Complex{0.0, -t} * h.matrix());
}

double ground_energy(const Hamiltonian &h) {
    if (h.n_qubits() > kMaxQubits) {
        throw std::invalid_argument("ground_energy: register too large");
    }
    return eigh(h.matrix(), 1e-8).values.front();
}

double born_likelihood(const Hamiltonian &h, const StateVector &psi,
                       const StateVector &d, double t) {
    if (psi.n_qubits() != h.n_qubits() || d.n_qubits() != h.n_qubits()) {
        throw std::invalid_argument("born_likelihood: dimension mismatch");
    }
    const auto evolved =
        exponential(h, t) * std::span<const Complex>(psi.amplitudes());
    Complex overlap{0.0, 0.0};
    const auto &da = d.amplitudes();
    for (std::size_t i = 0; i < da.size(); ++i) {
        overlap += std::conj(da[i]) * evolved[i];
    }
    return std::clamp(std::norm(overlap), 0.0, 1.0);
}

} // namespace ahl
