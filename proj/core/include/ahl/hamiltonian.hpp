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
 * @file hamiltonian.hpp
 * Weighted Pauli-sum Hamiltonians of the Z/X-operator lattice model:
 *
 *   H_b     = sum_n pi V_n X_n
 *   H_olap  = sum_(j,k) (pi/2) J_jk (Z_j + X_k)
 *   H_redun = sum_n hbar X_n
 *   H_p     = H_olap + H_redun
 *
 * Register layouts:
 *   DISJOINT  Z-operator j -> qubit j, X-operator k -> qubit S + k
 *   SHARED    Z-operator j -> qubit j, X-operator k -> qubit k, so one
 *             physical qubit can carry both; a coupling must still join two
 *             different qubits.
 */
#pragma once

#include "ahl/linalg.hpp"
#include "ahl/state.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace ahl {

struct PauliTerm {
    double coefficient = 0.0;
    PauliString string;
};

class Hamiltonian {
  public:
    explicit Hamiltonian(std::size_t n_qubits);
    Hamiltonian(std::size_t n_qubits, std::vector<PauliTerm> terms);

    /// Throws if the string width differs from the register or the
    /// coefficient is not finite.
    void add_term(double coefficient, PauliString string);

    [[nodiscard]] std::size_t n_qubits() const noexcept { return n_qubits_; }
    [[nodiscard]] const std::vector<PauliTerm> &terms() const noexcept {
        return terms_;
    }

    /// Dense Hermitian realization.
    [[nodiscard]] CMatrix matrix() const;

    /// Same terms with every coefficient multiplied by `factor`.
    [[nodiscard]] Hamiltonian scaled(double factor) const;

    [[nodiscard]] std::string str() const;

  private:
    std::size_t n_qubits_;
    std::vector<PauliTerm> terms_;
};

struct Coupling {
    std::size_t z_op = 0; // index j into the Z-operators
    std::size_t x_op = 0; // index k into the X-operators
    double strength = 1.0;
};

/**
 * Lattice parameters: N X-operators with nuclear shifts V_n, S Z-operators,
 * couplings J_jk between Z-operator j and X-operator k, and hbar.
 */
enum class RegisterLayout { DISJOINT, SHARED };

struct LatticeSpec {
    std::size_t n_x_ops = 0;
    std::size_t n_z_ops = 0;
    std::vector<Coupling> couplings;
    std::vector<double> nuclear_shifts;
    double hbar = 1.0;
    RegisterLayout layout = RegisterLayout::DISJOINT;

    [[nodiscard]] std::size_t n_qubits() const;
    [[nodiscard]] std::size_t z_qubit(std::size_t j) const;
    [[nodiscard]] std::size_t x_qubit(std::size_t k) const;

    /// Throws std::invalid_argument describing the first violated invariant.
    void validate() const;

    /**
     * S = N = `size` with diagonal couplings j = k. Defaults are unit
     * coefficients (natural units).
     */
    static LatticeSpec diagonal(std::size_t size, double nuclear_shift = 1.0,
                                double coupling = 1.0, double hbar = 1.0);

    /**
     * k x k periodic square lattice: one Z- and one X-operator per site,
     * each Z-operator coupled to the X-operators of its nearest neighbours.
     * Register size is 2 k^2, so only k <= 2 fits the dense simulator.
     */
    static LatticeSpec square(std::size_t k, double nuclear_shift = 1.0,
                              double coupling = 1.0, double hbar = 1.0);

    /**
     * SHARED layout on `n_qubits` qubits: an X-operator on every qubit,
     * Z-operators on qubits 0..n-2, and a coupling from Z-operator j to
     * X-operator j+1 (a CNOT chain). With n = 2 this is RX on both qubits,
     * RZ on qubit 0, RX on qubit 1 and CNOT(0 -> 1) per layer.
     */
    static LatticeSpec chain(std::size_t n_qubits, double nuclear_shift = 1.0,
                             double coupling = 1.0, double hbar = 1.0);
};

Hamiltonian build_h_b(const LatticeSpec &spec);
Hamiltonian build_h_olap(const LatticeSpec &spec);
Hamiltonian build_h_redun(const LatticeSpec &spec);
Hamiltonian build_h_p(const LatticeSpec &spec);

/// (1 - s) h_b + s h_p as a term list; s must lie in [0, 1].
Hamiltonian interpolate(const Hamiltonian &h_b, const Hamiltonian &h_p,
                        double s);

/// s(t) = t / T for 0 <= t <= T.
double adiabatic_schedule(double t, double total_time);

/// exp(-i t H) as a dense matrix.
CMatrix exponential(const Hamiltonian &h, double t);

/// Smallest eigenvalue of the dense realization.
double ground_energy(const Hamiltonian &h);

/// |<d| exp(-i t H) |psi>|^2
double born_likelihood(const Hamiltonian &h, const StateVector &psi,
                       const StateVector &d, double t);

} // namespace ahl
