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
 * @file state.hpp
 * Pure and mixed register states plus Pauli strings.
 *
 * Qubit 0 is the leftmost (most significant) tensor factor everywhere in
 * this library: basis index bit (n - 1 - q) holds qubit q.
 */
#pragma once

#include "ahl/linalg.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace ahl {

/// Largest register the dense simulator accepts.
inline constexpr std::size_t kMaxQubits = 8;

inline constexpr double kStateTol = 1e-9;
inline constexpr double kAlgebraTol = 1e-12;

/// Throws std::invalid_argument unless 1 <= n <= kMaxQubits.
void check_register_size(std::size_t n_qubits);

/// Bit mask of qubit q within an n-qubit basis index.
constexpr std::size_t qubit_mask(std::size_t n_qubits, std::size_t q) {
    return std::size_t{1} << (n_qubits - 1 - q);
}

class StateVector {
  public:
    /// |0...0>
    explicit StateVector(std::size_t n_qubits);
    /// Takes ownership of amplitudes; throws unless length is 2^n and the
    /// norm is 1 within kStateTol.
    StateVector(std::size_t n_qubits, std::vector<Complex> amplitudes);

    static StateVector basis(std::size_t n_qubits, std::size_t index);

    [[nodiscard]] std::size_t n_qubits() const noexcept { return n_qubits_; }
    [[nodiscard]] std::size_t dim() const noexcept { return amps_.size(); }
    [[nodiscard]] const std::vector<Complex> &amplitudes() const noexcept {
        return amps_;
    }
    [[nodiscard]] double norm() const;

    /// <this|other>
    [[nodiscard]] Complex inner(const StateVector &other) const;

  private:
    std::size_t n_qubits_;
    std::vector<Complex> amps_;
};

class DensityMatrix {
  public:
    /// |0...0><0...0|
    explicit DensityMatrix(std::size_t n_qubits);
    /// Validates shape, hermiticity and unit trace within kStateTol.
    DensityMatrix(std::size_t n_qubits, CMatrix matrix);

    static DensityMatrix from_pure(const StateVector &psi);
    static DensityMatrix maximally_mixed(std::size_t n_qubits);

    [[nodiscard]] std::size_t n_qubits() const noexcept { return n_qubits_; }
    [[nodiscard]] std::size_t dim() const noexcept { return matrix_.rows(); }
    [[nodiscard]] const CMatrix &matrix() const noexcept { return matrix_; }

    /// Skips validation; for kernels whose outputs are valid by construction.
    static DensityMatrix unchecked(std::size_t n_qubits, CMatrix matrix);

  private:
    DensityMatrix(std::size_t n_qubits, CMatrix matrix, bool /*unchecked*/);

    std::size_t n_qubits_;
    CMatrix matrix_;
};

enum class Pauli : char { I = 'I', X = 'X', Y = 'Y', Z = 'Z' };

/// Single-qubit Pauli matrix.
CMatrix pauli_2x2(Pauli p);

class PauliString {
  public:
    /// Parses a word such as "XZI"; letter q acts on qubit q.
    explicit PauliString(std::string_view letters);
    explicit PauliString(std::vector<Pauli> letters);

    /// Identity on n qubits except `p` on `qubit`.
    static PauliString single(std::size_t n_qubits, std::size_t qubit,
                              Pauli p);

    [[nodiscard]] std::size_t n_qubits() const noexcept {
        return letters_.size();
    }
    [[nodiscard]] Pauli at(std::size_t q) const { return letters_.at(q); }
    [[nodiscard]] const std::vector<Pauli> &letters() const noexcept {
        return letters_;
    }
    [[nodiscard]] bool is_identity() const;
    [[nodiscard]] std::string str() const;

    friend bool operator==(const PauliString &, const PauliString &) = default;

  private:
    std::vector<Pauli> letters_;
};

/// Ordered Kronecker product of the letters, qubit 0 leftmost.
CMatrix pauli_matrix(const PauliString &p);

/// Re tr(rho * obs). Throws on dimension mismatch, non-Hermitian obs
/// (residual > 1e-8), or an imaginary residue above kStateTol.
double expectation(const DensityMatrix &state, const CMatrix &obs);

/// <psi|obs|psi> for Hermitian obs.
double expectation(const StateVector &state, const CMatrix &obs);

struct StateDiagnostics {
    double trace_re = 0.0;
    double trace_im = 0.0;
    double hermiticity_residual = 0.0;
    double purity = 0.0;
    double min_eigenvalue = 0.0;
};

/// Trace, hermiticity residual, purity tr(rho^2), smallest eigenvalue.
StateDiagnostics purify_check(const DensityMatrix &state);

/// |<a|b>|^2
double fidelity(const StateVector &a, const StateVector &b);

} // namespace ahl
