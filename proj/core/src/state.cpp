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
#include "ahl/state.hpp"

#include <cmath>
#include <stdexcept>

namespace ahl {

void check_register_size(std::size_t n_qubits) {
    if (n_qubits == 0 || n_qubits > kMaxQubits) {
        throw std::invalid_argument("register size " +
                                    std::to_string(n_qubits) +
                                    " outside supported range [1, " +
                                    std::to_string(kMaxQubits) + "]");
    }
}

StateVector::StateVector(std::size_t n_qubits)
    : n_qubits_(n_qubits), amps_() {
    check_register_size(n_qubits);
    amps_.assign(std::size_t{1} << n_qubits, Complex{0.0, 0.0});
    amps_[0] = 1.0;
}

StateVector::StateVector(std::size_t n_qubits, std::vector<Complex> amplitudes)
    : n_qubits_(n_qubits), amps_(std::move(amplitudes)) {
    check_register_size(n_qubits);
    if (amps_.size() != (std::size_t{1} << n_qubits)) {
        throw std::invalid_argument("StateVector: expected 2^" +
                                    std::to_string(n_qubits) + " amplitudes");
    }
    if (std::abs(norm() - 1.0) > kStateTol) {
        throw std::invalid_argument("StateVector: amplitudes not normalized");
    }
}

StateVector StateVector::basis(std::size_t n_qubits, std::size_t index) {
    StateVector s(n_qubits);
    if (index >= s.dim()) {
        throw std::out_of_range("StateVector::basis: index out of range");
    }
    s.amps_[0] = 0.0;
    s.amps_[index] = 1.0;
    return s;
}

double StateVector::norm() const {
    double sum = 0.0;
    for (const auto &a : amps_) {
        sum += std::norm(a);
    }
    return std::sqrt(sum);
}

Complex StateVector::inner(const StateVector &other) const {
    if (other.dim() != dim()) {
        throw std::invalid_argument("inner: dimension mismatch");
    }
    Complex acc{0.0, 0.0};
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        acc += std::conj(amps_[i]) * other.amps_[i];
    }
    return acc;
}

DensityMatrix::DensityMatrix(std::size_t n_qubits)
    : n_qubits_(n_qubits), matrix_() {
    check_register_size(n_qubits);
    const std::size_t d = std::size_t{1} << n_qubits;
    matrix_ = CMatrix(d, d);
    matrix_(0, 0) = 1.0;
}

DensityMatrix::DensityMatrix(std::size_t n_qubits, CMatrix matrix)
    : n_qubits_(n_qubits), matrix_(std::move(matrix)) {
    check_register_size(n_qubits);
    const std::size_t d = std::size_t{1} << n_qubits;
    if (matrix_.rows() != d || matrix_.cols() != d) {
        throw std::invalid_argument("DensityMatrix: expected " +
                                    std::to_string(d) + "x" +
                                    std::to_string(d) + " matrix");
    }
    if (hermiticity_residual(matrix_) > kStateTol) {
        throw std::invalid_argument("DensityMatrix: matrix is not Hermitian");
    }
    if (std::abs(matrix_.trace() - Complex{1.0, 0.0}) > kStateTol) {
        throw std::invalid_argument("DensityMatrix: trace is not 1");
    }
}

DensityMatrix::DensityMatrix(std::size_t n_qubits, CMatrix matrix, bool)
    : n_qubits_(n_qubits), matrix_(std::move(matrix)) {}

DensityMatrix DensityMatrix::unchecked(std::size_t n_qubits, CMatrix matrix) {
    return DensityMatrix(n_qubits, std::move(matrix), true);
}

DensityMatrix DensityMatrix::from_pure(const StateVector &psi) {
    const std::size_t d = psi.dim();
    CMatrix m(d, d);
    const auto &a = psi.amplitudes();
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) {
            m(r, c) = a[r] * std::conj(a[c]);
        }
    }
    return DensityMatrix(psi.n_qubits(), std::move(m), true);
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t n_qubits) {
    check_register_size(n_qubits);
    const std::size_t d = std::size_t{1} << n_qubits;
    CMatrix m = CMatrix::identity(d);
    m *= Complex{1.0 / static_cast<double>(d), 0.0};
    return DensityMatrix(n_qubits, std::move(m), true);
}

CMatrix pauli_2x2(Pauli p) {
    switch (p) {
    case Pauli::I:
        return {{1.0, 0.0}, {0.0, 1.0}};
    case Pauli::X:
        return {{0.0, 1.0}, {1.0, 0.0}};
    case Pauli::Y:
        return {{0.0, -kI}, {kI, 0.0}};
    case Pauli::Z:
        return {{1.0, 0.0}, {0.0, -1.0}};
    }
    throw std::invalid_argument("pauli_2x2: unknown letter");
}

PauliString::PauliString(std::string_view letters) {
    if (letters.empty()) {
        throw std::invalid_argument("PauliString: empty word");
    }
    letters_.reserve(letters.size());
    for (char ch : letters) {
        switch (ch) {
        case 'I':
        case 'X':
        case 'Y':
        case 'Z':
            letters_.push_back(static_cast<Pauli>(ch));
            break;
        default:
            throw std::invalid_argument(std::string("PauliString: bad letter '") +
                                        ch + "'");
        }
    }
}

PauliString::PauliString(std::vector<Pauli> letters)
    : letters_(std::move(letters)) {
    if (letters_.empty()) {
        throw std::invalid_argument("PauliString: empty word");
    }
}

PauliString PauliString::single(std::size_t n_qubits, std::size_t qubit,
                                Pauli p) {
    if (qubit >= n_qubits) {
        throw std::out_of_range("PauliString::single: qubit out of range");
    }
    std::vector<Pauli> letters(n_qubits, Pauli::I);
    letters[qubit] = p;
    return PauliString(std::move(letters));
}

bool PauliString::is_identity() const {
    for (auto p : letters_) {
        if (p != Pauli::I) {
            return false;
        }
    }
    return true;
}

std::string PauliString::str() const {
    std::string s;
    s.reserve(letters_.size());
    for (auto p : letters_) {
        s.push_back(static_cast<char>(p));
    }
    return s;
}

CMatrix pauli_matrix(const PauliString &p) {
    CMatrix out = pauli_2x2(p.at(0));
    for (std::size_t q = 1; q < p.n_qubits(); ++q) {
        out = kron(out, pauli_2x2(p.at(q)));
    }
    return out;
}

double expectation(const DensityMatrix &state, const CMatrix &obs) {
    const CMatrix &rho = state.matrix();
    if (obs.rows() != rho.rows() || obs.cols() != rho.cols()) {
        throw std::invalid_argument("expectation: dimension mismatch");
    }
    if (hermiticity_residual(obs) > 1e-8) {
        throw std::invalid_argument("expectation: observable is not Hermitian");
    }
    // tr(rho obs) = sum_ij rho(i,j) obs(j,i)
    Complex acc{0.0, 0.0};
    const std::size_t d = rho.rows();
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            acc += rho(i, j) * obs(j, i);
        }
    }
    if (std::abs(acc.imag()) > kStateTol) {
        throw std::runtime_error("expectation: imaginary residue " +
                                 std::to_string(acc.imag()));
    }
    return acc.real();
}

double expectation(const StateVector &state, const CMatrix &obs) {
    if (obs.rows() != state.dim() || obs.cols() != state.dim()) {
        throw std::invalid_argument("expectation: dimension mismatch");
    }
    const auto &a = state.amplitudes();
    const auto ob = obs * std::span<const Complex>(a);
    Complex acc{0.0, 0.0};
    for (std::size_t i = 0; i < a.size(); ++i) {
        acc += std::conj(a[i]) * ob[i];
    }
    return acc.real();
}

StateDiagnostics purify_check(const DensityMatrix &state) {
    const CMatrix &rho = state.matrix();
    StateDiagnostics d;
    const Complex tr = rho.trace();
    d.trace_re = tr.real();
    d.trace_im = tr.imag();
    d.hermiticity_residual = hermiticity_residual(rho);
    d.purity = (rho * rho).trace().real();
    // Symmetrize before the eigensolve so tiny anti-Hermitian noise does not
    // trip the residual check.
    CMatrix sym = rho + rho.adjoint();
    sym *= Complex{0.5, 0.0};
    d.min_eigenvalue = eigvalsh(sym).front();
    return d;
}

double fidelity(const StateVector &a, const StateVector &b) {
    return std::norm(a.inner(b));
}

} // namespace ahl
