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
 * @file linalg.hpp
 * Dense complex matrices and the handful of decompositions the simulator
 * needs (matrix exponential, Hermitian eigensolve).
 */
#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace ahl {

using Complex = std::complex<double>;

inline constexpr Complex kI{0.0, 1.0};

/// Row-major dense complex matrix.
class CMatrix {
  public:
    CMatrix() = default;
    CMatrix(std::size_t rows, std::size_t cols);
    CMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> data);
    CMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static CMatrix identity(std::size_t dim);
    static CMatrix zeros(std::size_t rows, std::size_t cols) {
        return CMatrix(rows, cols);
    }

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] bool is_square() const noexcept { return rows_ == cols_; }

    Complex &operator()(std::size_t r, std::size_t c) {
        return data_[r * cols_ + c];
    }
    const Complex &operator()(std::size_t r, std::size_t c) const {
        return data_[r * cols_ + c];
    }

    [[nodiscard]] std::span<Complex> data() noexcept { return data_; }
    [[nodiscard]] std::span<const Complex> data() const noexcept {
        return data_;
    }

    [[nodiscard]] CMatrix adjoint() const;
    [[nodiscard]] Complex trace() const;

    CMatrix &operator+=(const CMatrix &rhs);
    CMatrix &operator-=(const CMatrix &rhs);
    CMatrix &operator*=(Complex scalar);

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

CMatrix operator+(CMatrix lhs, const CMatrix &rhs);
CMatrix operator-(CMatrix lhs, const CMatrix &rhs);
CMatrix operator*(const CMatrix &lhs, const CMatrix &rhs);
CMatrix operator*(Complex scalar, CMatrix m);
CMatrix operator*(CMatrix m, Complex scalar);

/// Matrix-vector product.
std::vector<Complex> operator*(const CMatrix &m, std::span<const Complex> v);

/// Kronecker product; entry (i*b.rows+k, j*b.cols+l) = a(i,j) * b(k,l).
CMatrix kron(const CMatrix &a, const CMatrix &b);

/// Largest entrywise modulus of a - b. Shapes must agree.
double max_abs_diff(const CMatrix &a, const CMatrix &b);

/// max |M - M^dagger|.
double hermiticity_residual(const CMatrix &m);

/// max |U^dagger U - I|.
double unitarity_residual(const CMatrix &u);

/// exp(A) by scaling and squaring with a Taylor core.
CMatrix expm(const CMatrix &a);

struct EigenDecomposition {
    std::vector<double> values; // ascending
    CMatrix vectors;            // column k pairs with values[k]
};

/**
 * Eigen-decomposition of a Hermitian matrix by cyclic complex Jacobi
 * rotations. Throws std::invalid_argument for a non-Hermitian input and
 * std::runtime_error if any eigenpair residual |A v - lambda v| exceeds
 * `residual_tol` after convergence.
 */
EigenDecomposition eigh(const CMatrix &a, double residual_tol = 1e-8);

/// Ascending eigenvalues of a Hermitian matrix.
std::vector<double> eigvalsh(const CMatrix &a);

} // namespace ahl
