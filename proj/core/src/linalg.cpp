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
#include "ahl/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ahl {

namespace {

void require_same_shape(const CMatrix &a, const CMatrix &b, const char *op) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument(std::string(op) + ": shape mismatch (" +
                                    std::to_string(a.rows()) + "x" +
                                    std::to_string(a.cols()) + " vs " +
                                    std::to_string(b.rows()) + "x" +
                                    std::to_string(b.cols()) + ")");
    }
}

double one_norm(const CMatrix &a) {
    double best = 0.0;
    for (std::size_t c = 0; c < a.cols(); ++c) {
        double col = 0.0;
        for (std::size_t r = 0; r < a.rows(); ++r) {
            col += std::abs(a(r, c));
        }
        best = std::max(best, col);
    }
    return best;
}

} // namespace

CMatrix::CMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Complex{0.0, 0.0}) {}

CMatrix::CMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) {
        throw std::invalid_argument("CMatrix: data length " +
                                    std::to_string(data_.size()) +
                                    " does not match " + std::to_string(rows) +
                                    "x" + std::to_string(cols));
    }
}

CMatrix::CMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto &row : rows) {
        if (row.size() != cols_) {
            throw std::invalid_argument("CMatrix: ragged initializer");
        }
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

CMatrix CMatrix::identity(std::size_t dim) {
    CMatrix m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

CMatrix CMatrix::adjoint() const {
    CMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

Complex CMatrix::trace() const {
    if (!is_square()) {
        throw std::invalid_argument("trace: matrix is not square");
    }
    Complex t{0.0, 0.0};
    for (std::size_t i = 0; i < rows_; ++i) {
        t += (*this)(i, i);
    }
    return t;
}

CMatrix &CMatrix::operator+=(const CMatrix &rhs) {
    require_same_shape(*this, rhs, "operator+");
    for (std::size_t i = 0; i < data_.size(); ++i) {
        data_[i] += rhs.data_[i];
    }
    return *this;
}

CMatrix &CMatrix::operator-=(const CMatrix &rhs) {
    require_same_shape(*this, rhs, "operator-");
    for (std::size_t i = 0; i < data_.size(); ++i) {
        data_[i] -= rhs.data_[i];
    }
    return *this;
}

CMatrix &CMatrix::operator*=(Complex scalar) {
    for (auto &z : data_) {
        z *= scalar;
    }
    return *this;
}

CMatrix operator+(CMatrix lhs, const CMatrix &rhs) { return lhs += rhs; }
CMatrix operator-(CMatrix lhs, const CMatrix &rhs) { return lhs -= rhs; }
CMatrix operator*(Complex scalar, CMatrix m) { return m *= scalar; }
CMatrix operator*(CMatrix m, Complex scalar) { return m *= scalar; }

CMatrix operator*(const CMatrix &lhs, const CMatrix &rhs) {
    if (lhs.cols() != rhs.rows()) {
        throw std::invalid_argument("operator*: inner dimensions differ (" +
                                    std::to_string(lhs.cols()) + " vs " +
                                    std::to_string(rhs.rows()) + ")");
    }
    CMatrix out(lhs.rows(), rhs.cols());
    for (std::size_t i = 0; i < lhs.rows(); ++i) {
        for (std::size_t k = 0; k < lhs.cols(); ++k) {
            const Complex a = lhs(i, k);
            if (a == Complex{0.0, 0.0}) {
                continue;
            }
            for (std::size_t j = 0; j < rhs.cols(); ++j) {
                out(i, j) += a * rhs(k, j);
            }
        }
    }
    return out;
}

std::vector<Complex> operator*(const CMatrix &m, std::span<const Complex> v) {
    if (m.cols() != v.size()) {
        throw std::invalid_argument("matrix-vector: dimension mismatch");
    }
    std::vector<Complex> out(m.rows(), Complex{0.0, 0.0});
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            out[i] += m(i, j) * v[j];
        }
    }
    return out;
}

CMatrix kron(const CMatrix &a, const CMatrix &b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Complex aij = a(i, j);
            for (std::size_t k = 0; k < b.rows(); ++k) {
                for (std::size_t l = 0; l < b.cols(); ++l) {
                    out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
                }
            }
        }
    }
    return out;
}

double max_abs_diff(const CMatrix &a, const CMatrix &b) {
    require_same_shape(a, b, "max_abs_diff");
    double worst = 0.0;
    const auto da = a.data();
    const auto db = b.data();
    for (std::size_t i = 0; i < da.size(); ++i) {
        worst = std::max(worst, std::abs(da[i] - db[i]));
    }
    return worst;
}

double hermiticity_residual(const CMatrix &m) {
    if (!m.is_square()) {
        throw std::invalid_argument("hermiticity_residual: not square");
    }
    double worst = 0.0;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = r; c < m.cols(); ++c) {
            worst = std::max(worst, std::abs(m(r, c) - std::conj(m(c, r))));
        }
    }
    return worst;
}

double unitarity_residual(const CMatrix &u) {
    return max_abs_diff(u.adjoint() * u, CMatrix::identity(u.rows()));
}

CMatrix expm(const CMatrix &a) {
    if (!a.is_square()) {
        throw std::invalid_argument("expm: matrix is not square");
    }
    const double norm = one_norm(a);
    if (!std::isfinite(norm)) {
        throw std::domain_error("expm: non-finite entries");
    }
    // Scale so the Taylor series converges fast, then square back up.
    int squarings = 0;
    if (norm > 0.5) {
        squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
    }
    CMatrix scaled = a * Complex{std::ldexp(1.0, -squarings), 0.0};

    const std::size_t n = a.rows();
    CMatrix result = CMatrix::identity(n);
    CMatrix term = CMatrix::identity(n);
    for (int k = 1; k <= 40; ++k) {
        term = term * scaled;
        term *= Complex{1.0 / k, 0.0};
        result += term;
        if (one_norm(term) < 1e-18 * std::max(1.0, one_norm(result))) {
            break;
        }
    }
    for (int s = 0; s < squarings; ++s) {
        result = result * result;
    }
    return result;
}

EigenDecomposition eigh(const CMatrix &a, double residual_tol) {
    if (!a.is_square()) {
        throw std::invalid_argument("eigh: matrix is not square");
    }
    const std::size_t n = a.rows();
    CMatrix m = a;
    CMatrix v = CMatrix::identity(n);

    double scale = 0.0;
    for (const auto &z : m.data()) {
        scale = std::max(scale, std::abs(z));
    }
    if (hermiticity_residual(a) > 1e-10 * std::max(1.0, scale)) {
        throw std::invalid_argument("eigh: matrix is not Hermitian");
    }
    const double eps = 1e-15 * std::max(scale, 1e-300);

    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                off = std::max(off, std::abs(m(p, q)));
            }
        }
        if (off <= eps) {
            break;
        }
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex bpq = m(p, q);
                const double mag = std::abs(bpq);
                if (mag <= eps) {
                    continue;
                }
                const Complex phase = bpq / mag; // e^{i phi}
                const double theta =
                    0.5 * std::atan2(2.0 * mag, m(p, p).real() - m(q, q).real());
                const double c = std::cos(theta);
                const double s = std::sin(theta);
                const Complex sp = s * std::conj(phase);
                const Complex cp = c * std::conj(phase);

                // columns: A <- A W
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex akp = m(k, p);
                    const Complex akq = m(k, q);
                    m(k, p) = c * akp + sp * akq;
                    m(k, q) = -s * akp + cp * akq;
                    const Complex vkp = v(k, p);
                    const Complex vkq = v(k, q);
                    v(k, p) = c * vkp + sp * vkq;
                    v(k, q) = -s * vkp + cp * vkq;
                }
                // rows: A <- W^dagger A
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex apk = m(p, k);
                    const Complex aqk = m(q, k);
                    m(p, k) = c * apk + std::conj(sp) * aqk;
                    m(q, k) = -s * apk + std::conj(cp) * aqk;
                }
                m(p, q) = 0.0;
                m(q, p) = 0.0;
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return m(x, x).real() < m(y, y).real();
    });

    EigenDecomposition out;
    out.values.reserve(n);
    out.vectors = CMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        out.values.push_back(m(order[k], order[k]).real());
        for (std::size_t r = 0; r < n; ++r) {
            out.vectors(r, k) = v(r, order[k]);
        }
    }

    for (std::size_t k = 0; k < n; ++k) {
        double residual = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
            Complex av{0.0, 0.0};
            for (std::size_t c = 0; c < n; ++c) {
                av += a(r, c) * out.vectors(c, k);
            }
            residual = std::max(
                residual, std::abs(av - out.values[k] * out.vectors(r, k)));
        }
        if (residual > residual_tol * std::max(1.0, scale)) {
            throw std::runtime_error("eigh: residual " +
                                     std::to_string(residual) +
                                     " exceeds tolerance");
        }
    }
    return out;
}

std::vector<double> eigvalsh(const CMatrix &a) { return eigh(a).values; }

} // namespace ahl
