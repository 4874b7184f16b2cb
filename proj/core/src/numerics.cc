// Copyright 2026 The Qentro Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qentro/numerics.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qentro/error.h"

namespace qentro {

namespace {

void require_finite(Complex z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw Error(ErrorCode::NonFinite, "matrix entries must be finite");
    }
}

void require_same_dim(size_t a, size_t b, const char *what) {
    if (a != b) {
        throw Error(
            ErrorCode::DimensionMismatch,
            std::string(what) + ": dimension " + std::to_string(a) + " vs " + std::to_string(b));
    }
}

double off_diagonal_norm(const ComplexMatrix &a) {
    double sum = 0;
    for (size_t r = 0; r < a.dim(); r++) {
        for (size_t c = 0; c < a.dim(); c++) {
            if (r != c) {
                sum += std::norm(a(r, c));
            }
        }
    }
    return std::sqrt(sum);
}

double frobenius_norm(const ComplexMatrix &a) {
    double sum = 0;
    for (const auto &z : a.data()) {
        sum += std::norm(z);
    }
    return std::sqrt(sum);
}

constexpr int kMaxJacobiSweeps = 64;

}  // namespace

ComplexMatrix::ComplexMatrix(size_t dim) : dim_(dim), data_(dim * dim) {
    if (dim == 0) {
        throw Error(ErrorCode::InvalidArgument, "matrix dimension must be at least 1");
    }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : ComplexMatrix(std::max<size_t>(rows.size(), 1)) {
    if (rows.size() == 0) {
        throw Error(ErrorCode::DimensionMismatch, "matrix needs at least one row");
    }
    size_t r = 0;
    for (const auto &row : rows) {
        require_same_dim(row.size(), dim_, "matrix row length");
        size_t c = 0;
        for (const auto &z : row) {
            require_finite(z);
            (*this)(r, c++) = z;
        }
        r++;
    }
}

ComplexMatrix ComplexMatrix::from_rows(const std::vector<std::vector<Complex>> &rows) {
    if (rows.empty()) {
        throw Error(ErrorCode::DimensionMismatch, "matrix needs at least one row");
    }
    ComplexMatrix m(rows.size());
    for (size_t r = 0; r < rows.size(); r++) {
        require_same_dim(rows[r].size(), rows.size(), "matrix row length");
        for (size_t c = 0; c < rows.size(); c++) {
            require_finite(rows[r][c]);
            m(r, c) = rows[r][c];
        }
    }
    return m;
}

ComplexMatrix ComplexMatrix::identity(size_t dim) {
    ComplexMatrix m(dim);
    for (size_t k = 0; k < dim; k++) {
        m(k, k) = 1;
    }
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
    ComplexMatrix m(values.size());
    for (size_t k = 0; k < values.size(); k++) {
        require_finite(values[k]);
        m(k, k) = values[k];
    }
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::initializer_list<double> values) {
    return diagonal(std::span<const double>(values.begin(), values.size()));
}

ComplexMatrix ComplexMatrix::outer(std::span<const Complex> a, std::span<const Complex> b) {
    require_same_dim(a.size(), b.size(), "outer product");
    ComplexMatrix m(a.size());
    for (size_t r = 0; r < a.size(); r++) {
        for (size_t c = 0; c < b.size(); c++) {
            m(r, c) = a[r] * std::conj(b[c]);
        }
    }
    return m;
}

Complex ComplexMatrix::trace() const {
    Complex t = 0;
    for (size_t k = 0; k < dim_; k++) {
        t += (*this)(k, k);
    }
    return t;
}

std::vector<double> ComplexMatrix::real_diagonal() const {
    std::vector<double> d(dim_);
    for (size_t k = 0; k < dim_; k++) {
        d[k] = (*this)(k, k).real();
    }
    return d;
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &other) {
    require_same_dim(dim_, other.dim_, "matrix sum");
    for (size_t k = 0; k < data_.size(); k++) {
        data_[k] += other.data_[k];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &other) {
    require_same_dim(dim_, other.dim_, "matrix difference");
    for (size_t k = 0; k < data_.size(); k++) {
        data_[k] -= other.data_[k];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(Complex scale) {
    for (auto &z : data_) {
        z *= scale;
    }
    return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b) {
    a += b;
    return a;
}

ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b) {
    a -= b;
    return a;
}

ComplexMatrix operator*(Complex scale, ComplexMatrix a) {
    a *= scale;
    return a;
}

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
    return multiply(a, b);
}

ComplexMatrix multiply(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a.dim(), b.dim(), "matrix product");
    size_t n = a.dim();
    ComplexMatrix out(n);
    for (size_t r = 0; r < n; r++) {
        for (size_t k = 0; k < n; k++) {
            Complex ark = a(r, k);
            if (ark == Complex{0, 0}) {
                continue;
            }
            for (size_t c = 0; c < n; c++) {
                out(r, c) += ark * b(k, c);
            }
        }
    }
    return out;
}

ComplexMatrix conjugate_transpose(const ComplexMatrix &a) {
    ComplexMatrix out(a.dim());
    for (size_t r = 0; r < a.dim(); r++) {
        for (size_t c = 0; c < a.dim(); c++) {
            out(c, r) = std::conj(a(r, c));
        }
    }
    return out;
}

ComplexVector apply(const ComplexMatrix &m, std::span<const Complex> v) {
    require_same_dim(m.dim(), v.size(), "matrix-vector product");
    ComplexVector out(v.size());
    for (size_t r = 0; r < m.dim(); r++) {
        Complex acc = 0;
        for (size_t c = 0; c < m.dim(); c++) {
            acc += m(r, c) * v[c];
        }
        out[r] = acc;
    }
    return out;
}

Complex inner(std::span<const Complex> a, std::span<const Complex> b) {
    require_same_dim(a.size(), b.size(), "inner product");
    Complex acc = 0;
    for (size_t k = 0; k < a.size(); k++) {
        acc += std::conj(a[k]) * b[k];
    }
    return acc;
}

double norm(std::span<const Complex> v) {
    double acc = 0;
    for (const auto &z : v) {
        acc += std::norm(z);
    }
    return std::sqrt(acc);
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a.dim(), b.dim(), "matrix comparison");
    double worst = 0;
    for (size_t k = 0; k < a.data().size(); k++) {
        worst = std::max(worst, std::abs(a.data()[k] - b.data()[k]));
    }
    return worst;
}

bool approx_equal(const ComplexMatrix &a, const ComplexMatrix &b, double tol) {
    return a.dim() == b.dim() && max_abs_diff(a, b) <= tol;
}

bool is_hermitian(const ComplexMatrix &a, double tol) {
    return max_abs_diff(a, conjugate_transpose(a)) <= tol;
}

bool is_unitary(const ComplexMatrix &a, double tol) {
    return max_abs_diff(multiply(conjugate_transpose(a), a), ComplexMatrix::identity(a.dim())) <= tol;
}

ComplexMatrix EigenDecomposition::reconstruct() const {
    size_t n = eigenvectors.dim();
    ComplexMatrix out(n);
    for (size_t r = 0; r < n; r++) {
        for (size_t c = 0; c < n; c++) {
            Complex acc = 0;
            for (size_t k = 0; k < n; k++) {
                acc += eigenvectors(r, k) * eigenvalues[k] * std::conj(eigenvectors(c, k));
            }
            out(r, c) = acc;
        }
    }
    return out;
}

EigenDecomposition hermitian_eigen(const ComplexMatrix &m, double tol) {
    double asym = max_abs_diff(m, conjugate_transpose(m));
    if (asym > tol) {
        throw Error(
            ErrorCode::NotHermitian, "max |m - m^dagger| entry is " + std::to_string(asym) +
                                         ", tolerance " + std::to_string(tol));
    }
    size_t n = m.dim();
    ComplexMatrix a = m;
    for (size_t r = 0; r < n; r++) {
        a(r, r) = a(r, r).real();
        for (size_t c = r + 1; c < n; c++) {
            Complex avg = 0.5 * (a(r, c) + std::conj(a(c, r)));
            a(r, c) = avg;
            a(c, r) = std::conj(avg);
        }
    }
    ComplexMatrix v = ComplexMatrix::identity(n);

    double scale = frobenius_norm(a);
    bool converged = n == 1 || scale == 0;
    for (int sweep = 0; sweep < kMaxJacobiSweeps && !converged; sweep++) {
        for (size_t p = 0; p + 1 < n; p++) {
            for (size_t q = p + 1; q < n; q++) {
                double r = std::abs(a(p, q));
                if (r == 0) {
                    continue;
                }
                // Phase-align the pivot to a real value, then apply a real rotation.
                Complex phase = std::conj(a(p, q)) / r;  // e^{-i arg a_pq}
                double app = a(p, p).real();
                double aqq = a(q, q).real();
                double tau = (aqq - app) / (2 * r);
                double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(tau * tau + 1));
                double c = 1 / std::sqrt(t * t + 1);
                double s = t * c;
                // J = [[c, s], [-s phase, c phase]] on the (p, q) plane.
                Complex jqp = -s * phase;
                Complex jqq = c * phase;
                for (size_t k = 0; k < n; k++) {
                    Complex akp = a(k, p);
                    Complex akq = a(k, q);
                    a(k, p) = akp * c + akq * jqp;
                    a(k, q) = akp * s + akq * jqq;
                    Complex vkp = v(k, p);
                    Complex vkq = v(k, q);
                    v(k, p) = vkp * c + vkq * jqp;
                    v(k, q) = vkp * s + vkq * jqq;
                }
                for (size_t k = 0; k < n; k++) {
                    Complex apk = a(p, k);
                    Complex aqk = a(q, k);
                    a(p, k) = c * apk + std::conj(jqp) * aqk;
                    a(q, k) = s * apk + std::conj(jqq) * aqk;
                }
                a(p, q) = 0;
                a(q, p) = 0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
            }
        }
        converged = off_diagonal_norm(a) <= 1e-15 * scale;
    }
    if (!converged) {
        throw Error(ErrorCode::NoConvergence, "Jacobi sweep limit reached");
    }

    std::vector<size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](size_t x, size_t y) {
        return a(x, x).real() < a(y, y).real();
    });

    EigenDecomposition out{std::vector<double>(n), ComplexMatrix(n)};
    for (size_t k = 0; k < n; k++) {
        size_t src = order[k];
        out.eigenvalues[k] = a(src, src).real();
        Complex fix = 1;
        for (size_t r = 0; r < n; r++) {
            double mag = std::abs(v(r, src));
            if (mag > 1e-12) {
                fix = std::conj(v(r, src)) / mag;
                break;
            }
        }
        for (size_t r = 0; r < n; r++) {
            out.eigenvectors(r, k) = v(r, src) * fix;
        }
    }
    return out;
}

}  // namespace qentro
