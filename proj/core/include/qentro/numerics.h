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

#ifndef QENTRO_NUMERICS_H
#define QENTRO_NUMERICS_H

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace qentro {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

inline constexpr double kDefaultTolerance = 1e-10;

/// Dense square complex matrix stored row-major. Entries are always finite.
class ComplexMatrix {
   public:
    /// 1x1 zero matrix.
    ComplexMatrix() : ComplexMatrix(1) {
    }
    /// dim x dim zero matrix. Throws InvalidArgument for dim == 0.
    explicit ComplexMatrix(size_t dim);
    /// Throws DimensionMismatch unless the rows form a square, NonFinite on NaN/Inf.
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);
    static ComplexMatrix from_rows(const std::vector<std::vector<Complex>> &rows);
    static ComplexMatrix identity(size_t dim);
    static ComplexMatrix diagonal(std::span<const double> values);
    static ComplexMatrix diagonal(std::initializer_list<double> values);
    /// |a><b|
    static ComplexMatrix outer(std::span<const Complex> a, std::span<const Complex> b);

    size_t dim() const noexcept {
        return dim_;
    }
    Complex &operator()(size_t row, size_t col) {
        return data_[row * dim_ + col];
    }
    const Complex &operator()(size_t row, size_t col) const {
        return data_[row * dim_ + col];
    }
    std::span<const Complex> data() const noexcept {
        return data_;
    }

    Complex trace() const;
    std::vector<double> real_diagonal() const;

    ComplexMatrix &operator+=(const ComplexMatrix &other);
    ComplexMatrix &operator-=(const ComplexMatrix &other);
    ComplexMatrix &operator*=(Complex scale);

   private:
    size_t dim_;
    std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b);
ComplexMatrix operator*(Complex scale, ComplexMatrix a);
ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b);

/// Standard product. Throws DimensionMismatch.
ComplexMatrix multiply(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix conjugate_transpose(const ComplexMatrix &a);
/// Matrix-vector product. Throws DimensionMismatch.
ComplexVector apply(const ComplexMatrix &m, std::span<const Complex> v);

/// <a|b>, conjugating the left argument.
Complex inner(std::span<const Complex> a, std::span<const Complex> b);
double norm(std::span<const Complex> v);

/// Largest entrywise modulus of a - b. Throws DimensionMismatch.
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);
bool approx_equal(const ComplexMatrix &a, const ComplexMatrix &b, double tol);

bool is_hermitian(const ComplexMatrix &a, double tol = kDefaultTolerance);
/// True iff every entry of a^dagger a - I has modulus <= tol.
bool is_unitary(const ComplexMatrix &a, double tol = kDefaultTolerance);

struct EigenDecomposition {
    /// Ascending.
    std::vector<double> eigenvalues;
    /// Column k is the unit eigenvector for eigenvalues[k]; its first non-negligible
    /// component is real and positive.
    ComplexMatrix eigenvectors;

    /// V diag(lambda) V^dagger
    ComplexMatrix reconstruct() const;
};

/// Cyclic complex Jacobi eigensolver for Hermitian matrices.
///
/// Throws NotHermitian when some |m - m^dagger| entry exceeds `tol`, and
/// NoConvergence if the off-diagonal mass has not vanished after the sweep limit.
/// The input is symmetrized before iterating.
EigenDecomposition hermitian_eigen(const ComplexMatrix &m, double tol = kDefaultTolerance);

}  // namespace qentro

#endif
