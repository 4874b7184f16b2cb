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

#include <cmath>
#include <random>

#include "gtest/gtest.h"
#include "qentro/error.h"
#include "qentro/protocol.h"
#include "test_util.h"

using namespace qentro;

namespace {

const Complex I(0, 1);

ComplexMatrix pauli_x() {
    return ComplexMatrix{{0, 1}, {1, 0}};
}

void expect_decomposition_valid(const ComplexMatrix &m, const EigenDecomposition &eig, double tol) {
    size_t n = m.dim();
    EXPECT_LE(max_abs_diff(eig.reconstruct(), m), tol);
    auto vdv = multiply(conjugate_transpose(eig.eigenvectors), eig.eigenvectors);
    EXPECT_LE(max_abs_diff(vdv, ComplexMatrix::identity(n)), tol);
    for (size_t k = 1; k < n; k++) {
        EXPECT_LE(eig.eigenvalues[k - 1], eig.eigenvalues[k]);
    }
}

}  // namespace

TEST(numerics, constructor_rejects_bad_shapes) {
    EXPECT_THROW((ComplexMatrix{{1, 2}, {3}}), Error);
    EXPECT_THROW(ComplexMatrix(0), Error);
    try {
        ComplexMatrix{{std::nan(""), 0}, {0, 1}};
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::NonFinite);
    }
}

TEST(numerics, multiply_examples) {
    ComplexMatrix a{{1, 2.0 + I}, {-I, 3}};
    EXPECT_TRUE(approx_equal(multiply(ComplexMatrix::identity(2), a), a, 0));
    ComplexMatrix d = ComplexMatrix::diagonal({2, 4});
    ComplexMatrix d_inv = ComplexMatrix::diagonal({0.5, 0.25});
    EXPECT_TRUE(approx_equal(multiply(d, d_inv), ComplexMatrix::identity(2), 0));
    EXPECT_TRUE(approx_equal(multiply(pauli_x(), pauli_x()), ComplexMatrix::identity(2), 0));
}

TEST(numerics, multiply_dimension_mismatch) {
    try {
        multiply(ComplexMatrix::identity(2), ComplexMatrix::identity(3));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::DimensionMismatch);
    }
}

TEST(numerics, multiply_is_associative) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; trial++) {
        size_t dim = 1 + trial % 4;
        auto a = oracle::random_hermitian(dim, rng);
        auto b = oracle::random_unitary(dim, rng);
        auto c = oracle::random_hermitian(dim, rng);
        EXPECT_LE(max_abs_diff(multiply(multiply(a, b), c), multiply(a, multiply(b, c))), 1e-12);
    }
}

TEST(numerics, conjugate_transpose_examples) {
    ComplexMatrix sym{{1, 2}, {2, 5}};
    EXPECT_TRUE(approx_equal(conjugate_transpose(sym), sym, 0));
    ComplexMatrix upper{{0, I}, {0, 0}};
    ComplexMatrix expected{{0, 0}, {-I, 0}};
    EXPECT_TRUE(approx_equal(conjugate_transpose(upper), expected, 0));
    ComplexMatrix a{{1.0 + 2.0 * I, -3}, {I, 0.5}};
    EXPECT_TRUE(approx_equal(conjugate_transpose(conjugate_transpose(a)), a, 0));
}

TEST(numerics, is_unitary_examples) {
    EXPECT_TRUE(is_unitary(ComplexMatrix::identity(3), 1e-12));
    auto g_plus = protocol::g_plus_transform(M_PI / 6);
    EXPECT_TRUE(is_unitary(g_plus, 1e-12));
    EXPECT_TRUE(is_hermitian(g_plus, 1e-15));
    EXPECT_FALSE(is_unitary(ComplexMatrix::diagonal({1, 2}), 1e-6));
}

TEST(numerics, eigen_examples) {
    auto diag = hermitian_eigen(ComplexMatrix::diagonal({0.75, 0.25}));
    EXPECT_DOUBLE_EQ(diag.eigenvalues[0], 0.25);
    EXPECT_DOUBLE_EQ(diag.eigenvalues[1], 0.75);

    ComplexMatrix m{{0.5, 0.25}, {0.25, 0.5}};
    auto [lo, hi] = oracle::eigenvalues_2x2(0.5, 0.25, 0.5);
    auto eig = hermitian_eigen(m);
    EXPECT_NEAR(eig.eigenvalues[0], lo, 1e-12);
    EXPECT_NEAR(eig.eigenvalues[1], hi, 1e-12);
    EXPECT_NEAR(lo, 0.25, 1e-15);
    EXPECT_NEAR(hi, 0.75, 1e-15);
    expect_decomposition_valid(m, eig, 1e-12);

    auto half = hermitian_eigen(ComplexMatrix::diagonal({0.5, 0.5}));
    EXPECT_DOUBLE_EQ(half.eigenvalues[0], 0.5);
    EXPECT_DOUBLE_EQ(half.eigenvalues[1], 0.5);
}

TEST(numerics, eigen_rejects_non_hermitian) {
    try {
        hermitian_eigen(ComplexMatrix{{1, 1}, {0, 1}}, 1e-10);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::NotHermitian);
    }
    // Within tolerance is accepted.
    EXPECT_NO_THROW(hermitian_eigen(ComplexMatrix{{1, 1e-12}, {0, 1}}, 1e-10));
}

TEST(numerics, eigenvector_phase_convention) {
    ComplexMatrix m{{1, I}, {-I, 1}};
    auto eig = hermitian_eigen(m);
    for (size_t k = 0; k < 2; k++) {
        Complex first = eig.eigenvectors(0, k);
        EXPECT_GT(first.real(), 0);
        EXPECT_NEAR(first.imag(), 0, 1e-15);
    }
}

TEST(numerics, random_hermitian_property) {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 1000; trial++) {
        size_t dim = 2 + trial % 3;
        auto m = oracle::random_hermitian(dim, rng);
        auto eig = hermitian_eigen(m);
        expect_decomposition_valid(m, eig, 1e-9);
        double sum = 0;
        for (double v : eig.eigenvalues) {
            sum += v;
        }
        EXPECT_NEAR(m.trace().real(), sum, 1e-10);
        if (dim == 2) {
            auto [lo, hi] = oracle::eigenvalues_2x2(m(0, 0).real(), m(0, 1), m(1, 1).real());
            EXPECT_NEAR(eig.eigenvalues[0], lo, 1e-12);
            EXPECT_NEAR(eig.eigenvalues[1], hi, 1e-12);
        }
    }
}

TEST(numerics, eigen_handles_larger_and_degenerate_inputs) {
    std::mt19937_64 rng(5);
    for (size_t dim : {5, 8, 16}) {
        auto m = oracle::random_hermitian(dim, rng);
        expect_decomposition_valid(m, hermitian_eigen(m), 1e-9);
    }
    // U diag(1, 1, 2, 2) U^dagger has two doubly degenerate eigenvalues.
    auto u = oracle::random_unitary(4, rng);
    auto m = multiply(multiply(u, ComplexMatrix::diagonal({1, 1, 2, 2})), conjugate_transpose(u));
    auto eig = hermitian_eigen(m, 1e-9);
    EXPECT_NEAR(eig.eigenvalues[0], 1, 1e-12);
    EXPECT_NEAR(eig.eigenvalues[1], 1, 1e-12);
    EXPECT_NEAR(eig.eigenvalues[2], 2, 1e-12);
    EXPECT_NEAR(eig.eigenvalues[3], 2, 1e-12);
}
