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

#ifndef QENTRO_TESTS_TEST_UTIL_H
#define QENTRO_TESTS_TEST_UTIL_H

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "qentro/numerics.h"
#include "qentro/states.h"

namespace qentro::oracle {

// Oracle generators, independent of the library's Givens and Jacobi code paths.

inline Complex gaussian_complex(std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    return {g(rng), g(rng)};
}

inline ComplexMatrix random_hermitian(size_t dim, std::mt19937_64 &rng) {
    ComplexMatrix m(dim);
    std::normal_distribution<double> g;
    for (size_t r = 0; r < dim; r++) {
        m(r, r) = g(rng);
        for (size_t c = r + 1; c < dim; c++) {
            Complex z = gaussian_complex(rng);
            m(r, c) = z;
            m(c, r) = std::conj(z);
        }
    }
    return m;
}

/// Haar-like unitary: Gram-Schmidt on the columns of a complex Gaussian matrix.
inline ComplexMatrix random_unitary(size_t dim, std::mt19937_64 &rng) {
    std::vector<ComplexVector> cols(dim, ComplexVector(dim));
    for (auto &col : cols) {
        for (auto &z : col) {
            z = gaussian_complex(rng);
        }
    }
    for (size_t k = 0; k < dim; k++) {
        for (size_t j = 0; j < k; j++) {
            Complex proj = 0;
            for (size_t r = 0; r < dim; r++) {
                proj += std::conj(cols[j][r]) * cols[k][r];
            }
            for (size_t r = 0; r < dim; r++) {
                cols[k][r] -= proj * cols[j][r];
            }
        }
        double n = 0;
        for (auto &z : cols[k]) {
            n += std::norm(z);
        }
        n = std::sqrt(n);
        for (auto &z : cols[k]) {
            z /= n;
        }
    }
    ComplexMatrix u(dim);
    for (size_t r = 0; r < dim; r++) {
        for (size_t c = 0; c < dim; c++) {
            u(r, c) = cols[c][r];
        }
    }
    return u;
}

/// G G^dagger / tr for a complex Gaussian G.
inline ComplexMatrix random_density_matrix(size_t dim, std::mt19937_64 &rng) {
    ComplexMatrix g(dim);
    for (size_t r = 0; r < dim; r++) {
        for (size_t c = 0; c < dim; c++) {
            g(r, c) = gaussian_complex(rng);
        }
    }
    ComplexMatrix rho(dim);
    double tr = 0;
    for (size_t r = 0; r < dim; r++) {
        for (size_t c = 0; c < dim; c++) {
            Complex acc = 0;
            for (size_t k = 0; k < dim; k++) {
                acc += g(r, k) * std::conj(g(c, k));
            }
            rho(r, c) = acc;
        }
        tr += rho(r, r).real();
    }
    for (size_t r = 0; r < dim; r++) {
        for (size_t c = 0; c < dim; c++) {
            rho(r, c) /= tr;
        }
        rho(r, r) = rho(r, r).real();
    }
    return rho;
}

inline PureState random_pure_state(size_t dim, std::mt19937_64 &rng) {
    ComplexVector v(dim);
    for (auto &z : v) {
        z = gaussian_complex(rng);
    }
    return PureState::normalized(std::move(v));
}

/// Closed-form eigenvalues of [[a, b], [conj(b), d]], ascending.
inline std::pair<double, double> eigenvalues_2x2(double a, Complex b, double d) {
    double mean = (a + d) / 2;
    double radius = std::sqrt(((a - d) / 2) * ((a - d) / 2) + std::norm(b));
    return {mean - radius, mean + radius};
}

/// Binomial standard deviation of an empirical rate over n draws.
inline double binomial_sigma(double p, double n) {
    return std::sqrt(p * (1 - p) / n);
}

/// Shannon entropy in bits from the raw formula, used as an oracle.
inline double entropy_bits(const std::vector<double> &p) {
    double h = 0;
    for (double x : p) {
        if (x > 0) {
            h -= x * std::log2(x);
        }
    }
    return h;
}

}  // namespace qentro::oracle

#endif
