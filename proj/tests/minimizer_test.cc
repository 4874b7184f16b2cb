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

#include <chrono>
#include <cmath>
#include <random>

#include "gtest/gtest.h"
#include "qentro/entropy.h"
#include "test_util.h"

using namespace qentro;

namespace {

double minimizer_value(const DensityMatrix &rho, const UnitaryMinimizationReport &r) {
    return informational(evolve_unitary(rho, r.minimizer), r.base).value;
}

}  // namespace

TEST(minimizer, givens_rotation_is_unitary) {
    for (size_t dim : {2, 3, 5}) {
        for (double theta : {0.0, 0.3, 1.2}) {
            auto g = givens_rotation(dim, 0, dim - 1, theta, 0.7);
            EXPECT_TRUE(is_unitary(g, 1e-12));
        }
    }
    EXPECT_LE(max_abs_diff(givens_rotation(3, 0, 2, 0, 1.1), ComplexMatrix::identity(3)), 1e-15);
}

TEST(minimizer, example_matrix_reaches_eigen_entropy) {
    DensityMatrix rho(ComplexMatrix{{0.5, 0.25}, {0.25, 0.5}});
    auto r = min_informational_over_unitaries(rho);
    EXPECT_NEAR(r.min_value, 0.811, 5e-4);
    EXPECT_LE(std::abs(r.residual_vs_von_neumann), 1e-6);
    EXPECT_TRUE(is_unitary(r.minimizer, 1e-8));
    EXPECT_NEAR(minimizer_value(rho, r), r.min_value, 1e-9);
    // The rotated state is diagonal in the eigenbasis.
    auto rotated = evolve_unitary(rho, r.minimizer).matrix();
    EXPECT_LE(std::abs(rotated(0, 1)), 1e-3);
}

TEST(minimizer, diagonal_input_stays_diagonal) {
    DensityMatrix rho(ComplexMatrix::diagonal({0.6, 0.3, 0.1}));
    auto r = min_informational_over_unitaries(rho);
    EXPECT_NEAR(r.min_value, informational(rho).value, 1e-8);
    EXPECT_NEAR(r.min_value, von_neumann(rho).value, 1e-8);
    // Up to permutation and phases, every row of U has a single unit-modulus entry.
    for (size_t row = 0; row < 3; row++) {
        double largest = 0;
        for (size_t c = 0; c < 3; c++) {
            largest = std::max(largest, std::abs(r.minimizer(row, c)));
        }
        EXPECT_NEAR(largest, 1.0, 1e-4);
    }
}

TEST(minimizer, random_qubits_within_1e6) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 40; trial++) {
        DensityMatrix rho(oracle::random_density_matrix(2, rng));
        auto r = min_informational_over_unitaries(rho, LogBase::Bits, {.seed = uint64_t(trial)});
        EXPECT_LE(r.residual_vs_von_neumann, 1e-6);
        EXPECT_GE(r.residual_vs_von_neumann, -1e-9);
        EXPECT_TRUE(is_unitary(r.minimizer, 1e-8));
    }
}

TEST(minimizer, random_qutrits_and_ququarts_within_1e4) {
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 20; trial++) {
        size_t dim = 3 + trial % 2;
        DensityMatrix rho(oracle::random_density_matrix(dim, rng));
        auto r = min_informational_over_unitaries(rho, LogBase::Bits, {.seed = uint64_t(trial)});
        EXPECT_LE(r.residual_vs_von_neumann, 1e-4) << "dim " << dim << " trial " << trial;
        EXPECT_GE(r.residual_vs_von_neumann, -1e-9);
        EXPECT_NEAR(minimizer_value(rho, r), r.min_value, 1e-9);
    }
}

TEST(minimizer, nats_report_matches_bits_report) {
    std::mt19937_64 rng(33);
    DensityMatrix rho(oracle::random_density_matrix(3, rng));
    auto bits = min_informational_over_unitaries(rho, LogBase::Bits);
    auto nats = min_informational_over_unitaries(rho, LogBase::Nats);
    EXPECT_EQ(nats.base, LogBase::Nats);
    EXPECT_NEAR(nats.min_value, bits.min_value * std::log(2.0), 1e-5);
}

TEST(minimizer, small_budget_sets_flag) {
    std::mt19937_64 rng(34);
    DensityMatrix rho(oracle::random_density_matrix(4, rng));
    auto r = min_informational_over_unitaries(rho, LogBase::Bits, {.max_sweeps = 1, .starts = 1});
    EXPECT_TRUE(r.budget_exhausted);
    EXPECT_TRUE(is_unitary(r.minimizer, 1e-8));
    EXPECT_GE(r.min_value, r.von_neumann - 1e-9);
}

TEST(minimizer, seed_determinism) {
    std::mt19937_64 rng(35);
    DensityMatrix rho(oracle::random_density_matrix(3, rng));
    auto a = min_informational_over_unitaries(rho, LogBase::Bits, {.seed = 9});
    auto b = min_informational_over_unitaries(rho, LogBase::Bits, {.seed = 9});
    EXPECT_EQ(a.min_value, b.min_value);
    EXPECT_EQ(max_abs_diff(a.minimizer, b.minimizer), 0.0);
}

TEST(minimizer, pure_state_reaches_zero) {
    std::mt19937_64 rng(36);
    auto s = oracle::random_pure_state(3, rng);
    auto r = min_informational_over_unitaries(density_of_pure(s));
    EXPECT_LE(r.min_value, 1e-4);
}
