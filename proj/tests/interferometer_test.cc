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

#include "qentro/interferometer.h"

#include <cmath>
#include <numbers>

#include "gtest/gtest.h"
#include "qentro/error.h"
#include "test_util.h"

using namespace qentro;

namespace {

template <typename F>
ErrorCode code_of(F f) {
    try {
        f();
    } catch (const Error &e) {
        return e.code();
    }
    return ErrorCode::InvalidArgument;
}

/// Path amplitudes through two symmetric 50/50 splitters. Arm 0 carries mirror C; the
/// springy mirror acts as a which-path detector on that arm.
OutcomeDistribution beam_splitter_oracle(bool springy) {
    const double s = 1 / std::numbers::sqrt2;
    ComplexMatrix bs{{s, Complex(0, s)}, {Complex(0, s), s}};
    ComplexVector input{1, 0};
    ComplexVector arms = qentro::apply(bs, input);
    if (!springy) {
        ComplexVector out = qentro::apply(bs, arms);
        // Label detectors so the rigid arrangement lands on D1.
        return {0, std::norm(out[1]), std::norm(out[0])};
    }
    double absorbed = std::norm(arms[0]);
    ComplexVector out = qentro::apply(bs, ComplexVector{0, arms[1]});
    return {absorbed, std::norm(out[1]), std::norm(out[0])};
}

void expect_distribution(const OutcomeDistribution &d, double a, double d1, double d2) {
    EXPECT_NEAR(d.p_absorbed, a, 1e-15);
    EXPECT_NEAR(d.p_d1, d1, 1e-15);
    EXPECT_NEAR(d.p_d2, d2, 1e-15);
}

}  // namespace

TEST(interferometer, distributions_examples) {
    expect_distribution(outcome_distribution(MirrorModel::rigid()), 0, 1, 0);
    expect_distribution(outcome_distribution(MirrorModel::springy()), 0.5, 0.25, 0.25);
    expect_distribution(outcome_distribution(MirrorModel::unknown(0.5)), 0.25, 0.625, 0.125);
}

TEST(interferometer, distributions_match_beam_splitter_amplitudes) {
    for (bool springy : {false, true}) {
        auto oracle = beam_splitter_oracle(springy);
        auto d = outcome_distribution(springy ? MirrorModel::springy() : MirrorModel::rigid());
        EXPECT_NEAR(d.p_absorbed, oracle.p_absorbed, 1e-15);
        EXPECT_NEAR(d.p_d1, oracle.p_d1, 1e-15);
        EXPECT_NEAR(d.p_d2, oracle.p_d2, 1e-15);
    }
}

TEST(interferometer, unknown_mixture_is_linear) {
    for (double q = 0; q <= 1.0; q += 0.125) {
        auto d = outcome_distribution(MirrorModel::unknown(q));
        EXPECT_NEAR(d.p_absorbed + d.p_d1 + d.p_d2, 1.0, 1e-12);
        EXPECT_NEAR(d.p_absorbed, q * 0.5, 1e-15);
        EXPECT_NEAR(d.p_d1, q * 0.25 + (1 - q), 1e-15);
        EXPECT_NEAR(d.probability(MziOutcome::D2), q * 0.25, 1e-15);
    }
    EXPECT_EQ(code_of([] { MirrorModel::unknown(1.5); }), ErrorCode::InvalidArgument);
}

TEST(interferometer, entropy_examples) {
    auto rigid = arrangement_entropy(MirrorModel::rigid());
    EXPECT_EQ(rigid.value, 0.0);
    EXPECT_FALSE(std::signbit(rigid.value));
    EXPECT_DOUBLE_EQ(arrangement_entropy(MirrorModel::springy()).value, 1.5);
    double unknown = arrangement_entropy(MirrorModel::unknown(0.5)).value;
    EXPECT_NEAR(unknown, oracle::entropy_bits({0.25, 0.625, 0.125}), 1e-14);
    EXPECT_NEAR(unknown, 1.299, 5e-4);
    EXPECT_NEAR(arrangement_entropy(MirrorModel::springy(), LogBase::Nats).value, 1.5 * std::numbers::ln2, 1e-14);
}

TEST(interferometer, posterior_examples) {
    EXPECT_DOUBLE_EQ(posterior_springy(0.5, MziOutcome::D2), 1.0);
    EXPECT_DOUBLE_EQ(posterior_springy(0.5, MziOutcome::D1), 0.2);
    EXPECT_DOUBLE_EQ(posterior_springy(0.5, MziOutcome::Absorbed), 1.0);
    EXPECT_EQ(posterior_springy(0.0, MziOutcome::D1), 0.0);
    EXPECT_EQ(code_of([] { posterior_springy(0.0, MziOutcome::Absorbed); }), ErrorCode::ImpossibleOutcome);
    EXPECT_EQ(code_of([] { posterior_springy(0.0, MziOutcome::D2); }), ErrorCode::ImpossibleOutcome);
    EXPECT_EQ(code_of([] { posterior_springy(-0.1, MziOutcome::D1); }), ErrorCode::InvalidArgument);
}

TEST(interferometer, posterior_obeys_total_probability) {
    for (double q = 0.05; q < 1; q += 0.05) {
        auto d = outcome_distribution(MirrorModel::unknown(q));
        double expected = 0;
        for (auto o : {MziOutcome::Absorbed, MziOutcome::D1, MziOutcome::D2}) {
            expected += d.probability(o) * posterior_springy(q, o);
        }
        EXPECT_NEAR(expected, q, 1e-14);
    }
}

TEST(interferometer, rigid_photons_all_reach_d1) {
    auto c = simulate_photons(MirrorModel::rigid(), 1000, 1);
    EXPECT_EQ(c.d1, 1000u);
    EXPECT_EQ(c.total(), 1000u);
}

TEST(interferometer, photon_frequencies_within_three_sigma) {
    const uint64_t n = 100000;
    for (auto m : {MirrorModel::springy(), MirrorModel::unknown(0.5)}) {
        auto d = outcome_distribution(m);
        auto c = simulate_photons(m, n, 2026);
        EXPECT_EQ(c.total(), n);
        for (auto o : {MziOutcome::Absorbed, MziOutcome::D1, MziOutcome::D2}) {
            double p = d.probability(o);
            double rate = double(c.count(o)) / double(n);
            EXPECT_LE(std::abs(rate - p), 3 * oracle::binomial_sigma(p, n)) << outcome_name(o);
        }
    }
}

TEST(interferometer, photons_are_seed_deterministic) {
    auto a = simulate_photons(MirrorModel::unknown(0.3), 5000, 4);
    auto b = simulate_photons(MirrorModel::unknown(0.3), 5000, 4);
    EXPECT_EQ(a.absorbed, b.absorbed);
    EXPECT_EQ(a.d1, b.d1);
    EXPECT_EQ(a.d2, b.d2);
}

TEST(interferometer, latent_mirror_recovers_posterior) {
    const uint64_t n = 200000;
    auto c = simulate_latent_mirror(0.5, n, 11);
    EXPECT_EQ(c.rigid_world.total() + c.springy_world.total(), n);
    EXPECT_EQ(c.rigid_world.absorbed, 0u);
    EXPECT_EQ(c.rigid_world.d2, 0u);
    double d1_total = double(c.rigid_world.d1 + c.springy_world.d1);
    double post = double(c.springy_world.d1) / d1_total;
    EXPECT_LE(std::abs(post - 0.2), 3 * oracle::binomial_sigma(0.2, d1_total));
}

TEST(interferometer, position_uncertainty) {
    EXPECT_NEAR(mirror_position_uncertainty(500e-9), 3.978873577297383e-08, 1e-20);
    EXPECT_NEAR(mirror_position_uncertainty(4 * std::numbers::pi), 1.0, 1e-15);
    EXPECT_EQ(code_of([] { mirror_position_uncertainty(0); }), ErrorCode::NonpositiveWavelength);
}
