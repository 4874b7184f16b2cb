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

#include "qentro/protocol.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "qentro/error.h"
#include "qentro/parallel.h"

namespace qentro::protocol {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2;

void require_angle(double theta) {
    if (!(theta >= 0 && theta <= kHalfPi)) {
        throw Error(ErrorCode::InvalidTheta, "angle must lie in [0, pi/2]");
    }
}

// Aligned-outcome probability for a photon at `photon` measured in basis `basis`.
double aligned_probability(double photon, double basis) {
    double c = std::cos(photon - basis);
    return c * c;
}

double safe_log(double p) {
    return std::log(std::max(p, 1e-300));
}

}  // namespace

HiddenQubitSource::HiddenQubitSource(double secret_theta, uint64_t seed) : secret_theta_(secret_theta), rng_(seed) {
    require_angle(secret_theta);
}

int HiddenQubitSource::measure(double basis_angle) {
    copies_used_++;
    return rng_.bernoulli(aligned_probability(secret_theta_, basis_angle)) ? 0 : 1;
}

HiddenQubitSource HiddenQubitSource::substream(uint64_t index) const {
    return HiddenQubitSource(secret_theta_, rng_.substream(index).seed());
}

ComplexMatrix SourceOracle::aligning_transform(const HiddenQubitSource &src) {
    return g_plus_transform(src.secret_theta_);
}

ComplexMatrix g_transform(Complex alpha, Complex beta) {
    return ComplexMatrix{{std::conj(alpha), std::conj(beta)}, {-beta, alpha}};
}

ComplexMatrix g_plus_transform(double theta) {
    double c = std::cos(theta);
    double s = std::sin(theta);
    return ComplexMatrix{{c, s}, {s, -c}};
}

QuantizationGrid::QuantizationGrid(int levels) : levels_(levels) {
    if (levels < 2) {
        throw Error(ErrorCode::NonpositiveN, "a quantization grid needs at least 2 levels");
    }
}

double QuantizationGrid::hypothesis(int j) const {
    return (j + 0.5) * spacing();
}

double QuantizationGrid::spacing() const {
    return kHalfPi / levels_;
}

int measure_in_basis(HiddenQubitSource &src, double basis_angle) {
    return src.measure(basis_angle);
}

BruteForceEstimate estimate_theta_bruteforce(
    HiddenQubitSource &src, const QuantizationGrid &grid, uint64_t shots_per_hypothesis, std::span<const int> order) {
    if (shots_per_hypothesis == 0) {
        throw Error(ErrorCode::InvalidArgument, "need at least one shot per hypothesis");
    }
    int n = grid.levels();
    std::vector<int> sequence(order.begin(), order.end());
    if (sequence.empty()) {
        sequence.resize(n);
        std::iota(sequence.begin(), sequence.end(), 0);
    }
    std::vector<int> sorted = sequence;
    std::sort(sorted.begin(), sorted.end());
    for (int j = 0; j < n; j++) {
        if (sorted.size() != static_cast<size_t>(n) || sorted[j] != j) {
            throw Error(ErrorCode::InvalidArgument, "evaluation order must be a permutation of the hypotheses");
        }
    }

    BruteForceEstimate out;
    out.zero_counts.assign(n, 0);
    for (int j : sequence) {
        auto sub = src.substream(static_cast<uint64_t>(j));
        double basis = grid.hypothesis(j);
        uint64_t zeros = 0;
        for (uint64_t s = 0; s < shots_per_hypothesis; s++) {
            zeros += sub.measure(basis) == 0 ? 1 : 0;
        }
        out.zero_counts[j] = zeros;
        src.merge_usage(sub);
        out.copies_used += shots_per_hypothesis;
    }

    out.best_index = 0;
    for (int j = 1; j < n; j++) {
        if (out.zero_counts[j] > out.zero_counts[out.best_index]) {
            out.best_index = j;
        }
    }
    out.theta_hat = grid.hypothesis(out.best_index);

    out.log_likelihoods.assign(n, 0.0);
    for (int j = 0; j < n; j++) {
        double ll = 0;
        for (int k = 0; k < n; k++) {
            double p0 = aligned_probability(grid.hypothesis(j), grid.hypothesis(k));
            double zeros = static_cast<double>(out.zero_counts[k]);
            double ones = static_cast<double>(shots_per_hypothesis) - zeros;
            ll += zeros * safe_log(p0) + ones * safe_log(1 - p0);
        }
        out.log_likelihoods[j] = ll;
    }
    return out;
}

AdaptiveEstimate estimate_theta_adaptive(
    HiddenQubitSource &src, double target_halfwidth, uint64_t confidence_shots, uint64_t max_copies) {
    if (!(target_halfwidth > 0)) {
        throw Error(ErrorCode::InvalidArgument, "target halfwidth must be positive");
    }
    if (confidence_shots == 0) {
        throw Error(ErrorCode::InvalidArgument, "need at least one shot per round");
    }
    double lo = 0;
    double hi = kHalfPi;
    AdaptiveEstimate out;
    while ((hi - lo) / 2 > target_halfwidth) {
        if (confidence_shots > max_copies - out.copies_used) {
            throw Error(
                ErrorCode::BudgetExhausted, "copy budget of " + std::to_string(max_copies) + " exhausted after " +
                                                std::to_string(out.rounds) + " rounds");
        }
        double mid = (lo + hi) / 2;
        // P(aligned) at mid + pi/4 is (1 + sin(2 (theta - mid))) / 2.
        uint64_t zeros = 0;
        for (uint64_t s = 0; s < confidence_shots; s++) {
            zeros += src.measure(mid + std::numbers::pi / 4) == 0 ? 1 : 0;
        }
        out.copies_used += confidence_shots;
        out.rounds++;
        // Keep the upper or lower two thirds.
        double keep = (hi - lo) * 2 / 3;
        if (2 * zeros > confidence_shots) {
            lo = std::max(0.0, hi - keep);
        } else {
            hi = std::min(kHalfPi, lo + keep);
        }
    }
    out.theta_hat = (lo + hi) / 2;
    out.halfwidth = (hi - lo) / 2;
    return out;
}

SignatureKey::SignatureKey(std::vector<double> angles) : angles_(std::move(angles)) {
    if (angles_.empty()) {
        throw Error(ErrorCode::LengthMismatch, "a signature key needs at least one angle");
    }
    for (double a : angles_) {
        require_angle(a);
    }
}

SignatureKey SignatureKey::uniform(int n, double angle) {
    if (n < 1) {
        throw Error(ErrorCode::NonpositiveN, "key length must be at least 1");
    }
    return SignatureKey(std::vector<double>(static_cast<size_t>(n), angle));
}

SignatureKey SignatureKey::random(int n, RandomStream &rng) {
    if (n < 1) {
        throw Error(ErrorCode::NonpositiveN, "key length must be at least 1");
    }
    std::vector<double> angles(static_cast<size_t>(n));
    for (auto &a : angles) {
        a = kHalfPi * rng.uniform();
    }
    return SignatureKey(std::move(angles));
}

PhotonStream honest_stream(const SignatureKey &key) {
    return PhotonStream(key.angles().begin(), key.angles().end());
}

bool verify_signature(const SignatureKey &key, const PhotonStream &photons, RandomStream &rng) {
    if (photons.size() != key.size()) {
        throw Error(
            ErrorCode::LengthMismatch,
            "stream has " + std::to_string(photons.size()) + " photons, key has " + std::to_string(key.size()));
    }
    for (size_t k = 0; k < photons.size(); k++) {
        if (!rng.bernoulli(aligned_probability(photons[k], key.angles()[k]))) {
            return false;
        }
    }
    return true;
}

std::string_view strategy_name(EveStrategy::Kind kind) {
    switch (kind) {
        case EveStrategy::Kind::GuessBits:
            return "guess-bits";
        case EveStrategy::Kind::GuessAngles:
            return "guess-angles";
        case EveStrategy::Kind::Replay:
            return "replay";
    }
    return "?";
}

PhotonStream forge_stream(const SignatureKey &key, const EveStrategy &strategy, RandomStream &rng) {
    PhotonStream out(key.size());
    switch (strategy.kind) {
        case EveStrategy::Kind::GuessBits:
            if (!strategy.fixed_bits.empty() && strategy.fixed_bits.size() != key.size()) {
                throw Error(ErrorCode::LengthMismatch, "fixed guess length differs from key length");
            }
            for (size_t k = 0; k < out.size(); k++) {
                int bit = strategy.fixed_bits.empty() ? static_cast<int>(rng.next_u64() >> 63) : strategy.fixed_bits[k];
                out[k] = bit ? kHalfPi : 0.0;
            }
            break;
        case EveStrategy::Kind::GuessAngles:
            for (auto &a : out) {
                a = kHalfPi * rng.uniform();
            }
            break;
        case EveStrategy::Kind::Replay:
            for (size_t k = 0; k < out.size(); k++) {
                bool zero = rng.bernoulli(aligned_probability(key.angles()[k], 0.0));
                out[k] = zero ? 0.0 : kHalfPi;
            }
            break;
    }
    return out;
}

AttackStats eve_attack_success(const SignatureKey &key, const EveStrategy &strategy, uint64_t trials, uint64_t seed) {
    if (!strategy.fixed_bits.empty() && strategy.fixed_bits.size() != key.size()) {
        throw Error(ErrorCode::LengthMismatch, "fixed guess length differs from key length");
    }
    if (trials == 0) {
        throw Error(ErrorCode::InvalidArgument, "need at least one trial");
    }
    AttackStats stats;
    stats.trials = trials;
    stats.successes = parallel_count(trials, [&](size_t i) {
        RandomStream rng = RandomStream::derive(seed, i);
        auto forged = forge_stream(key, strategy, rng);
        return verify_signature(key, forged, rng);
    });
    return stats;
}

double expected_attack_success(const SignatureKey &key, const EveStrategy &strategy) {
    if (!strategy.fixed_bits.empty() && strategy.fixed_bits.size() != key.size()) {
        throw Error(ErrorCode::LengthMismatch, "fixed guess length differs from key length");
    }
    double p = 1;
    for (size_t k = 0; k < key.size(); k++) {
        double a = key.angles()[k];
        double c2 = aligned_probability(a, 0.0);
        switch (strategy.kind) {
            case EveStrategy::Kind::GuessBits:
                if (strategy.fixed_bits.empty()) {
                    p *= 0.5;
                } else {
                    p *= strategy.fixed_bits[k] ? 1 - c2 : c2;
                }
                break;
            case EveStrategy::Kind::GuessAngles:
                // Mean of cos^2(x - a) for x uniform on [0, pi/2).
                p *= 0.5 + std::sin(2 * a) / std::numbers::pi;
                break;
            case EveStrategy::Kind::Replay:
                p *= c2 * c2 + (1 - c2) * (1 - c2);
                break;
        }
    }
    return p;
}

}  // namespace qentro::protocol
