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

#ifndef QENTRO_PROTOCOL_H
#define QENTRO_PROTOCOL_H

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "qentro/numerics.h"
#include "qentro/random.h"

namespace qentro::protocol {

/// Emits independent copies of cos(theta)|0> + sin(theta)|1> for a sealed theta.
/// Receivers can only learn about theta by measuring copies.
class HiddenQubitSource {
   public:
    /// Throws InvalidTheta unless 0 <= secret_theta <= pi/2.
    HiddenQubitSource(double secret_theta, uint64_t seed);

    /// Measures one fresh copy in the basis {cos b|0> + sin b|1>, its orthogonal}.
    /// Returns 0 for the aligned outcome, which occurs with probability cos^2(theta - b).
    int measure(double basis_angle);

    /// Source with the same secret and an independent stream for work unit `index`.
    HiddenQubitSource substream(uint64_t index) const;

    uint64_t copies_used() const noexcept {
        return copies_used_;
    }
    /// Adds the copies consumed by a substream to this source's tally.
    void merge_usage(const HiddenQubitSource &child) noexcept {
        copies_used_ += child.copies_used_;
    }

   private:
    friend struct SourceOracle;
    double secret_theta_;
    RandomStream rng_;
    uint64_t copies_used_ = 0;
};

/// Test hook that can read the sealed angle.
struct SourceOracle {
    static double secret(const HiddenQubitSource &src) {
        return src.secret_theta_;
    }
    /// G+ for the sealed angle.
    static ComplexMatrix aligning_transform(const HiddenQubitSource &src);
};

/// G = [[conj(alpha), conj(beta)], [-beta, alpha]]; maps alpha|0> + beta|1> to |0>.
ComplexMatrix g_transform(Complex alpha, Complex beta);
/// G+ = [[cos t, sin t], [sin t, -cos t]]; maps cos t|0> + sin t|1> to |0>.
ComplexMatrix g_plus_transform(double theta);

/// Hypotheses theta_j = (j + 1/2) (pi/2) / n for j = 0..n-1.
class QuantizationGrid {
   public:
    /// Throws NonpositiveN for levels < 2.
    explicit QuantizationGrid(int levels);

    int levels() const noexcept {
        return levels_;
    }
    double hypothesis(int j) const;
    /// (pi/2) / n
    double spacing() const;

   private:
    int levels_;
};

/// measure_in_basis as a free function over a source.
int measure_in_basis(HiddenQubitSource &src, double basis_angle);

struct BruteForceEstimate {
    double theta_hat = 0;
    int best_index = 0;
    /// Aligned-outcome count for each hypothesis basis; the estimate is the argmax.
    std::vector<uint64_t> zero_counts;
    /// Log-likelihood of every hypothesis given all recorded outcomes, in nats.
    std::vector<double> log_likelihoods;
    uint64_t copies_used = 0;
};

/// Measures `shots_per_hypothesis` copies in each hypothesis basis and returns the
/// hypothesis with the most aligned outcomes (lowest index on ties). Hypothesis j
/// draws from src.substream(j), so the result does not depend on `order`, which
/// only fixes the evaluation sequence (empty = ascending). Throws InvalidArgument for
/// zero shots.
BruteForceEstimate estimate_theta_bruteforce(
    HiddenQubitSource &src, const QuantizationGrid &grid, uint64_t shots_per_hypothesis,
    std::span<const int> order = {});

struct AdaptiveEstimate {
    double theta_hat = 0;
    double halfwidth = 0;
    int rounds = 0;
    uint64_t copies_used = 0;
};

/// Overlapping interval bisection on [0, pi/2]. Each round measures `confidence_shots`
/// copies in the basis rotated pi/4 past the interval midpoint; an aligned majority
/// means theta lies above the midpoint, and the upper (else lower) two thirds of the
/// interval are kept. Stops once the halfwidth is at most target_halfwidth.
/// Throws BudgetExhausted if the rounds would need more than max_copies copies.
AdaptiveEstimate estimate_theta_adaptive(
    HiddenQubitSource &src, double target_halfwidth, uint64_t confidence_shots,
    uint64_t max_copies = UINT64_MAX);

/// Shared polarization-angle signature.
class SignatureKey {
   public:
    /// Throws LengthMismatch for an empty key, InvalidTheta for angles outside [0, pi/2].
    explicit SignatureKey(std::vector<double> angles);
    static SignatureKey uniform(int n, double angle);
    static SignatureKey random(int n, RandomStream &rng);

    std::span<const double> angles() const noexcept {
        return angles_;
    }
    size_t size() const noexcept {
        return angles_.size();
    }

   private:
    std::vector<double> angles_;
};

/// A sequence of photons, each prepared as cos(a)|0> + sin(a)|1>.
using PhotonStream = std::vector<double>;

/// Photons prepared at the key's angles.
PhotonStream honest_stream(const SignatureKey &key);

/// Measures photon k in basis key[k] and accepts iff every outcome is aligned.
/// Throws LengthMismatch.
bool verify_signature(const SignatureKey &key, const PhotonStream &photons, RandomStream &rng);

struct EveStrategy {
    enum class Kind { GuessBits, GuessAngles, Replay };
    Kind kind = Kind::GuessBits;
    /// GuessBits only: a fixed bit string replayed every trial; empty draws fresh bits.
    std::vector<int> fixed_bits;

    static EveStrategy guess_bits() {
        return {Kind::GuessBits, {}};
    }
    static EveStrategy fixed(std::vector<int> bits) {
        return {Kind::GuessBits, std::move(bits)};
    }
    static EveStrategy guess_angles() {
        return {Kind::GuessAngles, {}};
    }
    static EveStrategy replay() {
        return {Kind::Replay, {}};
    }
};

std::string_view strategy_name(EveStrategy::Kind kind);

/// Eve's forged stream for one trial:
/// GuessBits sends |b_k> for guessed bits b_k; GuessAngles sends uniformly random
/// angles in [0, pi/2); Replay measures an intercepted honest photon in the
/// computational basis and resends the observed basis state.
PhotonStream forge_stream(const SignatureKey &key, const EveStrategy &strategy, RandomStream &rng);

struct AttackStats {
    uint64_t trials = 0;
    uint64_t successes = 0;
    double rate() const {
        return trials == 0 ? 0.0 : static_cast<double>(successes) / static_cast<double>(trials);
    }
};

/// Fraction of trials in which verify_signature accepts Eve's forged stream. Trial i
/// uses RandomStream::derive(seed, i). Throws InvalidArgument for zero trials.
AttackStats eve_attack_success(const SignatureKey &key, const EveStrategy &strategy, uint64_t trials, uint64_t seed);

/// Exact acceptance probability of one forged stream.
double expected_attack_success(const SignatureKey &key, const EveStrategy &strategy);

}  // namespace qentro::protocol

#endif
