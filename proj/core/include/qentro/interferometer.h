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

#ifndef QENTRO_INTERFEROMETER_H
#define QENTRO_INTERFEROMETER_H

#include <array>
#include <cstdint>
#include <string_view>

#include "qentro/entropy.h"

namespace qentro {

/// Mirror C of the Mach-Zehnder arrangement: rigid, spring-mounted, or unknown with a
/// prior probability of being spring-mounted.
class MirrorModel {
   public:
    enum class Kind { Rigid, Springy, Unknown };

    static MirrorModel rigid() {
        return MirrorModel(Kind::Rigid, 0.0);
    }
    static MirrorModel springy() {
        return MirrorModel(Kind::Springy, 1.0);
    }
    /// Throws InvalidArgument unless 0 <= prior_springy <= 1.
    static MirrorModel unknown(double prior_springy);

    Kind kind() const noexcept {
        return kind_;
    }
    /// Probability that the mirror is the springy one (0 for rigid, 1 for springy).
    double prior_springy() const noexcept {
        return prior_;
    }

   private:
    MirrorModel(Kind kind, double prior) : kind_(kind), prior_(prior) {
    }
    Kind kind_;
    double prior_;
};

std::string_view mirror_kind_name(MirrorModel::Kind kind);

enum class MziOutcome { Absorbed = 0, D1 = 1, D2 = 2 };

std::string_view outcome_name(MziOutcome outcome);

struct OutcomeDistribution {
    double p_absorbed;
    double p_d1;
    double p_d2;

    double probability(MziOutcome o) const;
};

struct PhotonCounts {
    uint64_t absorbed = 0;
    uint64_t d1 = 0;
    uint64_t d2 = 0;

    uint64_t count(MziOutcome o) const;
    uint64_t total() const {
        return absorbed + d1 + d2;
    }
};

/// Photon counts split by which mirror was actually installed.
struct LatentMirrorCounts {
    PhotonCounts rigid_world;
    PhotonCounts springy_world;
};

/// Rigid -> (0, 1, 0); Springy -> (1/2, 1/4, 1/4); Unknown(q) mixes them with weight q.
OutcomeDistribution outcome_distribution(const MirrorModel &m);

/// Shannon entropy of the realized outcomes; impossible outcomes are dropped.
EntropyResult arrangement_entropy(const MirrorModel &m, LogBase base = LogBase::Bits);

/// p(springy | outcome) by Bayes' rule. Throws ImpossibleOutcome when the outcome has
/// probability zero under the prior, InvalidArgument for a prior outside [0, 1].
double posterior_springy(double prior, MziOutcome outcome);

/// Multinomial photon counts for the arrangement, deterministic given the seed.
PhotonCounts simulate_photons(const MirrorModel &m, uint64_t count, uint64_t seed);

/// Samples the installed mirror per photon (springy with probability `prior`), then the
/// outcome given that mirror.
LatentMirrorCounts simulate_latent_mirror(double prior, uint64_t count, uint64_t seed);

/// lambda / (4 pi), the lower bound on the mirror position spread. Throws
/// NonpositiveWavelength.
double mirror_position_uncertainty(double wavelength);

}  // namespace qentro

#endif
