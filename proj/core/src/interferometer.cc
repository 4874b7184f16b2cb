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
#include <vector>

#include "qentro/error.h"
#include "qentro/random.h"

namespace qentro {

namespace {

constexpr OutcomeDistribution kRigid{0.0, 1.0, 0.0};
constexpr OutcomeDistribution kSpringy{0.5, 0.25, 0.25};

void require_prior(double prior) {
    if (!(prior >= 0 && prior <= 1)) {
        throw Error(ErrorCode::InvalidArgument, "prior must lie in [0, 1]");
    }
}

MziOutcome sample_outcome(const OutcomeDistribution &d, RandomStream &rng) {
    double u = rng.uniform();
    if (u < d.p_absorbed) {
        return MziOutcome::Absorbed;
    }
    if (u < d.p_absorbed + d.p_d1) {
        return MziOutcome::D1;
    }
    return d.p_d2 > 0 ? MziOutcome::D2 : MziOutcome::D1;
}

void bump(PhotonCounts &c, MziOutcome o) {
    switch (o) {
        case MziOutcome::Absorbed:
            c.absorbed++;
            break;
        case MziOutcome::D1:
            c.d1++;
            break;
        case MziOutcome::D2:
            c.d2++;
            break;
    }
}

}  // namespace

MirrorModel MirrorModel::unknown(double prior_springy) {
    require_prior(prior_springy);
    return MirrorModel(Kind::Unknown, prior_springy);
}

std::string_view mirror_kind_name(MirrorModel::Kind kind) {
    switch (kind) {
        case MirrorModel::Kind::Rigid:
            return "rigid";
        case MirrorModel::Kind::Springy:
            return "springy";
        case MirrorModel::Kind::Unknown:
            return "unknown";
    }
    return "unknown";
}

std::string_view outcome_name(MziOutcome outcome) {
    switch (outcome) {
        case MziOutcome::Absorbed:
            return "absorbed";
        case MziOutcome::D1:
            return "D1";
        case MziOutcome::D2:
            return "D2";
    }
    return "?";
}

double OutcomeDistribution::probability(MziOutcome o) const {
    switch (o) {
        case MziOutcome::Absorbed:
            return p_absorbed;
        case MziOutcome::D1:
            return p_d1;
        case MziOutcome::D2:
            return p_d2;
    }
    return 0;
}

uint64_t PhotonCounts::count(MziOutcome o) const {
    switch (o) {
        case MziOutcome::Absorbed:
            return absorbed;
        case MziOutcome::D1:
            return d1;
        case MziOutcome::D2:
            return d2;
    }
    return 0;
}

OutcomeDistribution outcome_distribution(const MirrorModel &m) {
    switch (m.kind()) {
        case MirrorModel::Kind::Rigid:
            return kRigid;
        case MirrorModel::Kind::Springy:
            return kSpringy;
        case MirrorModel::Kind::Unknown:
            break;
    }
    double q = m.prior_springy();
    return {
        q * kSpringy.p_absorbed + (1 - q) * kRigid.p_absorbed,
        q * kSpringy.p_d1 + (1 - q) * kRigid.p_d1,
        q * kSpringy.p_d2 + (1 - q) * kRigid.p_d2,
    };
}

EntropyResult arrangement_entropy(const MirrorModel &m, LogBase base) {
    auto d = outcome_distribution(m);
    std::vector<double> realized;
    for (double p : {d.p_absorbed, d.p_d1, d.p_d2}) {
        if (p > 0) {
            realized.push_back(p);
        }
    }
    return shannon(ProbabilityVector(std::move(realized)), base);
}

double posterior_springy(double prior, MziOutcome outcome) {
    require_prior(prior);
    double joint_springy = kSpringy.probability(outcome) * prior;
    double evidence = joint_springy + kRigid.probability(outcome) * (1 - prior);
    if (evidence <= 0) {
        throw Error(
            ErrorCode::ImpossibleOutcome,
            std::string("outcome ") + std::string(outcome_name(outcome)) + " has probability zero under this prior");
    }
    return joint_springy / evidence;
}

LatentMirrorCounts simulate_latent_mirror(double prior, uint64_t count, uint64_t seed) {
    require_prior(prior);
    RandomStream rng(seed);
    LatentMirrorCounts out;
    for (uint64_t i = 0; i < count; i++) {
        if (rng.bernoulli(prior)) {
            bump(out.springy_world, sample_outcome(kSpringy, rng));
        } else {
            bump(out.rigid_world, sample_outcome(kRigid, rng));
        }
    }
    return out;
}

PhotonCounts simulate_photons(const MirrorModel &m, uint64_t count, uint64_t seed) {
    auto latent = simulate_latent_mirror(m.prior_springy(), count, seed);
    return {
        latent.rigid_world.absorbed + latent.springy_world.absorbed,
        latent.rigid_world.d1 + latent.springy_world.d1,
        latent.rigid_world.d2 + latent.springy_world.d2,
    };
}

double mirror_position_uncertainty(double wavelength) {
    if (!(wavelength > 0) || !std::isfinite(wavelength)) {
        throw Error(ErrorCode::NonpositiveWavelength, "wavelength must be positive");
    }
    return wavelength / (4 * std::numbers::pi);
}

}  // namespace qentro
