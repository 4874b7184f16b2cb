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

#include "qentro/zeno.h"

#include <cmath>
#include <numbers>
#include <string>

#include "qentro/error.h"
#include "qentro/parallel.h"
#include "qentro/random.h"

namespace qentro {

namespace {

void require_dim(const Hamiltonian &h, const PureState &psi) {
    if (h.dim() != psi.dim()) {
        throw Error(
            ErrorCode::DimensionMismatch,
            "Hamiltonian dimension " + std::to_string(h.dim()) + " vs state dimension " + std::to_string(psi.dim()));
    }
}

// Trial outcome plus the index of the first failing step (n if none failed).
struct TrialPath {
    bool success = false;
    int steps_reached = 0;
};

TrialPath run_steering_trial(const std::vector<MeasurementSet> &bases, RandomStream rng) {
    PureState state = PureState::basis(2, 0);
    int k = 0;
    for (const auto &basis : bases) {
        auto outcome = measure_collapse(state, basis, rng);
        k++;
        if (outcome.index != 0) {
            return {false, k};
        }
        state = std::move(outcome.state);
    }
    return {true, k};
}

}  // namespace

Hamiltonian::Hamiltonian(ComplexMatrix matrix, double hbar)
    : matrix_(std::move(matrix)), hbar_(hbar), eigen_(hermitian_eigen(matrix_, kDefaultTolerance)) {
    if (!(hbar > 0) || !std::isfinite(hbar)) {
        throw Error(ErrorCode::InvalidArgument, "hbar must be positive");
    }
}

SteeringPlan SteeringPlan::from_theta(double theta) {
    if (!(theta > 0) || theta > std::numbers::pi / 2 + 1e-12) {
        throw Error(ErrorCode::InvalidTheta, "step angle must lie in (0, pi/2]");
    }
    int n = static_cast<int>(std::lround(std::numbers::pi / (2 * theta)));
    return {theta, std::max(n, 1)};
}

SteeringPlan SteeringPlan::from_steps(int n) {
    if (n < 1) {
        throw Error(ErrorCode::NonpositiveN, "need at least one step");
    }
    return {std::numbers::pi / (2.0 * n), n};
}

PureState evolve(const Hamiltonian &h, double t, const PureState &psi0) {
    require_dim(h, psi0);
    const auto &eig = h.eigen();
    size_t n = h.dim();
    // psi_t = V exp(-i Lambda t / hbar) V^dagger psi0
    ComplexVector coeffs(n);
    for (size_t k = 0; k < n; k++) {
        Complex c = 0;
        for (size_t r = 0; r < n; r++) {
            c += std::conj(eig.eigenvectors(r, k)) * psi0[r];
        }
        coeffs[k] = c * std::polar(1.0, -eig.eigenvalues[k] * t / h.hbar());
    }
    ComplexVector out(n);
    for (size_t r = 0; r < n; r++) {
        Complex acc = 0;
        for (size_t k = 0; k < n; k++) {
            acc += eig.eigenvectors(r, k) * coeffs[k];
        }
        out[r] = acc;
    }
    return PureState::normalized(std::move(out));
}

double survival_exact(const Hamiltonian &h, double t, const PureState &psi0) {
    auto psi_t = evolve(h, t, psi0);
    return std::min(1.0, std::norm(inner(psi0.amplitudes(), psi_t.amplitudes())));
}

double energy_variance(const Hamiltonian &h, const PureState &psi0) {
    require_dim(h, psi0);
    auto h_psi = apply(h.matrix(), psi0.amplitudes());
    double mean = inner(psi0.amplitudes(), h_psi).real();
    double second = inner(h_psi, h_psi).real();
    return std::max(0.0, second - mean * mean);
}

double survival_second_order(const Hamiltonian &h, double t, const PureState &psi0) {
    double var = energy_variance(h, psi0);
    return 1 - var * t * t / (h.hbar() * h.hbar());
}

double zeno_survival(const Hamiltonian &h, double t, int n, const PureState &psi0, ZenoMode mode) {
    if (n < 1) {
        throw Error(ErrorCode::NonpositiveN, "number of observations must be at least 1");
    }
    if (mode == ZenoMode::SecondOrder) {
        double var = energy_variance(h, psi0);
        return 1 - var * t * t / (h.hbar() * h.hbar() * n);
    }
    return std::pow(survival_exact(h, t / n, psi0), n);
}

double steering_success_probability(const SteeringPlan &plan) {
    if (!(plan.theta_step > 0) || plan.theta_step > std::numbers::pi / 2 + 1e-12) {
        throw Error(ErrorCode::InvalidTheta, "step angle must lie in (0, pi/2]");
    }
    if (plan.n_steps < 1) {
        throw Error(ErrorCode::NonpositiveN, "need at least one step");
    }
    double c2 = (1 + std::cos(2 * plan.theta_step)) / 2;
    return std::pow(c2, plan.n_steps);
}

SteeringStats simulate_steering(const SteeringPlan &plan, uint64_t trials, uint64_t seed) {
    steering_success_probability(plan);  // validates the plan
    std::vector<MeasurementSet> bases;
    for (int k = 1; k <= plan.n_steps; k++) {
        bases.push_back(MeasurementSet::rotated_qubit(k * plan.theta_step, "forward", "back"));
    }
    auto n = static_cast<size_t>(plan.n_steps);
    auto paths = parallel_map<TrialPath>(trials, [&](size_t i) {
        return run_steering_trial(bases, RandomStream::derive(seed, i));
    });
    SteeringStats stats;
    stats.trials = trials;
    stats.forward_at_step.assign(n, 0);
    stats.reached_step.assign(n, 0);
    for (const auto &path : paths) {
        auto reached = static_cast<size_t>(path.steps_reached);
        for (size_t k = 0; k < reached; k++) {
            stats.reached_step[k]++;
            stats.forward_at_step[k]++;
        }
        if (!path.success) {
            stats.forward_at_step[reached - 1]--;
        } else {
            stats.successes++;
        }
    }
    return stats;
}

}  // namespace qentro
