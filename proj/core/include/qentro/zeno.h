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

#ifndef QENTRO_ZENO_H
#define QENTRO_ZENO_H

#include <cstdint>
#include <vector>

#include "qentro/numerics.h"
#include "qentro/states.h"

namespace qentro {

/// Time-independent Hermitian generator with an explicit hbar.
class Hamiltonian {
   public:
    /// Throws NotHermitian (tolerance 1e-10) or InvalidArgument for hbar <= 0.
    explicit Hamiltonian(ComplexMatrix matrix, double hbar = 1.0);

    const ComplexMatrix &matrix() const noexcept {
        return matrix_;
    }
    double hbar() const noexcept {
        return hbar_;
    }
    size_t dim() const noexcept {
        return matrix_.dim();
    }
    const EigenDecomposition &eigen() const noexcept {
        return eigen_;
    }

   private:
    ComplexMatrix matrix_;
    double hbar_;
    EigenDecomposition eigen_;
};

enum class ZenoMode { Exact, SecondOrder };

/// n projective steps of theta_step each, carrying |0> towards |1>.
struct SteeringPlan {
    double theta_step;
    int n_steps;

    /// n_steps = round(pi / (2 theta)). Throws InvalidTheta unless 0 < theta <= pi/2.
    static SteeringPlan from_theta(double theta);
    /// theta = pi / (2 n). Throws NonpositiveN for n < 1.
    static SteeringPlan from_steps(int n);
};

/// exp(-i H t / hbar)|psi0>, via the eigendecomposition of H.
PureState evolve(const Hamiltonian &h, double t, const PureState &psi0);
/// |<psi0|psi_t>|^2
double survival_exact(const Hamiltonian &h, double t, const PureState &psi0);
/// <H^2> - <H>^2 in psi0.
double energy_variance(const Hamiltonian &h, const PureState &psi0);
/// 1 - (Delta E)^2 t^2 / hbar^2
double survival_second_order(const Hamiltonian &h, double t, const PureState &psi0);
/// Survival after n equally spaced projective checks against psi0 over total time t.
/// Exact mode multiplies n single-interval survivals; second-order mode returns
/// 1 - (Delta E)^2 t^2 / (hbar^2 n). Throws NonpositiveN.
double zeno_survival(const Hamiltonian &h, double t, int n, const PureState &psi0, ZenoMode mode);

/// (cos^2 theta)^n_steps
double steering_success_probability(const SteeringPlan &plan);

struct SteeringStats {
    uint64_t trials = 0;
    uint64_t successes = 0;
    /// Entry k counts trials that reached step k+1 and collapsed onto the forward branch.
    std::vector<uint64_t> forward_at_step;
    /// Entry k counts trials that reached step k+1.
    std::vector<uint64_t> reached_step;

    double rate() const {
        return trials == 0 ? 0.0 : static_cast<double>(successes) / static_cast<double>(trials);
    }
};

/// Monte Carlo of measurement-driven steering. Each trial starts at |0> and measures in
/// bases rotated by k * theta_step for k = 1..n; the trial succeeds iff every collapse
/// takes the forward branch. Trial i draws from RandomStream::derive(seed, i).
SteeringStats simulate_steering(const SteeringPlan &plan, uint64_t trials, uint64_t seed);

}  // namespace qentro

#endif
