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

#ifndef QENTRO_ENTROPY_H
#define QENTRO_ENTROPY_H

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "qentro/numerics.h"
#include "qentro/states.h"

namespace qentro {

enum class LogBase { Bits, Nats };

std::string_view base_label(LogBase base);
/// log of x in the given base.
double log_in(LogBase base, double x);

struct EntropyResult {
    /// Non-negative except for differential_entropy, which may be negative.
    double value;
    LogBase base;
};

/// Finite distribution: entries non-negative and summing to one within 1e-10.
class ProbabilityVector {
   public:
    /// Throws InvalidDistribution.
    explicit ProbabilityVector(std::vector<double> probs);

    std::span<const double> probs() const noexcept {
        return probs_;
    }
    size_t size() const noexcept {
        return probs_.size();
    }

   private:
    std::vector<double> probs_;
};

/// Density tabulated on the uniform grid x_k = x_min + k * dx.
struct TabulatedDensity {
    double x_min;
    double dx;
    std::vector<double> values;
};

struct BoundCheck {
    double lhs;
    double rhs;
    bool holds;
};

struct UnitaryMinimizerOptions {
    /// Maximum Jacobi-style sweeps per start.
    int max_sweeps = 100;
    int starts = 8;
    uint64_t seed = 0;
};

struct UnitaryMinimizationReport {
    /// Unitary U attaining min_value = informational(U rho U^dagger).
    ComplexMatrix minimizer;
    double min_value = 0;
    /// Sweeps used by the winning start.
    int iterations = 0;
    double von_neumann = 0;
    /// min_value - von_neumann; zero at the exact infimum.
    double residual_vs_von_neumann = 0;
    /// Set when the winning start hit max_sweeps before converging. The result is
    /// still the best point found.
    bool budget_exhausted = false;
    LogBase base = LogBase::Bits;
};

/// -sum p log p with 0 log 0 = 0.
EntropyResult shannon(const ProbabilityVector &p, LogBase base = LogBase::Bits);

/// Trapezoid approximation of -int f log f dx. Throws NotADensity unless the table is
/// non-negative, has at least two points on a positive spacing, and integrates to
/// one within 1e-6.
EntropyResult differential_entropy(const TabulatedDensity &pdf, LogBase base = LogBase::Nats);

/// h - log(delta_x), the entropy of a density read out at precision delta_x.
EntropyResult quantized_entropy(EntropyResult h, double delta_x);

/// -sum lambda log lambda over the spectrum of rho.
EntropyResult von_neumann(const DensityMatrix &rho, LogBase base = LogBase::Bits);

/// Entropy of the diagonal of rho in the computational basis. Always >= von_neumann.
EntropyResult informational(const DensityMatrix &rho, LogBase base = LogBase::Bits);

/// Entropy of the |c_k|^2 distribution; identical to informational(density_of_pure(s)).
EntropyResult pure_entropy(const PureState &s, LogBase base = LogBase::Bits);

/// lhs = informational(mix(e)), rhs = sum_i p_i pure_entropy(phi_i) + p_o von_neumann(rho_o).
BoundCheck ensemble_bound_check(const Ensemble &e, LogBase base = LogBase::Bits);

/// Minimizes informational(U rho U^dagger) over U(d). U is built as a product of
/// complex Givens rotations; each rotation angle and phase is chosen by a golden
/// section line search, sweeping over all planes until no plane improves.
/// Independent random starts are run and the best one wins.
UnitaryMinimizationReport min_informational_over_unitaries(
    const DensityMatrix &rho, LogBase base = LogBase::Bits, const UnitaryMinimizerOptions &options = {});

/// Complex Givens rotation on the (p, q) plane:
/// [[cos t, -e^{i phi} sin t], [e^{-i phi} sin t, cos t]].
ComplexMatrix givens_rotation(size_t dim, size_t p, size_t q, double theta, double phi);

/// A/4 nats for area A in Planck units. Throws NegativeArea.
EntropyResult bekenstein_bound(double area_planck_units, LogBase base = LogBase::Nats);

}  // namespace qentro

#endif
