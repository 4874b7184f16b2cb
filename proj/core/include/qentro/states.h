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

#ifndef QENTRO_STATES_H
#define QENTRO_STATES_H

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qentro/numerics.h"
#include "qentro/random.h"

namespace qentro {

inline constexpr double kNormTolerance = 1e-10;
inline constexpr double kCompletenessTolerance = 1e-9;
inline constexpr double kUnitaryTolerance = 1e-9;

/// Normalized amplitude vector of length >= 2.
class PureState {
   public:
    /// Throws NotNormalized unless sum |c_k|^2 = 1 within 1e-10, InvalidArgument
    /// for fewer than two amplitudes.
    explicit PureState(ComplexVector amplitudes);
    /// Rescales to unit norm. Throws NotNormalized for a zero vector.
    static PureState normalized(ComplexVector amplitudes);
    static PureState basis(size_t dim, size_t index);
    /// cos(theta)|0> + sin(theta)|1>
    static PureState from_angle(double theta);

    size_t dim() const noexcept {
        return amplitudes_.size();
    }
    std::span<const Complex> amplitudes() const noexcept {
        return amplitudes_;
    }
    const Complex &operator[](size_t k) const {
        return amplitudes_[k];
    }
    /// |c_k|^2 for every k.
    std::vector<double> probabilities() const;
    /// Same ray, with the first non-negligible amplitude real and positive.
    PureState canonical() const;

   private:
    ComplexVector amplitudes_;
};

/// |<a|b>| = 1 within tol.
bool equal_up_to_phase(const PureState &a, const PureState &b, double tol = 1e-10);

/// Hermitian, unit-trace, positive semidefinite matrix.
class DensityMatrix {
   public:
    /// Throws NotADensityMatrix naming the violated invariant.
    explicit DensityMatrix(ComplexMatrix matrix);

    size_t dim() const noexcept {
        return matrix_.dim();
    }
    const ComplexMatrix &matrix() const noexcept {
        return matrix_;
    }
    std::vector<double> diagonal() const {
        return matrix_.real_diagonal();
    }

   private:
    ComplexMatrix matrix_;
};

/// Equality is defined on the matrix, not on how it was assembled.
bool approx_equal(const DensityMatrix &a, const DensityMatrix &b, double tol);

struct WeightedPure {
    double weight;
    PureState state;
};

struct WeightedMixed {
    double weight;
    DensityMatrix rho;
};

/// sum_i p_i |phi_i><phi_i| + p_o rho_o
struct Ensemble {
    std::vector<WeightedPure> pure_parts;
    std::optional<WeightedMixed> mixed_part;

    /// Throws WeightSumInvalid on negative weights or weights not summing to one,
    /// DimensionMismatch if the components disagree on dimension.
    void validate() const;
    size_t dim() const;
};

/// Measurement operators M_i with sum_i M_i^dagger M_i = I.
class MeasurementSet {
   public:
    /// Throws IncompleteMeasurementSet when completeness fails by more than 1e-9.
    MeasurementSet(std::vector<ComplexMatrix> operators, std::vector<std::string> labels);
    /// Projectors onto |k>, labelled "0", "1", ...
    static MeasurementSet computational(size_t dim);
    /// Qubit projectors onto cos(a)|0> + sin(a)|1> and its orthogonal complement.
    static MeasurementSet rotated_qubit(
        double angle, std::string aligned_label = "+", std::string orthogonal_label = "-");

    size_t size() const noexcept {
        return operators_.size();
    }
    size_t dim() const noexcept {
        return operators_.front().dim();
    }
    const ComplexMatrix &op(size_t i) const {
        return operators_[i];
    }
    const std::string &label(size_t i) const {
        return labels_[i];
    }

   private:
    std::vector<ComplexMatrix> operators_;
    std::vector<std::string> labels_;
};

struct MeasurementOutcome {
    size_t index;
    std::string label;
    PureState state;
};

DensityMatrix density_of_pure(const PureState &s);
DensityMatrix mix(const Ensemble &e);

/// U|phi>. Throws NotUnitary (tolerance 1e-9) or DimensionMismatch.
PureState evolve_unitary(const PureState &s, const ComplexMatrix &u);
/// U rho U^dagger.
DensityMatrix evolve_unitary(const DensityMatrix &rho, const ComplexMatrix &u);

/// <phi|M_i^dagger M_i|phi> for each operator.
std::vector<double> born_probabilities(const PureState &s, const MeasurementSet &m);

/// Samples outcome i with its Born probability and returns the normalized
/// post-measurement state M_i|phi> / sqrt(p_i). Zero-probability branches are never
/// returned.
MeasurementOutcome measure_collapse(const PureState &s, const MeasurementSet &m, RandomStream &rng);

/// Zeroes off-diagonal entries in the computational basis.
DensityMatrix dephase(const DensityMatrix &rho);
DensityMatrix dephase(const PureState &s);

}  // namespace qentro

#endif
