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

#include "qentro/states.h"

#include <cmath>
#include <string>

#include "qentro/error.h"

namespace qentro {

namespace {

ComplexMatrix hermitian_part(const ComplexMatrix &m) {
    ComplexMatrix out = m;
    for (size_t r = 0; r < m.dim(); r++) {
        out(r, r) = m(r, r).real();
        for (size_t c = r + 1; c < m.dim(); c++) {
            Complex avg = 0.5 * (m(r, c) + std::conj(m(c, r)));
            out(r, c) = avg;
            out(c, r) = std::conj(avg);
        }
    }
    return out;
}

void require_unitary(const ComplexMatrix &u, size_t dim) {
    if (u.dim() != dim) {
        throw Error(
            ErrorCode::DimensionMismatch,
            "operator dimension " + std::to_string(u.dim()) + " vs state dimension " + std::to_string(dim));
    }
    if (!is_unitary(u, kUnitaryTolerance)) {
        throw Error(ErrorCode::NotUnitary, "U^dagger U differs from I by more than 1e-9");
    }
}

}  // namespace

PureState::PureState(ComplexVector amplitudes) : amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.size() < 2) {
        throw Error(ErrorCode::InvalidArgument, "a pure state needs at least two amplitudes");
    }
    for (const auto &z : amplitudes_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw Error(ErrorCode::NonFinite, "amplitudes must be finite");
        }
    }
    double n2 = 0;
    for (const auto &z : amplitudes_) {
        n2 += std::norm(z);
    }
    if (std::abs(n2 - 1) > kNormTolerance) {
        throw Error(ErrorCode::NotNormalized, "sum of |c_k|^2 is " + std::to_string(n2) + ", expected 1");
    }
}

PureState PureState::normalized(ComplexVector amplitudes) {
    double n = norm(amplitudes);
    if (!(n > 0) || !std::isfinite(n)) {
        throw Error(ErrorCode::NotNormalized, "cannot normalize a zero or non-finite vector");
    }
    for (auto &z : amplitudes) {
        z /= n;
    }
    return PureState(std::move(amplitudes));
}

PureState PureState::basis(size_t dim, size_t index) {
    if (index >= dim) {
        throw Error(ErrorCode::InvalidArgument, "basis index out of range");
    }
    ComplexVector v(dim);
    v[index] = 1;
    return PureState(std::move(v));
}

PureState PureState::from_angle(double theta) {
    return PureState(ComplexVector{std::cos(theta), std::sin(theta)});
}

std::vector<double> PureState::probabilities() const {
    std::vector<double> p(amplitudes_.size());
    for (size_t k = 0; k < p.size(); k++) {
        p[k] = std::norm(amplitudes_[k]);
    }
    return p;
}

PureState PureState::canonical() const {
    PureState out = *this;
    for (const auto &z : amplitudes_) {
        double mag = std::abs(z);
        if (mag > 1e-12) {
            Complex fix = std::conj(z) / mag;
            for (auto &w : out.amplitudes_) {
                w *= fix;
            }
            break;
        }
    }
    return out;
}

bool equal_up_to_phase(const PureState &a, const PureState &b, double tol) {
    if (a.dim() != b.dim()) {
        return false;
    }
    return std::abs(std::abs(inner(a.amplitudes(), b.amplitudes())) - 1) <= tol;
}

DensityMatrix::DensityMatrix(ComplexMatrix matrix) : matrix_(std::move(matrix)) {
    double asym = max_abs_diff(matrix_, conjugate_transpose(matrix_));
    if (asym > kDefaultTolerance) {
        throw Error(ErrorCode::NotADensityMatrix, "not Hermitian (max asymmetry " + std::to_string(asym) + ")");
    }
    Complex tr = matrix_.trace();
    if (std::abs(tr - Complex{1, 0}) > kDefaultTolerance) {
        throw Error(ErrorCode::NotADensityMatrix, "trace is " + std::to_string(tr.real()) + ", expected 1");
    }
    auto eig = hermitian_eigen(matrix_, kDefaultTolerance);
    if (eig.eigenvalues.front() < -kDefaultTolerance) {
        throw Error(
            ErrorCode::NotADensityMatrix,
            "not positive semidefinite (eigenvalue " + std::to_string(eig.eigenvalues.front()) + ")");
    }
}

bool approx_equal(const DensityMatrix &a, const DensityMatrix &b, double tol) {
    return approx_equal(a.matrix(), b.matrix(), tol);
}

void Ensemble::validate() const {
    if (pure_parts.empty() && !mixed_part) {
        throw Error(ErrorCode::WeightSumInvalid, "ensemble has no components");
    }
    size_t d = dim();
    double total = 0;
    for (const auto &part : pure_parts) {
        if (!(part.weight >= 0)) {
            throw Error(ErrorCode::WeightSumInvalid, "negative ensemble weight");
        }
        if (part.state.dim() != d) {
            throw Error(ErrorCode::DimensionMismatch, "ensemble components differ in dimension");
        }
        total += part.weight;
    }
    if (mixed_part) {
        if (!(mixed_part->weight >= 0)) {
            throw Error(ErrorCode::WeightSumInvalid, "negative ensemble weight");
        }
        if (mixed_part->rho.dim() != d) {
            throw Error(ErrorCode::DimensionMismatch, "ensemble components differ in dimension");
        }
        total += mixed_part->weight;
    }
    if (std::abs(total - 1) > kDefaultTolerance) {
        throw Error(ErrorCode::WeightSumInvalid, "weights sum to " + std::to_string(total) + ", expected 1");
    }
}

size_t Ensemble::dim() const {
    if (!pure_parts.empty()) {
        return pure_parts.front().state.dim();
    }
    if (mixed_part) {
        return mixed_part->rho.dim();
    }
    return 0;
}

MeasurementSet::MeasurementSet(std::vector<ComplexMatrix> operators, std::vector<std::string> labels)
    : operators_(std::move(operators)), labels_(std::move(labels)) {
    if (operators_.empty()) {
        throw Error(ErrorCode::IncompleteMeasurementSet, "no measurement operators");
    }
    if (labels_.size() != operators_.size()) {
        throw Error(ErrorCode::LengthMismatch, "one label per measurement operator is required");
    }
    size_t d = operators_.front().dim();
    ComplexMatrix sum(d);
    for (const auto &m : operators_) {
        if (m.dim() != d) {
            throw Error(ErrorCode::DimensionMismatch, "measurement operators differ in dimension");
        }
        sum += multiply(conjugate_transpose(m), m);
    }
    double gap = max_abs_diff(sum, ComplexMatrix::identity(d));
    if (gap > kCompletenessTolerance) {
        throw Error(
            ErrorCode::IncompleteMeasurementSet,
            "sum of M^dagger M differs from I by " + std::to_string(gap));
    }
}

MeasurementSet MeasurementSet::computational(size_t dim) {
    std::vector<ComplexMatrix> ops;
    std::vector<std::string> labels;
    for (size_t k = 0; k < dim; k++) {
        ComplexMatrix p(dim);
        p(k, k) = 1;
        ops.push_back(std::move(p));
        labels.push_back(std::to_string(k));
    }
    return MeasurementSet(std::move(ops), std::move(labels));
}

MeasurementSet MeasurementSet::rotated_qubit(double angle, std::string aligned_label, std::string orthogonal_label) {
    ComplexVector aligned{std::cos(angle), std::sin(angle)};
    ComplexVector orthogonal{-std::sin(angle), std::cos(angle)};
    return MeasurementSet(
        {ComplexMatrix::outer(aligned, aligned), ComplexMatrix::outer(orthogonal, orthogonal)},
        {std::move(aligned_label), std::move(orthogonal_label)});
}

DensityMatrix density_of_pure(const PureState &s) {
    return DensityMatrix(ComplexMatrix::outer(s.amplitudes(), s.amplitudes()));
}

DensityMatrix mix(const Ensemble &e) {
    e.validate();
    ComplexMatrix rho(e.dim());
    for (const auto &part : e.pure_parts) {
        rho += part.weight * ComplexMatrix::outer(part.state.amplitudes(), part.state.amplitudes());
    }
    if (e.mixed_part) {
        rho += e.mixed_part->weight * e.mixed_part->rho.matrix();
    }
    return DensityMatrix(hermitian_part(rho));
}

PureState evolve_unitary(const PureState &s, const ComplexMatrix &u) {
    require_unitary(u, s.dim());
    return PureState::normalized(apply(u, s.amplitudes()));
}

DensityMatrix evolve_unitary(const DensityMatrix &rho, const ComplexMatrix &u) {
    require_unitary(u, rho.dim());
    return DensityMatrix(hermitian_part(multiply(multiply(u, rho.matrix()), conjugate_transpose(u))));
}

std::vector<double> born_probabilities(const PureState &s, const MeasurementSet &m) {
    if (m.dim() != s.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "measurement and state dimensions differ");
    }
    std::vector<double> p(m.size());
    for (size_t i = 0; i < m.size(); i++) {
        auto branch = apply(m.op(i), s.amplitudes());
        p[i] = std::norm(norm(branch));
    }
    return p;
}

MeasurementOutcome measure_collapse(const PureState &s, const MeasurementSet &m, RandomStream &rng) {
    auto p = born_probabilities(s, m);
    double u = rng.uniform();
    double acc = 0;
    size_t chosen = m.size();
    size_t last_possible = m.size();
    for (size_t i = 0; i < p.size(); i++) {
        if (p[i] <= 0) {
            continue;
        }
        last_possible = i;
        acc += p[i];
        if (u < acc) {
            chosen = i;
            break;
        }
    }
    if (chosen == m.size()) {
        // Rounding left u just above the cumulative sum.
        chosen = last_possible;
    }
    if (chosen == m.size()) {
        throw Error(ErrorCode::ZeroProbabilityBranch, "every branch has probability zero");
    }
    auto branch = apply(m.op(chosen), s.amplitudes());
    return {chosen, m.label(chosen), PureState::normalized(std::move(branch))};
}

DensityMatrix dephase(const DensityMatrix &rho) {
    ComplexMatrix out(rho.dim());
    for (size_t k = 0; k < rho.dim(); k++) {
        out(k, k) = rho.matrix()(k, k).real();
    }
    return DensityMatrix(std::move(out));
}

DensityMatrix dephase(const PureState &s) {
    return DensityMatrix(ComplexMatrix::diagonal(s.probabilities()));
}

}  // namespace qentro
