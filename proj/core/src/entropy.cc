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

#include "qentro/entropy.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>

#include "qentro/error.h"
#include "qentro/parallel.h"
#include "qentro/random.h"

namespace qentro {

namespace {

constexpr double kClampTolerance = 1e-10;

// -x ln x, with 0 ln 0 = 0.
double entropy_term(double x) {
    return x > 0 ? -x * std::log(x) : 0.0;
}

double nats_to(LogBase base, double nats) {
    return base == LogBase::Bits ? nats / std::numbers::ln2 : nats;
}

// Entropy of a weight vector whose entries may carry tiny negative rounding noise.
EntropyResult entropy_of_weights(std::span<const double> weights, LogBase base) {
    double nats = 0;
    for (double w : weights) {
        nats += entropy_term(w >= -kClampTolerance && w <= 0 ? 0.0 : w);
    }
    return {std::max(0.0, nats_to(base, nats)) + 0.0, base};
}

// Argmin of a function with the given period. A coarse grid picks the basin, then a
// golden section search refines it.
template <typename F>
double golden_minimize_periodic(F f, double period) {
    constexpr int kGrid = 24;
    double step = period / kGrid;
    int best = 0;
    double best_value = f(0.0);
    for (int i = 1; i < kGrid; i++) {
        double v = f(i * step);
        if (v < best_value) {
            best_value = v;
            best = i;
        }
    }
    const double inv_phi = (std::sqrt(5.0) - 1) / 2;
    double lo = (best - 1) * step;
    double hi = (best + 1) * step;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = f(x1);
    double f2 = f(x2);
    for (int it = 0; it < 80 && hi - lo > 1e-13; it++) {
        if (f1 < f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f(x2);
        }
    }
    double x = 0.5 * (lo + hi);
    return f(x) <= best_value ? x : best * step;
}

// In-place left action of givens_rotation(p, q, theta, phi) on the rows of m.
void rotate_rows(ComplexMatrix &m, size_t p, size_t q, double c, double s, Complex e) {
    for (size_t k = 0; k < m.dim(); k++) {
        Complex mp = m(p, k);
        Complex mq = m(q, k);
        m(p, k) = c * mp - e * s * mq;
        m(q, k) = std::conj(e) * s * mp + c * mq;
    }
}

// In-place right action of the adjoint rotation on the columns of m.
void rotate_columns_adjoint(ComplexMatrix &m, size_t p, size_t q, double c, double s, Complex e) {
    for (size_t k = 0; k < m.dim(); k++) {
        Complex mp = m(k, p);
        Complex mq = m(k, q);
        m(k, p) = c * mp - std::conj(e) * s * mq;
        m(k, q) = e * s * mp + c * mq;
    }
}

struct StartResult {
    ComplexMatrix u;
    double value_nats = 0;
    int sweeps = 0;
    bool converged = false;
};

double diagonal_entropy_nats(const ComplexMatrix &m) {
    double nats = 0;
    for (size_t k = 0; k < m.dim(); k++) {
        nats += entropy_term(m(k, k).real());
    }
    return nats;
}

StartResult minimize_from(const ComplexMatrix &rho, RandomStream rng, int max_sweeps) {
    size_t n = rho.dim();
    ComplexMatrix u = ComplexMatrix::identity(n);
    for (size_t k = 0; k < n; k++) {
        double phase = 2 * std::numbers::pi * rng.uniform();
        u(k, k) = std::polar(1.0, phase);
    }
    for (size_t p = 0; p + 1 < n; p++) {
        for (size_t q = p + 1; q < n; q++) {
            double theta = 2 * std::numbers::pi * rng.uniform();
            double phi = 2 * std::numbers::pi * rng.uniform();
            rotate_rows(u, p, q, std::cos(theta), std::sin(theta), std::polar(1.0, phi));
        }
    }
    ComplexMatrix m = multiply(multiply(u, rho), conjugate_transpose(u));

    StartResult out;
    for (int sweep = 1; sweep <= max_sweeps; sweep++) {
        out.sweeps = sweep;
        double gained = 0;
        for (size_t p = 0; p + 1 < n; p++) {
            for (size_t q = p + 1; q < n; q++) {
                double a = m(p, p).real();
                double d = m(q, q).real();
                Complex b = m(p, q);
                if (std::abs(b) == 0) {
                    continue;
                }
                double t = a + d;
                // Only the (p, p) and (q, q) diagonal entries move under this rotation.
                auto pair_entropy = [&](double theta, double phi) {
                    double c = std::cos(theta);
                    double s = std::sin(theta);
                    double x = c * c * a + s * s * d - 2 * c * s * std::real(std::polar(1.0, -phi) * b);
                    return entropy_term(x) + entropy_term(t - x);
                };
                double before = entropy_term(a) + entropy_term(d);
                double phi = golden_minimize_periodic(
                    [&](double ph) { return pair_entropy(std::numbers::pi / 8, ph); }, 2 * std::numbers::pi);
                double theta = golden_minimize_periodic(
                    [&](double th) { return pair_entropy(th, phi); }, std::numbers::pi);
                double after = pair_entropy(theta, phi);
                if (after < before) {
                    double c = std::cos(theta);
                    double s = std::sin(theta);
                    Complex e = std::polar(1.0, phi);
                    rotate_rows(m, p, q, c, s, e);
                    rotate_columns_adjoint(m, p, q, c, s, e);
                    rotate_rows(u, p, q, c, s, e);
                    gained += before - after;
                }
            }
        }
        if (gained <= 1e-15) {
            out.converged = true;
            break;
        }
    }
    out.u = std::move(u);
    out.value_nats = diagonal_entropy_nats(m);
    return out;
}

}  // namespace

std::string_view base_label(LogBase base) {
    return base == LogBase::Bits ? "bits" : "nats";
}

double log_in(LogBase base, double x) {
    return base == LogBase::Bits ? std::log2(x) : std::log(x);
}

ProbabilityVector::ProbabilityVector(std::vector<double> probs) : probs_(std::move(probs)) {
    if (probs_.empty()) {
        throw Error(ErrorCode::InvalidDistribution, "empty distribution");
    }
    double total = 0;
    for (double p : probs_) {
        if (!std::isfinite(p) || p < 0) {
            throw Error(ErrorCode::InvalidDistribution, "probabilities must be finite and non-negative");
        }
        total += p;
    }
    if (std::abs(total - 1) > kDefaultTolerance) {
        throw Error(ErrorCode::InvalidDistribution, "probabilities sum to " + std::to_string(total));
    }
}

EntropyResult shannon(const ProbabilityVector &p, LogBase base) {
    return entropy_of_weights(p.probs(), base);
}

EntropyResult differential_entropy(const TabulatedDensity &pdf, LogBase base) {
    if (pdf.values.size() < 2 || !(pdf.dx > 0) || !std::isfinite(pdf.dx)) {
        throw Error(ErrorCode::NotADensity, "need at least two grid points with positive spacing");
    }
    double mass = 0;
    double nats = 0;
    for (size_t k = 0; k < pdf.values.size(); k++) {
        double f = pdf.values[k];
        if (!std::isfinite(f) || f < 0) {
            throw Error(ErrorCode::NotADensity, "density values must be finite and non-negative");
        }
        double w = (k == 0 || k + 1 == pdf.values.size()) ? 0.5 * pdf.dx : pdf.dx;
        mass += w * f;
        nats += w * entropy_term(f);
    }
    if (std::abs(mass - 1) > 1e-6) {
        throw Error(ErrorCode::NotADensity, "density integrates to " + std::to_string(mass));
    }
    return {nats_to(base, nats) + 0.0, base};
}

EntropyResult quantized_entropy(EntropyResult h, double delta_x) {
    if (!(delta_x > 0) || !std::isfinite(delta_x)) {
        throw Error(ErrorCode::NonpositivePrecision, "precision must be positive");
    }
    return {h.value - log_in(h.base, delta_x) + 0.0, h.base};
}

EntropyResult von_neumann(const DensityMatrix &rho, LogBase base) {
    auto eig = hermitian_eigen(rho.matrix(), kDefaultTolerance);
    return entropy_of_weights(eig.eigenvalues, base);
}

EntropyResult informational(const DensityMatrix &rho, LogBase base) {
    auto diag = rho.diagonal();
    return entropy_of_weights(diag, base);
}

EntropyResult pure_entropy(const PureState &s, LogBase base) {
    auto p = s.probabilities();
    return entropy_of_weights(p, base);
}

BoundCheck ensemble_bound_check(const Ensemble &e, LogBase base) {
    double lhs = informational(mix(e), base).value;
    double rhs = 0;
    for (const auto &part : e.pure_parts) {
        rhs += part.weight * pure_entropy(part.state, base).value;
    }
    if (e.mixed_part) {
        rhs += e.mixed_part->weight * von_neumann(e.mixed_part->rho, base).value;
    }
    return {lhs, rhs, lhs >= rhs - 1e-9};
}

ComplexMatrix givens_rotation(size_t dim, size_t p, size_t q, double theta, double phi) {
    if (p >= dim || q >= dim || p == q) {
        throw Error(ErrorCode::InvalidArgument, "rotation plane must name two distinct indices");
    }
    ComplexMatrix g = ComplexMatrix::identity(dim);
    rotate_rows(g, p, q, std::cos(theta), std::sin(theta), std::polar(1.0, phi));
    return g;
}

UnitaryMinimizationReport min_informational_over_unitaries(
    const DensityMatrix &rho, LogBase base, const UnitaryMinimizerOptions &options) {
    if (options.starts < 1 || options.max_sweeps < 1) {
        throw Error(ErrorCode::InvalidArgument, "need at least one start and one sweep");
    }
    const ComplexMatrix &m = rho.matrix();
    auto results = parallel_map<std::optional<StartResult>>(options.starts, [&](size_t start) {
        return std::optional<StartResult>(
            minimize_from(m, RandomStream::derive(options.seed, start), options.max_sweeps));
    });
    size_t best = 0;
    for (size_t k = 1; k < results.size(); k++) {
        if (results[k]->value_nats < results[best]->value_nats) {
            best = k;
        }
    }
    StartResult &winner = *results[best];

    UnitaryMinimizationReport report;
    report.base = base;
    report.minimizer = winner.u;
    report.min_value = std::max(0.0, nats_to(base, winner.value_nats));
    report.iterations = winner.sweeps;
    report.budget_exhausted = !winner.converged;
    report.von_neumann = von_neumann(rho, base).value;
    report.residual_vs_von_neumann = report.min_value - report.von_neumann;
    return report;
}

EntropyResult bekenstein_bound(double area_planck_units, LogBase base) {
    if (!(area_planck_units >= 0) || !std::isfinite(area_planck_units)) {
        throw Error(ErrorCode::NegativeArea, "area must be a finite non-negative number");
    }
    return {nats_to(base, area_planck_units / 4) + 0.0, base};
}

}  // namespace qentro
