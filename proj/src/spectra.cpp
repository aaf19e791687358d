// Copyright 2026 The renyi-slocc Authors
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

#include "renyi/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>

#include "renyi/errors.hpp"

namespace renyi {

namespace {

// Clips tiny negatives, drops values <= threshold, sorts descending and
// renormalizes. Returns the pre-trim total for callers that validate it.
double canonicalize(std::vector<double> &values, double zero_threshold) {
    double total = 0;
    for (double &v : values) {
        if (!std::isfinite(v)) {
            throw ValidationError("spectrum contains a non-finite value");
        }
        if (v < -kNegativeClip) {
            throw ValidationError("spectrum contains negative value " + std::to_string(v));
        }
        v = std::max(v, 0.0);
        total += v;
    }
    std::erase_if(values, [&](double v) { return v <= zero_threshold; });
    if (values.empty()) {
        throw ValidationError("spectrum is empty after zero trimming");
    }
    std::sort(values.begin(), values.end(), std::greater<>());
    // Ascending summation is the accurate direction for a descending list.
    double kept = std::accumulate(values.rbegin(), values.rend(), 0.0);
    for (double &v : values) {
        v /= kept;
    }
    return total;
}

double shannon(std::span<const double> p) {
    double h = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        if (*it > 0) {
            h -= *it * std::log(*it);
        }
    }
    return h;
}

double renyi_of_canonical(std::span<const double> p, RenyiOrder order) {
    switch (order.kind()) {
        case RenyiOrder::Kind::kZero:
            return std::log(static_cast<double>(p.size()));
        case RenyiOrder::Kind::kOne:
            return shannon(p);
        case RenyiOrder::Kind::kGeneric:
            break;
    }
    double a = order.alpha();
    double sum = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        sum += std::pow(*it, a);
    }
    return std::log(sum) / (1.0 - a);
}

}  // namespace

SchmidtVector::SchmidtVector(std::vector<double> values, double zero_threshold) : values_(std::move(values)) {
    double total = canonicalize(values_, zero_threshold);
    if (std::abs(total - 1.0) > 1e-8) {
        throw ValidationError("Schmidt values sum to " + std::to_string(total) + ", expected 1");
    }
}

SchmidtVector SchmidtVector::from_weights(std::vector<double> weights, double zero_threshold) {
    SchmidtVector out;
    out.values_ = std::move(weights);
    canonicalize(out.values_, zero_threshold);
    return out;
}

SchmidtVector SchmidtVector::geometric(double r, std::size_t d) {
    if (!(r > 0) || d == 0) {
        throw ValidationError("geometric spectrum needs r > 0 and d >= 1");
    }
    std::vector<double> w(d);
    double term = 1.0;
    for (std::size_t i = 0; i < d; ++i) {
        term *= r;
        w[i] = term;
    }
    return from_weights(std::move(w), 0.0);
}

SchmidtVector SchmidtVector::uniform(std::size_t k) {
    if (k == 0) {
        throw ValidationError("uniform spectrum needs k >= 1");
    }
    return SchmidtVector(std::vector<double>(k, 1.0 / static_cast<double>(k)), 0.0);
}

BipartitePureState::BipartitePureState(ComplexMatrix amplitudes) : amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.size() == 0) {
        throw ValidationError("pure state has empty amplitude matrix");
    }
    double norm = amplitudes_.norm();
    if (!std::isfinite(norm) || std::abs(norm - 1.0) > 1e-8) {
        throw ValidationError("pure state norm " + std::to_string(norm) + " deviates from 1 by more than 1e-8");
    }
    amplitudes_ /= norm;
}

BipartitePureState BipartitePureState::from_vector(const ComplexVector &v, Eigen::Index dim_a, Eigen::Index dim_b) {
    if (v.size() != dim_a * dim_b) {
        throw ValidationError("state vector length does not match dim_a * dim_b");
    }
    ComplexMatrix m(dim_a, dim_b);
    for (Eigen::Index a = 0; a < dim_a; ++a) {
        for (Eigen::Index b = 0; b < dim_b; ++b) {
            m(a, b) = v(a * dim_b + b);
        }
    }
    return BipartitePureState(std::move(m));
}

BipartitePureState BipartitePureState::from_schmidt(const SchmidtVector &p) {
    auto d = static_cast<Eigen::Index>(p.rank());
    ComplexMatrix m = ComplexMatrix::Zero(d, d);
    for (Eigen::Index i = 0; i < d; ++i) {
        m(i, i) = std::sqrt(p[static_cast<std::size_t>(i)]);
    }
    return BipartitePureState(std::move(m));
}

ComplexVector BipartitePureState::as_vector() const {
    ComplexVector v(amplitudes_.size());
    for (Eigen::Index a = 0; a < dim_a(); ++a) {
        for (Eigen::Index b = 0; b < dim_b(); ++b) {
            v(a * dim_b() + b) = amplitudes_(a, b);
        }
    }
    return v;
}

SchmidtVector BipartitePureState::schmidt() const {
    return schmidt_decompose(*this);
}

ComplexMatrix BipartitePureState::rho_a() const {
    return reduced_density_a(amplitudes_);
}

ComplexMatrix BipartitePureState::rho_b() const {
    return reduced_density_b(amplitudes_);
}

RenyiOrder::RenyiOrder(double alpha) {
    if (std::isnan(alpha) || alpha < 0) {
        throw DomainError("Renyi order must be >= 0, got " + std::to_string(alpha));
    }
    if (alpha == 0) {
        kind_ = Kind::kZero;
        alpha_ = 0;
    } else if (std::abs(alpha - 1.0) < kOneBand) {
        kind_ = Kind::kOne;
        alpha_ = 1;
    } else {
        kind_ = Kind::kGeneric;
        alpha_ = alpha;
    }
}

GeeParams::GeeParams(double alpha_, double s_) : alpha(alpha_), s(s_) {
    if (!(alpha > 0) || !std::isfinite(alpha)) {
        throw DomainError("GEE order must be positive and finite");
    }
    if (std::abs(alpha - 1.0) < kOneBand) {
        throw DomainError("GEE is undefined at alpha = 1; use gee_limit_one");
    }
    if (s == 0 || !std::isfinite(s)) {
        throw DomainError("GEE parameter s must be finite and nonzero");
    }
}

bool GeeParams::in_omega() const {
    if (alpha < 1) {
        return s <= 1.0 / alpha;
    }
    return s >= 1.0 / alpha;
}

SchmidtVector schmidt_decompose(const BipartitePureState &state) {
    Eigen::BDCSVD<ComplexMatrix> svd(state.amplitudes());
    const RealVector &sv = svd.singularValues();
    std::vector<double> values(static_cast<std::size_t>(sv.size()));
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        values[static_cast<std::size_t>(i)] = sv(i) * sv(i);
    }
    return SchmidtVector::from_weights(std::move(values), kZeroThreshold);
}

double renyi_entropy(std::span<const double> p, RenyiOrder order) {
    std::vector<double> values(p.begin(), p.end());
    double total = canonicalize(values, kZeroThreshold);
    if (std::abs(total - 1.0) > 1e-8) {
        throw ValidationError("probability vector sums to " + std::to_string(total));
    }
    return renyi_of_canonical(values, order);
}

double renyi_entropy(const SchmidtVector &p, RenyiOrder order) {
    return renyi_of_canonical(p.values(), order);
}

double ree(const BipartitePureState &state, RenyiOrder order) {
    return renyi_entropy(schmidt_decompose(state), order);
}

double gee(const SchmidtVector &p, const GeeParams &params) {
    double c = params.scale();
    return std::expm1(c * renyi_entropy(p, params.alpha)) / c;
}

double gee(std::span<const double> p, const GeeParams &params) {
    double c = params.scale();
    return std::expm1(c * renyi_entropy(p, params.alpha)) / c;
}

double gee_limit_one(const SchmidtVector &p) {
    return shannon(p.values());
}

}  // namespace renyi
