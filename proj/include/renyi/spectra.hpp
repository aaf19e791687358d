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

#ifndef RENYI_SPECTRA_HPP
#define RENYI_SPECTRA_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "renyi/linalg.hpp"

namespace renyi {

/// Values at or below this are treated as zero when trimming numerically
/// obtained spectra (SVD noise floor at double precision).
inline constexpr double kZeroThreshold = 1e-12;

/// Orders with |alpha - 1| below this use the Shannon branch.
inline constexpr double kOneBand = 1e-6;

/// Descending, normalized squared Schmidt coefficients.
///
/// Entries at or below `zero_threshold` are dropped, so `rank()` is simply the
/// number of stored values. Analytic spectra with legitimately tiny tails
/// (e.g. a geometric spectrum at d = 500) are built with threshold 0.
class SchmidtVector {
   public:
    /// `values` must already sum to 1 within 1e-8.
    explicit SchmidtVector(std::vector<double> values, double zero_threshold = kZeroThreshold);

    /// Normalizes arbitrary non-negative weights.
    static SchmidtVector from_weights(std::vector<double> weights, double zero_threshold = kZeroThreshold);
    /// lambda_i proportional to r^i for i = 1..d, kept at full rank d.
    static SchmidtVector geometric(double r, std::size_t d);
    /// Flat spectrum of the rank-k maximally entangled state.
    static SchmidtVector uniform(std::size_t k);

    const std::vector<double> &values() const {
        return values_;
    }
    std::size_t rank() const {
        return values_.size();
    }
    double operator[](std::size_t i) const {
        return values_[i];
    }

   private:
    SchmidtVector() = default;
    std::vector<double> values_;
};

/// Amplitude matrix psi(a, b) of a normalized pure state on H_A (x) H_B.
class BipartitePureState {
   public:
    /// Throws ValidationError if the Frobenius norm deviates from 1 by more
    /// than 1e-8; the stored amplitudes are then renormalized exactly.
    explicit BipartitePureState(ComplexMatrix amplitudes);

    /// Reshapes a state vector whose index is a * dim_b + b.
    static BipartitePureState from_vector(const ComplexVector &v, Eigen::Index dim_a, Eigen::Index dim_b);
    /// sum_i sqrt(lambda_i) |ii>.
    static BipartitePureState from_schmidt(const SchmidtVector &p);

    const ComplexMatrix &amplitudes() const {
        return amplitudes_;
    }
    Eigen::Index dim_a() const {
        return amplitudes_.rows();
    }
    Eigen::Index dim_b() const {
        return amplitudes_.cols();
    }
    ComplexVector as_vector() const;

    SchmidtVector schmidt() const;
    ComplexMatrix rho_a() const;
    ComplexMatrix rho_b() const;

   private:
    ComplexMatrix amplitudes_;
};

/// Renyi order alpha >= 0 with the alpha -> 0 and alpha -> 1 limits as
/// explicit branches.
class RenyiOrder {
   public:
    enum class Kind { kZero, kOne, kGeneric };

    /// Throws DomainError for alpha < 0 or NaN. alpha == 0 maps to kZero and
    /// |alpha - 1| < kOneBand maps to kOne.
    RenyiOrder(double alpha);  // NOLINT(google-explicit-constructor)

    static RenyiOrder zero() {
        return RenyiOrder(0.0);
    }
    static RenyiOrder one() {
        return RenyiOrder(1.0);
    }

    Kind kind() const {
        return kind_;
    }
    /// 0 or 1 exactly for the limit branches.
    double alpha() const {
        return alpha_;
    }

   private:
    Kind kind_;
    double alpha_;
};

/// (alpha, s) of the generalized entanglement entropy.
struct GeeParams {
    double alpha;
    double s;

    /// Throws DomainError unless alpha > 0, |alpha - 1| >= kOneBand, s != 0.
    GeeParams(double alpha, double s);
    /// The tightest choice s = 1/alpha.
    static GeeParams canonical(double alpha) {
        return GeeParams(alpha, 1.0 / alpha);
    }

    /// (0 < alpha < 1 and s <= 1/alpha) or (alpha > 1 and s >= 1/alpha).
    bool in_omega() const;
    /// s (1 - alpha), the exponent scale that appears everywhere.
    double scale() const {
        return s * (1.0 - alpha);
    }
};

SchmidtVector schmidt_decompose(const BipartitePureState &state);

/// Renyi entropy in nats of a probability vector. Entries below
/// kZeroThreshold are dropped and the rest renormalized first.
double renyi_entropy(std::span<const double> p, RenyiOrder order);
/// Same, using the stored (already trimmed) Schmidt values.
double renyi_entropy(const SchmidtVector &p, RenyiOrder order);

/// Renyi entanglement entropy of a pure state.
double ree(const BipartitePureState &state, RenyiOrder order);

/// Generalized entanglement entropy expm1(s(1-alpha) S_alpha) / (s(1-alpha)).
double gee(const SchmidtVector &p, const GeeParams &params);
double gee(std::span<const double> p, const GeeParams &params);

/// The alpha -> 1 limit of the GEE for any s, i.e. the Shannon entropy.
double gee_limit_one(const SchmidtVector &p);

}  // namespace renyi

#endif
