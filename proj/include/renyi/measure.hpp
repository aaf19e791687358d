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


#ifndef RENYI_MEASURE_HPP
#define RENYI_MEASURE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "renyi/linalg.hpp"
#include "renyi/random.hpp"
#include "renyi/slocc.hpp"
#include "renyi/spectra.hpp"

namespace renyi {

/// Outcomes below this probability are dropped before renormalizing.
inline constexpr double kDropProbability = 1e-14;

enum class Side { kA, kB };

/// Local instrument {K_m} with sum_m K_m^dagger K_m = I.
class KrausSet {
   public:
    /// Throws ValidationError for empty, non-square or mismatched operators
    /// and when the completeness residual (operator norm) exceeds `tolerance`.
    explicit KrausSet(std::vector<ComplexMatrix> operators, std::string label = {}, double tolerance = 1e-9);

    static KrausSet identity(Eigen::Index d);

    const std::vector<ComplexMatrix> &operators() const {
        return operators_;
    }
    std::size_t size() const {
        return operators_.size();
    }
    Eigen::Index dim() const {
        return operators_.front().rows();
    }
    const std::string &label() const {
        return label_;
    }
    /// || sum_m K_m^dagger K_m - I ||_op.
    double completeness_residual() const;

   private:
    std::vector<ComplexMatrix> operators_;
    std::string label_;
};

/// Random instrument K_m = G_m S^{-1/2} from Ginibre G_m, S = sum G^dagger G.
KrausSet random_instrument(Eigen::Index d, std::size_t outcomes, Rng &rng);

/// Post-measurement states (I (x) K_m) Psi (side B) or (K_m (x) I) Psi
/// (side A), normalized, with p_m the squared norms.
OutcomeEnsemble<BipartitePureState> apply_instrument_pure(const BipartitePureState &state, const KrausSet &kraus,
                                                          Side side = Side::kB);

/// Normalized local outcome states K_m rho K_m^dagger / p_m.
OutcomeEnsemble<ComplexMatrix> apply_instrument_local(const ComplexMatrix &rho, const KrausSet &kraus);

/// E_2 of each outcome state (Schmidt spectrum route).
OutcomeEnsemble<double> outcome_renyi2(const OutcomeEnsemble<BipartitePureState> &outcomes);

/// Ê_alpha from E_2 of the outcomes of measuring `state` on `side`.
double estimate_pure(const BipartitePureState &state, const KrausSet &kraus, Side side, RenyiOrder alpha);

/// Ê_alpha for a pure global state whose measured reduced state is `rho`:
/// the outcome REE equals S_2 of the outcome's local state.
double estimate_local(const ComplexMatrix &rho, const KrausSet &kraus, RenyiOrder alpha);

/// Unconstrained parameters of a two-outcome POVM {M, I - M}.
struct DichotomicPovmParams {
    /// m_i = 1 / (1 + exp(-eigen_raw_i)).
    std::vector<double> eigen_raw;
    /// Row-major d x d reals: diagonal, upper triangle (real parts) and lower
    /// triangle (imaginary parts) of the Hermitian generator H, V = exp(iH).
    std::vector<double> rotation_raw;

    Eigen::Index dim() const {
        return static_cast<Eigen::Index>(eigen_raw.size());
    }
    std::size_t parameter_count() const {
        return eigen_raw.size() + rotation_raw.size();
    }
    std::vector<double> flatten() const;
    static DichotomicPovmParams from_flat(std::span<const double> x, Eigen::Index d);
    /// Eigenvalues saturated at m = 1, so K_2 vanishes.
    static DichotomicPovmParams identity(Eigen::Index d);
};

/// M = V diag(m) V^dagger.
ComplexMatrix povm_element(const DichotomicPovmParams &params);

/// {V sqrt(m) V^dagger, V sqrt(1 - m) V^dagger}; complete by construction.
KrausSet decode_dichotomic(const DichotomicPovmParams &params);

/// Operator acting as `op` on site k (1-based, site 1 most significant) of
/// an n-qubit register.
ComplexMatrix site_operator(const ComplexMatrix &op, std::size_t n_sites, std::size_t k);

struct SpinScheme {
    std::string label;
    /// Bias of the z-axis POVM; empty for the Pauli projections.
    std::optional<double> epsilon;
    KrausSet kraus;
};

/// Pauli X, Y, Z projections on site k and the biased z-axis family
/// {(1-e)|up><up| + e|dn><dn|, e|up><up| + (1-e)|dn><dn|} for e on an
/// `epsilon_points` grid over [0, 0.5].
std::vector<SpinScheme> single_spin_schemes(std::size_t n_sites, std::size_t k, std::size_t epsilon_points = 21);

struct SiteLocation {
    Side side;
    /// 1-based index within the party.
    std::size_t site;
};

/// Chain site k (1-based) of an (N_A, N_B) split: sites 1..N_A are A.
SiteLocation locate_site(std::size_t n_a, std::size_t n_b, std::size_t k);

struct OptimizeOptions {
    std::size_t restarts = 16;
    /// Objective evaluations per restart.
    std::size_t budget = 2000;
    std::uint64_t seed = 0;
    std::size_t threads = 1;
    /// Standard deviation of the random starting parameters.
    double start_scale = 1.0;
};

struct OptimizedPovm {
    /// max over every evaluated POVM and the identity instrument.
    double estimate;
    DichotomicPovmParams params;
    ComplexMatrix element;
    std::uint64_t seed;
    double identity_estimate;
    bool identity_won;
    /// Largest estimate among optimizer iterates, identity excluded.
    double max_iterate;
    std::size_t evaluations;
};

using EstimateFunction = std::function<double(const KrausSet &)>;

/// Maximizes `estimate` over dichotomic POVMs on a d-dimensional party with
/// Nelder-Mead from `restarts` random starts. Restart r uses the stream
/// derive_seed(seed, r); the result is independent of `threads`.
OptimizedPovm optimize_dichotomic(Eigen::Index d, const EstimateFunction &estimate, const OptimizeOptions &options);

/// optimize_dichotomic over estimate_local(rho, ., alpha). alpha in [0, 2].
OptimizedPovm optimize_estimate(const ComplexMatrix &rho, RenyiOrder alpha, const OptimizeOptions &options);
/// Same, measuring subsystem B of a pure state.
OptimizedPovm optimize_estimate(const BipartitePureState &state, RenyiOrder alpha, const OptimizeOptions &options);

}  // namespace renyi

#endif
