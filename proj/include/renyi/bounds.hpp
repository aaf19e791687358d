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


#ifndef RENYI_BOUNDS_HPP
#define RENYI_BOUNDS_HPP

#include <cstddef>
#include <map>
#include <optional>

#include "renyi/slocc.hpp"
#include "renyi/spectra.hpp"

namespace renyi {

inline constexpr std::size_t kBetaGridPoints = 200;
inline constexpr double kBetaGridMin = 1e-4;
inline constexpr int kGoldenIterations = 30;

/// Monotonicity bound E_init / E_target, clamped to [0, 1].
double p_ree(double e_init, double e_target);

/// Unclamped ratio (expm1(c E_init) / expm1(c E_target)), c = s(1 - alpha).
/// Evaluated through exp(c (E_init - E_target)) when c E_target is large.
double gee_ratio(double e_init, double e_target, double c);

/// GEE probability bound for raising E_alpha from `e_alpha_init` to
/// `e_target`; s defaults to 1/alpha. Returns 1 when e_target <= e_alpha_init.
/// Orders within kOneBand of 1 take the P^REE limit. Throws DomainError for
/// (alpha, s) outside Omega.
double p_gee(double e_alpha_init, double e_target, double alpha, std::optional<double> s = std::nullopt);
double p_gee(double e_alpha_init, double e_target, const GeeParams &params);

/// The beta -> 0 limit of the GEE bound.
struct ZeroOrderLimit {
    enum class Kind { kValue, kUnbounded };
    Kind kind;
    /// Meaningful for kValue only.
    double value;

    bool unbounded() const {
        return kind == Kind::kUnbounded;
    }
};

/// 0 if log d < e_target, the G-concurrence d (prod lambda_i)^{1/d} if
/// log d == e_target within 1e-9, and unbounded if log d > e_target, where d
/// is the Schmidt rank.
ZeroOrderLimit alpha_zero_limit(const SchmidtVector &initial, double e_target);

struct OptimizedGeeBound {
    /// Clamped to [0, 1].
    double probability;
    double raw;
    /// Minimizing beta; 0 when the beta -> 0 limit wins.
    double argmin_beta;
};

/// min over beta in (0, alpha] of p_gee(E_beta(initial), e_target, beta,
/// 1/beta): a 200-point log grid on [1e-4, alpha], golden-section refinement
/// around the grid minimum and the beta -> 0 endpoint.
OptimizedGeeBound p_gee_opt(const SchmidtVector &initial, double e_target, double alpha);

/// exp(-n (1 - alpha) x / alpha) for 0 < alpha < 1.
double multicopy_tail_bound(std::size_t n, double alpha, double x);

/// Lower bound on E_alpha from outcome values E_gamma(Psi_m) with
/// gamma >= alpha (the caller's responsibility):
/// (1/c) log sum_m p_m exp(c E_gamma(Psi_m)), c = s (1 - alpha), s = 1/alpha
/// by default. alpha = 0 gives max_m of the values with p_m > 0 and
/// alpha = 1 gives the mean.
double estimate_e_alpha(const OutcomeEnsemble<double> &values, RenyiOrder alpha,
                        std::optional<double> s = std::nullopt);

/// Right-hand side (1/c)[sum_m p_m exp(c coE_m) - 1] of the mixed-state
/// monotone inequality; compare it against coE_{(alpha,s)}(rho). Requires
/// 0 < alpha < 1 and s <= 1/alpha.
double mixed_monotone_rhs(const OutcomeEnsemble<double> &co_values, double alpha, double s);

/// min over the supplied beta of c coE_beta / expm1(c e_target) with
/// c = (1 - beta)/beta, clamped to [0, 1]. Keys are beta in (0, alpha].
double mixed_probability_bound(const std::map<double, double> &co_e_by_beta, double e_target, double alpha);

struct BoundReport {
    double alpha;
    double e_initial;
    double e_target;
    /// Empty for alpha > 1, where the monotonicity bound is not valid.
    std::optional<double> p_ree;
    double p_ree_raw;
    double p_gee;
    double p_gee_raw;
    double p_gee_opt;
    double p_gee_opt_raw;
    double argmin_beta;
};

BoundReport bound_report(const SchmidtVector &initial, double e_target, double alpha);

}  // namespace renyi

#endif
