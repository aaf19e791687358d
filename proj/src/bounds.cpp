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


#include "renyi/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "renyi/errors.hpp"

namespace renyi {

namespace {

// Above this c * E the expm1 ratio is rewritten around exp(-c E).
constexpr double kLogDomainThreshold = 30.0;

double clamp01(double p) {
    return std::clamp(p, 0.0, 1.0);
}

bool near_one(double alpha) {
    return std::abs(alpha - 1.0) < kOneBand;
}

// Unclamped bound at a single order beta with s = 1/beta.
double canonical_ratio(const SchmidtVector &initial, double e_target, double beta) {
    double e_beta = renyi_entropy(initial, beta);
    if (!(e_target > e_beta)) {
        return 1.0;
    }
    if (near_one(beta)) {
        return e_beta / e_target;
    }
    return gee_ratio(e_beta, e_target, (1.0 - beta) / beta);
}

}  // namespace

double p_ree(double e_init, double e_target) {
    if (!(e_target > 0)) {
        throw DomainError("P^REE needs a positive target entanglement");
    }
    return clamp01(e_init / e_target);
}

double gee_ratio(double e_init, double e_target, double c) {
    if (c == 0) {
        return e_init / e_target;
    }
    if (c > 0 && c * e_target > kLogDomainThreshold) {
        return std::exp(c * (e_init - e_target)) * (-std::expm1(-c * e_init)) / (-std::expm1(-c * e_target));
    }
    return std::expm1(c * e_init) / std::expm1(c * e_target);
}

double p_gee(double e_alpha_init, double e_target, double alpha, std::optional<double> s) {
    if (near_one(alpha)) {
        if (!(e_target > e_alpha_init)) {
            return 1.0;
        }
        return p_ree(e_alpha_init, e_target);
    }
    return p_gee(e_alpha_init, e_target, GeeParams(alpha, s.value_or(1.0 / alpha)));
}

double p_gee(double e_alpha_init, double e_target, const GeeParams &params) {
    if (!params.in_omega()) {
        throw DomainError("(alpha, s) = (" + std::to_string(params.alpha) + ", " + std::to_string(params.s) +
                          ") lies outside Omega");
    }
    if (!(e_target > e_alpha_init)) {
        return 1.0;
    }
    return clamp01(gee_ratio(e_alpha_init, e_target, params.scale()));
}

ZeroOrderLimit alpha_zero_limit(const SchmidtVector &initial, double e_target) {
    double d = static_cast<double>(initial.rank());
    double log_d = std::log(d);
    if (std::abs(log_d - e_target) <= 1e-9) {
        double mean_log = 0;
        for (double v : initial.values()) {
            if (v <= 0) {
                return {ZeroOrderLimit::Kind::kValue, 0.0};
            }
            mean_log += std::log(v);
        }
        mean_log /= d;
        return {ZeroOrderLimit::Kind::kValue, d * std::exp(mean_log)};
    }
    if (log_d < e_target) {
        return {ZeroOrderLimit::Kind::kValue, 0.0};
    }
    return {ZeroOrderLimit::Kind::kUnbounded, 0.0};
}

OptimizedGeeBound p_gee_opt(const SchmidtVector &initial, double e_target, double alpha) {
    if (!(alpha > 0)) {
        throw DomainError("optimized GEE bound needs alpha > 0");
    }
    auto objective = [&](double log_beta) { return canonical_ratio(initial, e_target, std::exp(log_beta)); };

    double lo = std::log(std::min(kBetaGridMin, alpha));
    double hi = std::log(alpha);
    std::vector<double> grid(kBetaGridPoints);
    std::vector<double> values(kBetaGridPoints);
    for (std::size_t i = 0; i < kBetaGridPoints; ++i) {
        double t = static_cast<double>(i) / static_cast<double>(kBetaGridPoints - 1);
        grid[i] = lo + t * (hi - lo);
        values[i] = objective(grid[i]);
    }
    std::size_t best_i = static_cast<std::size_t>(std::min_element(values.begin(), values.end()) - values.begin());
    double best_log_beta = grid[best_i];
    double best = values[best_i];

    double a = grid[best_i == 0 ? 0 : best_i - 1];
    double b = grid[std::min(best_i + 1, kBetaGridPoints - 1)];
    if (b > a) {
        const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
        double x1 = b - inv_phi * (b - a);
        double x2 = a + inv_phi * (b - a);
        double f1 = objective(x1);
        double f2 = objective(x2);
        for (int it = 0; it < kGoldenIterations; ++it) {
            if (f1 <= f2) {
                b = x2;
                x2 = x1;
                f2 = f1;
                x1 = b - inv_phi * (b - a);
                f1 = objective(x1);
            } else {
                a = x1;
                x1 = x2;
                f1 = f2;
                x2 = a + inv_phi * (b - a);
                f2 = objective(x2);
            }
        }
        for (auto [x, f] : {std::pair{x1, f1}, std::pair{x2, f2}}) {
            if (f < best) {
                best = f;
                best_log_beta = x;
            }
        }
    }

    OptimizedGeeBound out{clamp01(best), best, std::exp(best_log_beta)};
    ZeroOrderLimit limit = alpha_zero_limit(initial, e_target);
    if (!limit.unbounded() && limit.value < best) {
        out = {clamp01(limit.value), limit.value, 0.0};
    }
    return out;
}

double multicopy_tail_bound(std::size_t n, double alpha, double x) {
    if (!(alpha > 0 && alpha < 1)) {
        throw DomainError("multi-copy tail bound needs 0 < alpha < 1");
    }
    if (n < 1) {
        throw ValidationError("multi-copy tail bound needs n >= 1");
    }
    return std::exp(-static_cast<double>(n) * (1.0 - alpha) / alpha * x);
}

double estimate_e_alpha(const OutcomeEnsemble<double> &values, RenyiOrder alpha, std::optional<double> s) {
    if (values.empty()) {
        throw ValidationError("estimate needs a non-empty outcome ensemble");
    }
    switch (alpha.kind()) {
        case RenyiOrder::Kind::kZero: {
            double best = -std::numeric_limits<double>::infinity();
            for (const auto &item : values) {
                if (item.probability > 0) {
                    best = std::max(best, item.payload);
                }
            }
            return best;
        }
        case RenyiOrder::Kind::kOne: {
            double mean = 0;
            for (const auto &item : values) {
                mean += item.probability * item.payload;
            }
            return mean;
        }
        case RenyiOrder::Kind::kGeneric:
            break;
    }
    GeeParams params(alpha.alpha(), s.value_or(1.0 / alpha.alpha()));
    if (!params.in_omega()) {
        throw DomainError("estimate requires (alpha, s) in Omega");
    }
    double c = params.scale();
    std::vector<double> terms;
    terms.reserve(values.size());
    for (const auto &item : values) {
        if (item.probability > 0) {
            terms.push_back(c * item.payload + std::log(item.probability));
        }
    }
    if (terms.empty()) {
        throw ValidationError("estimate needs an outcome with positive probability");
    }
    double m = *std::max_element(terms.begin(), terms.end());
    double sum = 0;
    for (double t : terms) {
        sum += std::exp(t - m);
    }
    return (m + std::log(sum)) / c;
}

double mixed_monotone_rhs(const OutcomeEnsemble<double> &co_values, double alpha, double s) {
    if (!(alpha > 0 && alpha < 1)) {
        throw DomainError("mixed-state inequality needs 0 < alpha < 1");
    }
    if (s == 0 || s > 1.0 / alpha) {
        throw DomainError("mixed-state inequality needs s != 0 and s <= 1/alpha");
    }
    double c = s * (1.0 - alpha);
    double total = 0;
    double mass = 0;
    for (const auto &item : co_values) {
        total += item.probability * std::expm1(c * item.payload);
        mass += item.probability;
    }
    return (total + (mass - 1.0)) / c;
}

double mixed_probability_bound(const std::map<double, double> &co_e_by_beta, double e_target, double alpha) {
    if (co_e_by_beta.empty()) {
        throw ValidationError("mixed probability bound needs at least one beta");
    }
    if (!(e_target > 0)) {
        throw DomainError("mixed probability bound needs a positive target");
    }
    double best = std::numeric_limits<double>::infinity();
    for (const auto &[beta, co_e] : co_e_by_beta) {
        if (!(beta > 0) || beta > alpha + 1e-12) {
            throw DomainError("beta = " + std::to_string(beta) + " outside (0, alpha]");
        }
        double value;
        if (near_one(beta)) {
            value = co_e / e_target;
        } else {
            double c = (1.0 - beta) / beta;
            if (c > 0 && c * e_target > kLogDomainThreshold) {
                value = c * co_e * std::exp(-c * e_target) / (-std::expm1(-c * e_target));
            } else {
                value = c * co_e / std::expm1(c * e_target);
            }
        }
        best = std::min(best, value);
    }
    return clamp01(best);
}

BoundReport bound_report(const SchmidtVector &initial, double e_target, double alpha) {
    double e_init = renyi_entropy(initial, alpha);
    BoundReport report{};
    report.alpha = alpha;
    report.e_initial = e_init;
    report.e_target = e_target;
    report.p_ree_raw = e_init / e_target;
    if (alpha <= 1.0 || near_one(alpha)) {
        report.p_ree = clamp01(report.p_ree_raw);
    }
    if (near_one(alpha)) {
        report.p_gee_raw = report.p_ree_raw;
    } else {
        report.p_gee_raw = gee_ratio(e_init, e_target, (1.0 - alpha) / alpha);
    }
    report.p_gee = p_gee(e_init, e_target, alpha);
    OptimizedGeeBound opt = p_gee_opt(initial, e_target, alpha);
    report.p_gee_opt = opt.probability;
    report.p_gee_opt_raw = opt.raw;
    report.argmin_beta = opt.argmin_beta;
    return report;
}

}  // namespace renyi
