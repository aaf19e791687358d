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

#include "renyi/slocc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace renyi {

namespace {

constexpr double kEpsilonTolerance = 1e-12;
constexpr double kEntanglementTolerance = 1e-9;

}  // namespace

double tail_sum(const SchmidtVector &p, std::size_t l) {
    if (l < 1 || l > p.rank()) {
        throw std::out_of_range("tail index " + std::to_string(l) + " outside 1.." + std::to_string(p.rank()));
    }
    double total = 0;
    for (std::size_t i = p.rank(); i >= l; --i) {
        total += p[i - 1];
    }
    return total;
}

std::vector<double> tail_sums(const SchmidtVector &p, std::size_t d) {
    std::vector<double> tails(d, 0.0);
    double running = 0;
    for (std::size_t i = d; i >= 1; --i) {
        if (i <= p.rank()) {
            running += p[i - 1];
        }
        tails[i - 1] = running;
    }
    return tails;
}

MajorizationReport majorization_check(const SchmidtVector &initial, const OutcomeEnsemble<SchmidtVector> &ensemble) {
    std::size_t d = initial.rank();
    for (const auto &item : ensemble) {
        d = std::max(d, item.payload.rank());
    }
    std::vector<double> slack = tail_sums(initial, d);
    for (const auto &item : ensemble) {
        std::vector<double> tails = tail_sums(item.payload, d);
        for (std::size_t l = 0; l < d; ++l) {
            slack[l] -= item.probability * tails[l];
        }
    }
    auto worst = std::min_element(slack.begin(), slack.end());
    MajorizationReport report{
        .feasible = *worst >= -kFeasibilitySlack,
        .slack = slack,
        .worst_index = static_cast<std::size_t>(worst - slack.begin()) + 1,
        .worst_slack = *worst,
    };
    return report;
}

double optimal_transition_probability(const SchmidtVector &initial, const SchmidtVector &target) {
    if (target.rank() > initial.rank()) {
        return 0.0;
    }
    std::size_t d = initial.rank();
    std::vector<double> ta = tail_sums(initial, d);
    std::vector<double> tb = tail_sums(target, d);
    double best = 1.0;
    for (std::size_t l = 0; l < d; ++l) {
        if (tb[l] > 0) {
            best = std::min(best, ta[l] / tb[l]);
        }
    }
    return std::clamp(best, 0.0, 1.0);
}

PhiKResult phi_k_distillation(const SchmidtVector &initial, std::size_t k) {
    if (k < 2) {
        throw ValidationError("Phi_k distillation needs k >= 2");
    }
    if (k > initial.rank()) {
        return {0.0, true};
    }
    return {optimal_transition_probability(initial, SchmidtVector::uniform(k)), false};
}

double phi_k_envelope(const SchmidtVector &initial, double e_target) {
    if (e_target <= 0) {
        return 1.0;
    }
    auto k = static_cast<std::size_t>(std::ceil(std::exp(e_target) - 1e-9));
    k = std::max<std::size_t>(k, 2);
    // Guard against exp/ceil rounding on exact log k targets.
    while (k > 2 && std::log(static_cast<double>(k - 1)) >= e_target - 1e-12) {
        --k;
    }
    return phi_k_distillation(initial, k).probability;
}

ProtocolTrace mix_protocol(const SchmidtVector &initial, double e_target, RenyiOrder order, std::size_t max_rounds) {
    const std::size_t d = initial.rank();
    const double log_d = std::log(static_cast<double>(d));
    if (e_target > log_d + 1e-12) {
        throw InfeasibleError("target entanglement exceeds log of the Schmidt rank", d);
    }
    if (max_rounds == 0) {
        max_rounds = 10 * d;
    }

    std::vector<double> current = initial.values();
    double entanglement = renyi_entropy(initial, order);
    std::vector<ProtocolRound> rounds;
    bool converged = entanglement >= e_target - kEntanglementTolerance;

    auto entropy_of = [&](const std::vector<double> &values) {
        return renyi_entropy(SchmidtVector::from_weights(values, 0.0), order);
    };

    while (!converged && rounds.size() < max_rounds) {
        double largest = current.front();
        double smallest = current.back();
        if (largest - smallest <= 0) {
            break;
        }
        SchmidtVector before = SchmidtVector::from_weights(current, 0.0);
        double half_gap = 0.5 * (largest - smallest);

        std::vector<double> merged = current;
        merged.front() = merged.back() = 0.5 * (largest + smallest);
        double merged_entropy = entropy_of(merged);

        if (merged_entropy < e_target - kEntanglementTolerance) {
            std::sort(merged.begin(), merged.end(), std::greater<>());
            current = std::move(merged);
            entanglement = merged_entropy;
            rounds.push_back({std::move(before), std::nullopt, entanglement});
            continue;
        }

        // Entropy is increasing in epsilon on [0, half_gap] (Schur concavity),
        // so the crossing is bracketed by the two endpoints.
        double lo = 0;
        double hi = half_gap;
        std::vector<double> trial = current;
        while (hi - lo > kEpsilonTolerance) {
            double mid = 0.5 * (lo + hi);
            trial.front() = largest - mid;
            trial.back() = smallest + mid;
            if (entropy_of(trial) < e_target) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        trial.front() = largest - hi;
        trial.back() = smallest + hi;
        std::sort(trial.begin(), trial.end(), std::greater<>());
        current = std::move(trial);
        entanglement = entropy_of(current);
        rounds.push_back({std::move(before), hi, entanglement});
        converged = true;
    }

    SchmidtVector final_target = SchmidtVector::from_weights(current, 0.0);
    if (e_target >= log_d - kEntanglementTolerance) {
        // The merge sequence only approaches the flat spectrum asymptotically.
        final_target = SchmidtVector::uniform(d);
        entanglement = log_d;
        converged = true;
    }
    converged = converged || entanglement >= e_target - kEntanglementTolerance;
    double probability = converged ? optimal_transition_probability(initial, final_target) : 0.0;
    return ProtocolTrace{
        .rounds = std::move(rounds),
        .final_target = std::move(final_target),
        .final_entanglement = entanglement,
        .success_probability = probability,
        .converged = converged,
    };
}

double ree_outcome_statistic(const SchmidtVector &initial, const OutcomeEnsemble<SchmidtVector> &ensemble,
                             const GeeParams &params) {
    MajorizationReport report = majorization_check(initial, ensemble);
    if (!report.feasible) {
        throw InfeasibleError("ensemble violates the majorization condition at l = " +
                                  std::to_string(report.worst_index),
                              report.worst_index);
    }
    double c = params.scale();
    double e0 = renyi_entropy(initial, params.alpha);
    double total = 0;
    for (const auto &item : ensemble) {
        total += item.probability * std::exp(c * (renyi_entropy(item.payload, params.alpha) - e0));
    }
    return total;
}

}  // namespace renyi
