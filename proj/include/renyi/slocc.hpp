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

#ifndef RENYI_SLOCC_HPP
#define RENYI_SLOCC_HPP

#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "renyi/errors.hpp"
#include "renyi/spectra.hpp"

namespace renyi {

/// Majorization inequalities are accepted down to this negative slack.
inline constexpr double kFeasibilitySlack = 1e-10;

enum class EnsembleMode {
    /// Probabilities sum to 1 within 1e-10.
    kComplete,
    /// Probabilities sum to at most 1 (a subset of the outcomes).
    kTruncated,
};

template <typename T>
struct Outcome {
    double probability;
    T payload;
};

/// Probability-weighted list of measurement outcomes.
template <typename T>
class OutcomeEnsemble {
   public:
    explicit OutcomeEnsemble(std::vector<Outcome<T>> items, EnsembleMode mode = EnsembleMode::kComplete,
                             bool renormalized = false)
        : items_(std::move(items)), mode_(mode), renormalized_(renormalized) {
        double total = 0;
        for (const auto &item : items_) {
            if (!(item.probability >= 0) || item.probability > 1 + 1e-12) {
                throw ValidationError("outcome probability " + std::to_string(item.probability) +
                                      " outside [0, 1]");
            }
            total += item.probability;
        }
        if (mode_ == EnsembleMode::kComplete && std::abs(total - 1.0) > 1e-10) {
            throw ValidationError("outcome probabilities sum to " + std::to_string(total) + ", expected 1");
        }
        if (mode_ == EnsembleMode::kTruncated && total > 1 + 1e-10) {
            throw ValidationError("truncated ensemble probabilities exceed 1");
        }
    }

    const std::vector<Outcome<T>> &items() const {
        return items_;
    }
    std::size_t size() const {
        return items_.size();
    }
    bool empty() const {
        return items_.empty();
    }
    auto begin() const {
        return items_.begin();
    }
    auto end() const {
        return items_.end();
    }
    EnsembleMode mode() const {
        return mode_;
    }
    bool truncated() const {
        return mode_ == EnsembleMode::kTruncated;
    }
    /// True when negligible outcomes were dropped and the rest rescaled.
    bool renormalized() const {
        return renormalized_;
    }
    double total_probability() const {
        double total = 0;
        for (const auto &item : items_) {
            total += item.probability;
        }
        return total;
    }

    /// Applies `f` to every payload, keeping probabilities and flags.
    template <typename F>
    auto map(F &&f) const {
        using U = std::decay_t<decltype(f(items_.front().payload))>;
        std::vector<Outcome<U>> out;
        out.reserve(items_.size());
        for (const auto &item : items_) {
            out.push_back({item.probability, f(item.payload)});
        }
        return OutcomeEnsemble<U>(std::move(out), mode_, renormalized_);
    }

   private:
    std::vector<Outcome<T>> items_;
    EnsembleMode mode_;
    bool renormalized_;
};

/// sum_{i=l}^{d} lambda_i for 1 <= l <= rank, summed smallest first.
double tail_sum(const SchmidtVector &p, std::size_t l);

/// All tail sums for l = 1..d, zero-padded past the rank of `p`.
std::vector<double> tail_sums(const SchmidtVector &p, std::size_t d);

struct MajorizationReport {
    bool feasible;
    /// slack[l-1] = tail(initial, l) - sum_m p_m tail(target_m, l).
    std::vector<double> slack;
    /// 1-based index of the smallest slack.
    std::size_t worst_index;
    double worst_slack;
};

/// Tail-sum (majorization) criterion for a pure-state SLOCC ensemble
/// transformation, over the common length d = max rank.
MajorizationReport majorization_check(const SchmidtVector &initial, const OutcomeEnsemble<SchmidtVector> &ensemble);

/// Optimal probability of reaching `target` from `initial` by SLOCC:
/// min_l tail(initial, l) / tail(target, l), clamped to [0, 1]; zero when the
/// target has larger Schmidt rank.
double optimal_transition_probability(const SchmidtVector &initial, const SchmidtVector &target);

struct PhiKResult {
    double probability;
    /// k exceeded the Schmidt rank of the initial state; probability is 0.
    bool rank_exceeded;
};

/// Probability of distilling the rank-k maximally entangled state.
PhiKResult phi_k_distillation(const SchmidtVector &initial, std::size_t k);

/// Best Phi_k distillation probability among k with log k >= e_target.
double phi_k_envelope(const SchmidtVector &initial, double e_target);

struct ProtocolRound {
    SchmidtVector before;
    /// Shift applied to (lambda_max, lambda_min); empty for a midpoint merge.
    std::optional<double> epsilon;
    double entanglement_after;
};

struct ProtocolTrace {
    std::vector<ProtocolRound> rounds;
    SchmidtVector final_target;
    double final_entanglement;
    double success_probability;
    /// False when max_rounds ran out before reaching the target; the
    /// success probability is then reported as 0.
    bool converged;
};

/// Raises entanglement by repeatedly mixing the largest and smallest Schmidt
/// coefficients until the order-`order` entropy reaches `e_target`, then
/// reports the optimal probability of reaching that final state.
/// `max_rounds == 0` means 10 * rank.
ProtocolTrace mix_protocol(const SchmidtVector &initial, double e_target, RenyiOrder order = RenyiOrder::one(),
                           std::size_t max_rounds = 0);

/// sum_m p_m exp(s(1-alpha)(E_alpha(m) - E_alpha(initial))). Throws
/// InfeasibleError naming the violated l if the ensemble is not reachable.
double ree_outcome_statistic(const SchmidtVector &initial, const OutcomeEnsemble<SchmidtVector> &ensemble,
                             const GeeParams &params);

}  // namespace renyi

#endif
