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


#ifndef RENYI_VERIFY_HPP
#define RENYI_VERIFY_HPP

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "json.hpp"
#include "renyi/measure.hpp"
#include "renyi/random.hpp"
#include "renyi/slocc.hpp"
#include "renyi/spectra.hpp"

namespace renyi {

/// Pass/fail tally of one property over randomized trials.
struct PropertyResult {
    std::string name;
    std::size_t trials = 0;
    std::size_t passed = 0;
    /// Smallest observed slack; a property holds when slack >= -tolerance.
    double worst_slack = std::numeric_limits<double>::infinity();
    double tolerance = 0;
    /// Trial seeds of the first failures (at most 8).
    std::vector<std::uint64_t> failing_seeds;
    nlohmann::ordered_json detail = nlohmann::ordered_json::object();

    void record(double slack, std::uint64_t seed);
    bool ok() const {
        return passed == trials;
    }
};

struct VerifyReport {
    std::string suite;
    std::size_t trials;
    std::uint64_t seed;
    std::vector<PropertyResult> properties;

    bool passed() const;
    nlohmann::ordered_json to_json() const;
};

/// Suites: monotone, statistics, bounds, estimation, chains.
VerifyReport run_verify(const std::string &suite, std::size_t trials, std::uint64_t seed);

/// (alpha, s) drawn from Omega: alpha in (0, 1) with s in [-1, 1/alpha] or
/// alpha in (1, 3] with s in [1/alpha, 3], s kept away from 0.
GeeParams sample_omega(Rng &rng);

/// A random pure state (party dimensions 2..8), a random instrument on B
/// with 2..4 outcomes, and the resulting Schmidt-vector ensemble.
struct InstrumentTrial {
    BipartitePureState state;
    KrausSet kraus;
    SchmidtVector initial;
    OutcomeEnsemble<SchmidtVector> ensemble;
};

InstrumentTrial sample_instrument_trial(std::uint64_t seed);

/// sum_m p_m E(Psi_m) - E(Psi) for the order-alpha REE.
double mean_renyi_change(const SchmidtVector &initial, const OutcomeEnsemble<SchmidtVector> &ensemble, double alpha);

struct MonotonicityCounterexample {
    bool found = false;
    std::uint64_t trial_seed = 0;
    double alpha = 0;
    /// Positive mean change of E_alpha.
    double increase = 0;
};

/// Searches trial seeds derive_seed(seed, i), i < max_trials, for an
/// instrument ensemble whose mean order-alpha REE increases (alpha in
/// (1, 4]); the trial's alpha is drawn from the same stream.
MonotonicityCounterexample find_mean_monotonicity_counterexample(std::uint64_t seed, std::size_t max_trials);

/// Replays a trial seed from the search above.
MonotonicityCounterexample replay_monotonicity_trial(std::uint64_t trial_seed);

}  // namespace renyi

#endif
