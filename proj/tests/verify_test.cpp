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


#include "renyi/verify.hpp"

#include <cmath>

#include "gtest/gtest.h"
#include "renyi/errors.hpp"

using namespace renyi;

TEST(run_verify, zero_trials_is_an_empty_pass) {
    VerifyReport r = run_verify("statistics", 0, 1);
    EXPECT_TRUE(r.passed());
    nlohmann::ordered_json doc = r.to_json();
    EXPECT_EQ(doc["schema"], "renyi-slocc/verify/v1");
    for (const auto &p : doc["properties"]) {
        EXPECT_EQ(p["trials"], 0);
        EXPECT_TRUE(p["worst_slack"].is_null());
    }
}

TEST(run_verify, unknown_suite) {
    EXPECT_THROW(run_verify("nonsense", 10, 0), ValidationError);
}

TEST(run_verify, suites_pass_on_small_runs) {
    for (const char *suite : {"statistics", "monotone", "bounds", "chains"}) {
        VerifyReport r = run_verify(suite, 40, 11);
        EXPECT_TRUE(r.passed()) << suite << "\n" << r.to_json().dump(2);
    }
}

TEST(run_verify, seed_reproducible) {
    nlohmann::ordered_json a = run_verify("statistics", 25, 4).to_json();
    nlohmann::ordered_json b = run_verify("statistics", 25, 4).to_json();
    EXPECT_EQ(a.dump(), b.dump());
}

TEST(PropertyResult, tolerance_and_failing_seeds) {
    PropertyResult p;
    p.tolerance = 1e-9;
    p.record(-5e-10, 1);
    p.record(0.1, 2);
    for (std::uint64_t s = 10; s < 20; ++s) {
        p.record(-1.0, s);
    }
    EXPECT_EQ(p.trials, 12u);
    EXPECT_EQ(p.passed, 2u);
    EXPECT_EQ(p.worst_slack, -1.0);
    EXPECT_EQ(p.failing_seeds.size(), 8u);
    EXPECT_EQ(p.failing_seeds.front(), 10u);
    EXPECT_FALSE(p.ok());
}

TEST(sample_omega, draws_lie_in_omega) {
    Rng rng(8);
    for (int i = 0; i < 2000; ++i) {
        GeeParams g = sample_omega(rng);
        EXPECT_TRUE(g.in_omega());
        EXPECT_GE(std::abs(g.s), 1e-3);
        EXPECT_GT(g.alpha, 0.0);
        EXPECT_LE(g.alpha, 3.0);
    }
}

TEST(sample_instrument_trial, reproducible_and_consistent) {
    InstrumentTrial a = sample_instrument_trial(99);
    InstrumentTrial b = sample_instrument_trial(99);
    EXPECT_EQ(a.initial.values(), b.initial.values());
    EXPECT_LE(a.kraus.completeness_residual(), 1e-9);
    EXPECT_NEAR(a.ensemble.total_probability(), 1.0, 1e-10);
    EXPECT_TRUE(majorization_check(a.initial, a.ensemble).feasible);
}

TEST(mean_renyi_change, nonpositive_for_order_below_one) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        InstrumentTrial t = sample_instrument_trial(seed);
        EXPECT_LE(mean_renyi_change(t.initial, t.ensemble, 0.5), 1e-12);
    }
}

// Pinned ensemble whose mean order-alpha entropy increases for alpha > 1.
TEST(monotonicity_counterexample, pinned_seed_replays) {
    MonotonicityCounterexample c = replay_monotonicity_trial(738528173346321279ULL);
    ASSERT_TRUE(c.found);
    EXPECT_NEAR(c.alpha, 2.7350707951330664, 1e-12);
    EXPECT_NEAR(c.increase, 2.00648878896e-4, 1e-12);
}

TEST(monotonicity_counterexample, search_finds_it) {
    MonotonicityCounterexample c = find_mean_monotonicity_counterexample(0, 20000);
    ASSERT_TRUE(c.found);
    EXPECT_EQ(c.trial_seed, 738528173346321279ULL);
    EXPECT_GT(c.increase, 0.0);
}
