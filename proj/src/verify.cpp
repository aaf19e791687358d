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

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>

#include "renyi/bounds.hpp"
#include "renyi/chains.hpp"
#include "renyi/dataset.hpp"
#include "renyi/errors.hpp"
#include "renyi/noise.hpp"

namespace renyi {

namespace {

constexpr std::size_t kMaxFailingSeeds = 8;

PropertyResult make_property(std::string name, double tolerance) {
    PropertyResult p;
    p.name = std::move(name);
    p.tolerance = tolerance;
    return p;
}

Eigen::Index party_dim(Rng &rng) {
    return static_cast<Eigen::Index>(rng.index(2, 8));
}

OutcomeEnsemble<SchmidtVector> schmidt_ensemble(const OutcomeEnsemble<BipartitePureState> &outcomes) {
    return outcomes.map([](const BipartitePureState &s) { return s.schmidt(); });
}

double gee_value(const SchmidtVector &p, const GeeParams &params) {
    return gee(p, params);
}

void suite_statistics(std::vector<PropertyResult> &out, std::size_t trials, std::uint64_t seed) {
    auto feasible = make_property("instrument_ensemble_majorization", kFeasibilitySlack);
    auto statistic = make_property("ree_outcome_statistic", 1e-9);
    for (std::size_t t = 0; t < trials; ++t) {
        std::uint64_t trial_seed = derive_seed(seed, t);
        InstrumentTrial trial = sample_instrument_trial(trial_seed);
        Rng rng(derive_seed(trial_seed, 1));
        GeeParams params = sample_omega(rng);
        MajorizationReport report = majorization_check(trial.initial, trial.ensemble);
        feasible.record(report.worst_slack, trial_seed);
        if (!report.feasible) {
            statistic.record(-INFINITY, trial_seed);
            continue;
        }
        double value = ree_outcome_statistic(trial.initial, trial.ensemble, params);
        double sign = params.scale() > 0 ? 1.0 : -1.0;
        statistic.record(-sign * (value - 1.0), trial_seed);
    }
    out.push_back(std::move(feasible));
    out.push_back(std::move(statistic));
}

void suite_monotone(std::vector<PropertyResult> &out, std::size_t trials, std::uint64_t seed) {
    auto gee_mono = make_property("gee_mean_monotone", 1e-9);
    auto order = make_property("renyi_nonincreasing_in_order", 1e-12);
    for (std::size_t t = 0; t < trials; ++t) {
        std::uint64_t trial_seed = derive_seed(seed, t);
        InstrumentTrial trial = sample_instrument_trial(trial_seed);
        Rng rng(derive_seed(trial_seed, 1));
        GeeParams params = sample_omega(rng);
        double mean = 0;
        for (const auto &item : trial.ensemble) {
            mean += item.probability * gee_value(item.payload, params);
        }
        gee_mono.record(gee_value(trial.initial, params) - mean, trial_seed);

        double a = rng.uniform(0.0, 4.0);
        double b = rng.uniform(0.0, 4.0);
        if (a < b) {
            std::swap(a, b);
        }
        order.record(renyi_entropy(trial.initial, b) - renyi_entropy(trial.initial, a), trial_seed);
    }
    auto counter = make_property("order_above_one_counterexample_exists", 0.0);
    if (trials > 0) {
        MonotonicityCounterexample found = find_mean_monotonicity_counterexample(seed, 20000);
        counter.record(found.found ? found.increase : -1.0, found.trial_seed);
        counter.detail = {{"found", found.found},
                          {"trial_seed", found.trial_seed},
                          {"alpha", found.alpha},
                          {"mean_increase", found.increase}};
    }
    out.push_back(std::move(gee_mono));
    out.push_back(std::move(order));
    out.push_back(std::move(counter));
}

void suite_bounds(std::vector<PropertyResult> &out, std::size_t trials, std::uint64_t seed) {
    auto gee_ree = make_property("p_gee_below_p_ree", 1e-12);
    auto s_opt = make_property("p_gee_minimized_at_inverse_alpha", 1e-12);
    auto protocols = make_property("protocols_below_p_gee_opt", 1e-9);
    auto chain = make_property("p_gee_opt_below_half_and_ree", 1e-9);
    auto bracket = make_property("optimal_probability_bracket", 0.0);
    for (std::size_t t = 0; t < trials; ++t) {
        std::uint64_t trial_seed = derive_seed(seed, t);
        Rng rng(trial_seed);
        std::size_t d = rng.index(2, 30);
        SchmidtVector p = random_schmidt_vector(d, rng);
        double log_d = std::log(static_cast<double>(d));
        double e_s = renyi_entropy(p, RenyiOrder::one());
        double e_target = rng.uniform(e_s, log_d);

        double alpha = rng.uniform(0.05, 0.95);
        double e_alpha = renyi_entropy(p, alpha);
        double t_alpha = rng.uniform(e_alpha, e_alpha + 3.0);
        gee_ree.record(p_ree(e_alpha, t_alpha) - p_gee(e_alpha, t_alpha, alpha), trial_seed);
        double s = rng.uniform(0.05, 1.0 / alpha);
        s_opt.record(p_gee(e_alpha, t_alpha, alpha, s) - p_gee(e_alpha, t_alpha, alpha), trial_seed);

        double opt = p_gee_opt(p, e_target, 1.0).probability;
        double mix = mix_protocol(p, e_target).success_probability;
        double phik = phi_k_envelope(p, e_target);
        protocols.record(opt - std::max(mix, phik), trial_seed);
        double half = p_gee(renyi_entropy(p, 0.5), e_target, 0.5);
        chain.record(std::min(half, p_ree(e_s, e_target)) - opt, trial_seed);

        SchmidtVector target = random_schmidt_vector(rng.index(1, d), rng);
        double star = optimal_transition_probability(p, target);
        auto ensemble_at = [&](double q) {
            return OutcomeEnsemble<SchmidtVector>({{q, target}}, EnsembleMode::kTruncated);
        };
        bool pass_at = majorization_check(p, ensemble_at(star)).feasible;
        bool fail_above = star + 1e-6 > 1 || !majorization_check(p, ensemble_at(star + 1e-6)).feasible;
        bracket.record(pass_at && fail_above ? 0.0 : -1.0, trial_seed);
    }
    out.push_back(std::move(gee_ree));
    out.push_back(std::move(s_opt));
    out.push_back(std::move(protocols));
    out.push_back(std::move(chain));
    out.push_back(std::move(bracket));
}

void suite_estimation(std::vector<PropertyResult> &out, std::size_t trials, std::uint64_t seed) {
    auto est = make_property("estimate_below_e_alpha", 1e-9);
    auto mixed = make_property("mixed_estimate_below_e_alpha", 1e-9);
    auto direct = make_property("direct_bound_below_e2", 1e-9);
    for (std::size_t t = 0; t < trials; ++t) {
        std::uint64_t trial_seed = derive_seed(seed, t);
        InstrumentTrial trial = sample_instrument_trial(trial_seed);
        Rng rng(derive_seed(trial_seed, 1));
        double alpha = rng.uniform(0.01, 2.0);
        double e_alpha = renyi_entropy(trial.initial, alpha);
        est.record(e_alpha - estimate_pure(trial.state, trial.kraus, Side::kB, alpha), trial_seed);

        DecoherenceSpec spec{rng.uniform(0.0, 0.9), std::nullopt};
        mixed.record(e_alpha - mixed_estimate(trial.state, spec, trial.kraus, alpha), trial_seed);
        direct.record(renyi_entropy(trial.initial, 2.0) - direct_mixed_bound(trial.state, spec), trial_seed);
    }
    out.push_back(std::move(est));
    out.push_back(std::move(mixed));
    out.push_back(std::move(direct));
}

void suite_chains(std::vector<PropertyResult> &out, std::size_t trials, std::uint64_t seed) {
    auto round_trip = make_property("nu_round_trip", 1e-10);
    auto reality = make_property("g_l_real", 0.0);
    auto unitarity = make_property("heisenberg_norm", 1e-10);
    std::unique_ptr<HeisenbergQuench> quench;
    if (trials > 0) {
        quench = std::make_unique<HeisenbergQuench>(6);
    }
    for (std::size_t t = 0; t < trials; ++t) {
        std::uint64_t trial_seed = derive_seed(seed, t);
        Rng rng(trial_seed);
        std::size_t length = rng.index(1, 8);
        std::vector<double> nus(length);
        for (double &nu : nus) {
            nu = rng.uniform();
        }
        std::sort(nus.begin(), nus.end(), std::greater<>());
        auto n = static_cast<Eigen::Index>(2 * length);
        RealMatrix block = RealMatrix::Zero(n, n);
        for (std::size_t l = 0; l < length; ++l) {
            auto i = static_cast<Eigen::Index>(2 * l);
            block(i, i + 1) = nus[l];
            block(i + 1, i) = -nus[l];
        }
        RealMatrix v = random_orthogonal(n, rng);
        ModeSpectrum got = mode_spectrum(CorrelationMatrix{v.transpose() * block * v});
        double dev = 0;
        for (std::size_t l = 0; l < length; ++l) {
            dev = std::max(dev, std::abs(got.nus[l] - nus[l]));
        }
        round_trip.record(-dev, trial_seed);

        double a = rng.uniform(0.0, 3.0);
        int l = static_cast<int>(rng.index(0, 8)) - 4;
        bool real_ok = true;
        try {
            ising_gl(a, l);
        } catch (const std::runtime_error &) {
            real_ok = false;
        }
        reality.record(real_ok ? 0.0 : -1.0, trial_seed);

        double tau = rng.uniform(0.0, 10.0);
        unitarity.record(-std::abs(quench->evolve(tau).norm() - 1.0), trial_seed);
    }
    out.push_back(std::move(round_trip));
    out.push_back(std::move(reality));
    out.push_back(std::move(unitarity));
}

}  // namespace

void PropertyResult::record(double slack, std::uint64_t seed) {
    ++trials;
    worst_slack = std::min(worst_slack, slack);
    if (slack >= -tolerance) {
        ++passed;
    } else if (failing_seeds.size() < kMaxFailingSeeds) {
        failing_seeds.push_back(seed);
    }
}

bool VerifyReport::passed() const {
    return std::all_of(properties.begin(), properties.end(), [](const PropertyResult &p) { return p.ok(); });
}

nlohmann::ordered_json VerifyReport::to_json() const {
    nlohmann::ordered_json props = nlohmann::ordered_json::array();
    for (const auto &p : properties) {
        nlohmann::ordered_json entry = {
            {"name", p.name},
            {"trials", p.trials},
            {"passed", p.passed},
            {"tolerance", p.tolerance},
        };
        entry["worst_slack"] = p.trials == 0 ? nlohmann::ordered_json(nullptr) : json_number(p.worst_slack);
        entry["failing_seeds"] = p.failing_seeds;
        if (!p.detail.empty()) {
            entry["detail"] = p.detail;
        }
        props.push_back(std::move(entry));
    }
    nlohmann::ordered_json out;
    out["schema"] = std::string("renyi-slocc/verify/v") + kSchemaVersion;
    out["suite"] = suite;
    out["trials"] = trials;
    out["seed"] = seed;
    out["passed"] = passed();
    out["properties"] = std::move(props);
    return out;
}

VerifyReport run_verify(const std::string &suite, std::size_t trials, std::uint64_t seed) {
    VerifyReport report{suite, trials, seed, {}};
    if (suite == "statistics") {
        suite_statistics(report.properties, trials, seed);
    } else if (suite == "monotone") {
        suite_monotone(report.properties, trials, seed);
    } else if (suite == "bounds") {
        suite_bounds(report.properties, trials, seed);
    } else if (suite == "estimation") {
        suite_estimation(report.properties, trials, seed);
    } else if (suite == "chains") {
        suite_chains(report.properties, trials, seed);
    } else {
        throw ValidationError("unknown verify suite '" + suite + "'");
    }
    return report;
}

GeeParams sample_omega(Rng &rng) {
    bool below_one = rng.uniform() < 0.5;
    if (below_one) {
        double alpha = rng.uniform(0.02, 0.98);
        double s = 0;
        while (std::abs(s) < 1e-3) {
            s = rng.uniform(-1.0, 1.0 / alpha);
        }
        return GeeParams(alpha, s);
    }
    double alpha = rng.uniform(1.02, 3.0);
    return GeeParams(alpha, rng.uniform(1.0 / alpha, 3.0));
}

InstrumentTrial sample_instrument_trial(std::uint64_t seed) {
    Rng rng(seed);
    Eigen::Index dim_a = party_dim(rng);
    Eigen::Index dim_b = party_dim(rng);
    std::size_t outcomes = rng.index(2, 4);
    BipartitePureState state = random_pure_state(dim_a, dim_b, rng);
    KrausSet kraus = random_instrument(dim_b, outcomes, rng);
    SchmidtVector initial = state.schmidt();
    OutcomeEnsemble<SchmidtVector> ensemble = schmidt_ensemble(apply_instrument_pure(state, kraus, Side::kB));
    return InstrumentTrial{std::move(state), std::move(kraus), std::move(initial), std::move(ensemble)};
}

double mean_renyi_change(const SchmidtVector &initial, const OutcomeEnsemble<SchmidtVector> &ensemble, double alpha) {
    double mean = 0;
    for (const auto &item : ensemble) {
        mean += item.probability * renyi_entropy(item.payload, alpha);
    }
    return mean - renyi_entropy(initial, alpha);
}

MonotonicityCounterexample replay_monotonicity_trial(std::uint64_t trial_seed) {
    Rng rng(trial_seed);
    auto dim = static_cast<Eigen::Index>(rng.index(2, 4));
    double alpha = rng.uniform(1.5, 4.0);
    BipartitePureState state = random_pure_state(dim, dim, rng);
    KrausSet kraus = random_instrument(dim, 2, rng);
    OutcomeEnsemble<SchmidtVector> ensemble = schmidt_ensemble(apply_instrument_pure(state, kraus, Side::kB));
    double change = mean_renyi_change(state.schmidt(), ensemble, alpha);
    return MonotonicityCounterexample{change > 1e-6, trial_seed, alpha, change};
}

MonotonicityCounterexample find_mean_monotonicity_counterexample(std::uint64_t seed, std::size_t max_trials) {
    for (std::size_t i = 0; i < max_trials; ++i) {
        MonotonicityCounterexample trial = replay_monotonicity_trial(derive_seed(seed, i));
        if (trial.found) {
            return trial;
        }
    }
    return {};
}

}  // namespace renyi
