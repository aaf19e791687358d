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


// Acceptance criteria for the primary component. Prints one PASS/FAIL line
// per criterion and exits nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "renyi/bounds.hpp"
#include "renyi/chains.hpp"
#include "renyi/figures.hpp"
#include "renyi/measure.hpp"
#include "renyi/noise.hpp"
#include "renyi/random.hpp"
#include "renyi/slocc.hpp"
#include "renyi/spectra.hpp"
#include "renyi/verify.hpp"

using namespace renyi;

namespace {

constexpr std::uint64_t kSeed = 20260101;

struct Verdict {
    bool pass;
    std::string detail;
};

std::string fmt(const char *format, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof(buf), format, args...);
    return buf;
}

const PropertyResult &property(const VerifyReport &r, const std::string &name) {
    for (const auto &p : r.properties) {
        if (p.name == name) {
            return p;
        }
    }
    throw std::logic_error("missing property " + name);
}

Verdict outcome_statistic_suite() {
    VerifyReport r = run_verify("statistics", 1000, kSeed);
    const PropertyResult &p = property(r, "ree_outcome_statistic");
    return {p.ok() && p.trials == 1000 && p.tolerance <= 1e-9,
            fmt("%zu/%zu trials, worst slack %.3g", p.passed, p.trials, p.worst_slack)};
}

Verdict gee_monotonicity() {
    VerifyReport r = run_verify("monotone", 1000, kSeed);
    const PropertyResult &p = property(r, "gee_mean_monotone");
    MonotonicityCounterexample c = replay_monotonicity_trial(738528173346321279ULL);
    bool ok = p.ok() && p.trials == 1000 && c.found && c.increase > 0 && c.alpha > 1;
    return {ok, fmt("%zu/%zu trials, worst slack %.3g; counterexample seed 738528173346321279 alpha=%.6f "
                    "mean increase %.6g",
                    p.passed, p.trials, p.worst_slack, c.alpha, c.increase)};
}

Verdict bound_ordering() {
    DistillOptions opt;
    opt.points = 60;
    std::vector<DistillRow> rows = distill_rows(opt);
    const double tol = 1e-9;
    const char *names[] = {"P_mix<=P_phik", "P_phik<=P_opt", "P_opt<=P_1/2", "P_1/2<=min(1,P_REE)"};
    std::size_t violations[4] = {0, 0, 0, 0};
    double worst[4] = {0, 0, 0, 0};
    for (const auto &r : rows) {
        double chain[5] = {r.p_mix, r.p_phik, r.p_gee_opt, r.p_gee_half, std::min(1.0, r.p_ree)};
        for (int k = 0; k < 4; ++k) {
            double excess = chain[k] - chain[k + 1];
            if (excess > tol) {
                ++violations[k];
            }
            worst[k] = std::max(worst[k], excess);
        }
    }
    std::string detail = fmt("%zu points;", rows.size());
    bool ok = rows.size() == 60;
    for (int k = 0; k < 4; ++k) {
        detail += fmt(" %s: %zu violations (max excess %.3g);", names[k], violations[k], worst[k]);
        ok = ok && violations[k] == 0;
    }
    return {ok, detail};
}

Verdict exponential_tail() {
    std::size_t checked = 0;
    std::size_t bad = 0;
    for (double e = 0.05; e <= 6.0 + 1e-12; e += 0.05) {
        for (int i = 0; i <= 400; ++i) {
            double x = 0.01 * i;
            double p = p_gee(e, e + x, 0.5);
            ++checked;
            if (!(p <= std::exp(-x))) {
                ++bad;
            }
        }
    }
    return {bad == 0, fmt("%zu grid points, %zu exceed exp(-x)", checked, bad)};
}

// Feasibility of {p: target, 1 - p: product state} from `initial`.
bool bracket_feasible(const SchmidtVector &initial, const SchmidtVector &target, double p) {
    std::vector<renyi::Outcome<SchmidtVector>> items{{p, target}, {1 - p, SchmidtVector::uniform(1)}};
    return majorization_check(initial, OutcomeEnsemble<SchmidtVector>(std::move(items))).feasible;
}

Verdict optimal_probability() {
    SchmidtVector initial({0.8, 0.2});
    SchmidtVector bell = SchmidtVector::uniform(2);
    double p = optimal_transition_probability(initial, bell);
    bool ok = p == 0.4 && bracket_feasible(initial, bell, 0.4) && !bracket_feasible(initial, bell, 0.41);
    std::string detail = fmt("(0.8,0.2)->Bell p*=%.17g;", p);

    Rng rng(kSeed);
    std::size_t pairs = 0;
    std::size_t bad = 0;
    while (pairs < 500) {
        std::size_t d = rng.index(2, 8);
        SchmidtVector a = random_schmidt_vector(d, rng);
        SchmidtVector b = random_schmidt_vector(rng.index(2, d), rng);
        double star = optimal_transition_probability(a, b);
        if (star <= 2e-6 || star >= 1 - 2e-6) {
            continue;
        }
        ++pairs;
        if (!bracket_feasible(a, b, star - 1e-6) || bracket_feasible(a, b, star + 1e-6)) {
            ++bad;
        }
    }
    detail += fmt(" %zu random pairs, %zu bracket failures", pairs, bad);
    return {ok && bad == 0, detail};
}

Verdict heisenberg_headline() {
    BipartitePureState state = heisenberg_state(8, 6, 4.1);
    OptimizeOptions opt;
    opt.restarts = 16;
    opt.budget = 2000;
    opt.seed = kSeed;
    const double e2 = renyi_entropy(state.schmidt(), 2.0);
    double gap = 0;
    bool sandwich = true;
    double worst = INFINITY;
    for (double alpha : {0.01, 0.1, 0.2, 0.5, 1.0, 2.0}) {
        OptimizedPovm best = optimize_estimate(state, alpha, opt);
        double e_alpha = renyi_entropy(state.schmidt(), alpha);
        double slack = std::min(e_alpha - best.estimate, best.estimate - e2);
        worst = std::min(worst, slack);
        sandwich = sandwich && slack >= -1e-9;
        if (alpha == 0.5) {
            gap = std::abs(best.estimate - e2);
        }
    }
    bool ok = std::abs(gap - 0.14) <= 0.02 && sandwich;
    return {ok, fmt("E_2=%.6f |E^_1/2 - E_2|=%.6f (target 0.14 +- 0.02); sandwich worst slack %.3g", e2, gap, worst)};
}

Verdict single_spin_crossover() {
    BipartitePureState state = heisenberg_state(8, 6, 4.1);
    SiteLocation loc = locate_site(6, 2, 4);
    std::optional<KrausSet> z;
    for (auto &scheme : single_spin_schemes(loc.side == Side::kA ? 6 : 2, loc.site)) {
        if (scheme.label == "Z") {
            z = scheme.kraus;
        }
    }
    const double e2 = renyi_entropy(state.schmidt(), 2.0);
    auto excess = [&](double alpha) { return estimate_pure(state, *z, loc.side, alpha) - e2; };
    double lo = 0.01;
    double hi = lo;
    if (!(excess(lo) > 0)) {
        return {false, fmt("projection does not beat E_2 at alpha=0.01 (excess %.3g)", excess(lo))};
    }
    while (hi < 2.0 && excess(hi) > 0) {
        lo = hi;
        hi += 0.01;
    }
    if (excess(hi) > 0) {
        return {false, "no crossover below alpha=2"};
    }
    for (int i = 0; i < 60; ++i) {
        double mid = 0.5 * (lo + hi);
        (excess(mid) > 0 ? lo : hi) = mid;
    }
    double cross = 0.5 * (lo + hi);
    return {cross >= 0.50 && cross <= 0.60, fmt("crossover alpha=%.6f (window [0.50, 0.60])", cross)};
}

Verdict thermodynamic_ising() {
    const std::vector<double> alphas{0.2, 0.5, 1.0, 2.0};
    bool ok = true;
    std::string detail;
    ModeSpectrum trivial = mode_spectrum(build_gamma(0.0, 32));
    double worst_zero = 0;
    for (double alpha : alphas) {
        double e = thermo_ree(trivial, alpha);
        worst_zero = std::max(worst_zero, std::abs(e));
        ok = ok && e == 0.0;
    }
    detail += fmt("a=0 max|E|=%.3g;", worst_zero);

    ModeSpectrum ordered = mode_spectrum(build_gamma(50.0, 32));
    double worst_log2 = 0;
    for (double alpha : alphas) {
        worst_log2 = std::max(worst_log2, std::abs(thermo_ree(ordered, alpha) - std::log(2.0)));
    }
    ok = ok && worst_log2 <= 0.05;
    detail += fmt(" a=50 L=32 max|E - log 2|=%.3g;", worst_log2);

    Rng rng(kSeed);
    double worst_dev = 0;
    for (int t = 0; t < 200; ++t) {
        std::size_t length = rng.index(1, 12);
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
        RealMatrix o = random_orthogonal(n, rng);
        ModeSpectrum got = mode_spectrum(CorrelationMatrix{o * block * o.transpose()});
        for (std::size_t l = 0; l < length; ++l) {
            worst_dev = std::max(worst_dev, std::abs(got.nus[l] - nus[l]));
        }
    }
    ok = ok && worst_dev < 1e-10;
    detail += fmt(" nu round trip max dev %.3g over 200 matrices", worst_dev);
    return {ok, detail};
}

Verdict decoherence_validity() {
    Rng rng(kSeed);
    double worst_mixed = INFINITY;
    double worst_direct = INFINITY;
    double worst_reduction = 0;
    std::size_t mixed_bad = 0;
    std::size_t direct_bad = 0;
    const std::size_t trials = 200;
    for (std::size_t t = 0; t < trials; ++t) {
        InstrumentTrial trial = sample_instrument_trial(derive_seed(kSeed, t));
        double z = rng.uniform(0.0, 0.9);
        double alpha = rng.uniform(0.01, 2.0);
        double e_alpha = renyi_entropy(trial.initial, alpha);
        double e2 = renyi_entropy(trial.initial, 2.0);
        DecoherenceSpec spec{z, std::nullopt};
        double mixed = e_alpha - mixed_estimate(trial.state, spec, trial.kraus, alpha);
        double direct = e2 - direct_mixed_bound(trial.state, spec);
        mixed_bad += mixed < -1e-9;
        direct_bad += direct < -1e-9;
        worst_mixed = std::min(worst_mixed, mixed);
        worst_direct = std::min(worst_direct, direct);

        DecoherenceSpec clean{0.0, std::nullopt};
        worst_reduction = std::max(
            {worst_reduction,
             std::abs(mixed_estimate(trial.state, clean, trial.kraus, alpha) -
                      estimate_pure(trial.state, trial.kraus, Side::kB, alpha)),
             std::abs(direct_mixed_bound(trial.state, clean) - e2)});
    }
    bool ok = mixed_bad == 0 && direct_bad == 0 && worst_reduction <= 1e-12;
    return {ok, fmt("mixed_estimate: %zu/%zu violations (worst slack %.3g); direct_mixed_bound: %zu/%zu violations "
                    "(worst slack %.3g); z=0 max deviation %.3g",
                    mixed_bad, trials, worst_mixed, direct_bad, trials, worst_direct, worst_reduction)};
}

Verdict limit_identities() {
    const std::vector<SchmidtVector> spectra{SchmidtVector({0.8, 0.2}), SchmidtVector::geometric(0.7, 12),
                                             SchmidtVector({0.5, 0.3, 0.15, 0.05})};
    double worst_s = 0;
    double worst_one = 0;
    for (const auto &p : spectra) {
        for (double alpha : {0.1, 0.5, 0.9, 1.5, 3.0}) {
            worst_s = std::max(worst_s, std::abs(gee(p, GeeParams(alpha, 1e-9)) - renyi_entropy(p, alpha)));
        }
        double shannon = 0;
        for (double v : p.values()) {
            shannon -= v * std::log(v);
        }
        for (double alpha : {1.0, 1 + 5e-7, 1 - 5e-7, 1 + 2e-6, 1 - 2e-6}) {
            worst_one = std::max(worst_one, std::abs(renyi_entropy(p, alpha) - shannon));
        }
        worst_one = std::max(worst_one, std::abs(gee_limit_one(p) - shannon));
        double e = renyi_entropy(p, 1.0);
        worst_one = std::max(worst_one, std::abs(p_gee(e, e + 0.7, 1.0) - p_ree(e, e + 0.7)));
    }
    ZeroOrderLimit g = alpha_zero_limit(SchmidtVector({0.8, 0.2}), std::log(2.0));
    double g_dev = g.unbounded() ? INFINITY : std::abs(g.value - 0.8);
    bool ok = worst_s <= 1e-6 && worst_one <= 1e-6 && g_dev <= 1e-12;
    return {ok, fmt("s->0 max dev %.3g; alpha->1 max dev %.3g; alpha->0 G-concurrence (0.8,0.2) dev %.3g", worst_s,
                    worst_one, g_dev)};
}

}  // namespace

int main() {
    struct Criterion {
        const char *name;
        double budget_seconds;
        std::function<Verdict()> run;
    };
    const std::vector<Criterion> criteria{
        {"outcome-statistic inequality over random instruments", 60, outcome_statistic_suite},
        {"GEE mean monotonicity with pinned alpha>1 counterexample", 0, gee_monotonicity},
        {"bound ordering on the chi(0.86) d=500 grid", 120, bound_ordering},
        {"exponential tail of the alpha=1/2 bound", 0, exponential_tail},
        {"optimal transition probability bracket", 0, optimal_probability},
        {"Heisenberg quench POVM estimate", 600, heisenberg_headline},
        {"single-spin projection crossover", 0, single_spin_crossover},
        {"thermodynamic Ising limits and mode round trip", 60, thermodynamic_ising},
        {"decoherence estimate validity", 0, decoherence_validity},
        {"limit identities", 0, limit_identities},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const Criterion &c = criteria[i];
        auto start = std::chrono::steady_clock::now();
        Verdict out;
        try {
            out = c.run();
        } catch (const std::exception &e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.budget_seconds > 0 && seconds > c.budget_seconds) {
            out.pass = false;
            out.detail += fmt(" [runtime %.1fs exceeds %.0fs]", seconds, c.budget_seconds);
        }
        failures += !out.pass;
        std::printf("%s criterion %zu: %s: %s (%.2fs)\n", out.pass ? "PASS" : "FAIL", i + 1, c.name,
                    out.detail.c_str(), seconds);
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
