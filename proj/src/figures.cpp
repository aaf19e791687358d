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


#include "renyi/figures.hpp"

#include <cmath>
#include <stdexcept>

#include "renyi/bounds.hpp"
#include "renyi/chains.hpp"
#include "renyi/errors.hpp"
#include "renyi/noise.hpp"
#include "renyi/parallel.hpp"
#include "renyi/random.hpp"
#include "renyi/slocc.hpp"

namespace renyi {

namespace {

OptimizeOptions task_optimizer(const OptimizeOptions &base, std::size_t task) {
    OptimizeOptions out = base;
    out.seed = derive_seed(base.seed, task);
    out.threads = 1;
    return out;
}

nlohmann::ordered_json optimizer_meta(const OptimizeOptions &o) {
    return {{"restarts", o.restarts}, {"budget", o.budget}, {"seed", o.seed}};
}

double exact_renyi(const BipartitePureState &state, double alpha) {
    return renyi_entropy(state.schmidt(), alpha);
}

KrausSet z_projection(std::size_t n_sites, std::size_t site) {
    for (auto &scheme : single_spin_schemes(n_sites, site)) {
        if (scheme.label == "Z") {
            return scheme.kraus;
        }
    }
    throw std::logic_error("Z projection missing from single-spin schemes");
}

struct SpinBest {
    double pauli;
    double povm;
};

// Best single-spin estimates over every chain site.
SpinBest best_single_spin(const BipartitePureState &state, std::size_t n_a, std::size_t n_b, double alpha) {
    SpinBest best{-INFINITY, -INFINITY};
    for (std::size_t k = 1; k <= n_a + n_b; ++k) {
        SiteLocation loc = locate_site(n_a, n_b, k);
        std::size_t party_sites = loc.side == Side::kA ? n_a : n_b;
        for (const auto &scheme : single_spin_schemes(party_sites, loc.site)) {
            double e = estimate_pure(state, scheme.kraus, loc.side, alpha);
            double &slot = scheme.epsilon ? best.povm : best.pauli;
            slot = std::max(slot, e);
        }
    }
    return best;
}

void check_grid_ceiling(std::size_t n_sites) {
    if (n_sites > kMaxChainSites) {
        throw ValidationError("chain size exceeds the ceiling of " + std::to_string(kMaxChainSites) + " sites");
    }
}

}  // namespace

std::vector<double> linspace(double lo, double hi, std::size_t n) {
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = n == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    }
    return out;
}

std::vector<double> default_alpha_grid() {
    return linspace(0.0, 2.0, 41);
}

std::vector<DistillRow> distill_rows(const DistillOptions &options) {
    if (options.points < 2) {
        throw ValidationError("distillation grid needs at least 2 points");
    }
    SchmidtVector chi = SchmidtVector::geometric(options.r, options.d);
    const double e_s = renyi_entropy(chi, RenyiOrder::one());
    const double e_half = renyi_entropy(chi, 0.5);
    const double log_d = std::log(static_cast<double>(chi.rank()));
    std::vector<double> grid = linspace(0.0, log_d - e_s, options.points);

    return parallel_map(grid.size(), options.threads, [&](std::size_t i) {
        double e_target = std::min(e_s + grid[i], log_d);
        OptimizedGeeBound opt = p_gee_opt(chi, e_target, 1.0);
        ProtocolTrace mix = mix_protocol(chi, e_target);
        return DistillRow{
            .delta_e = grid[i],
            .e_target = e_target,
            .p_ree = p_ree(e_s, e_target),
            .p_gee_half = p_gee(e_half, e_target, 0.5),
            .p_gee_opt = opt.probability,
            .argmin_beta = opt.argmin_beta,
            .p_mix = mix.success_probability,
            .p_phik = phi_k_envelope(chi, e_target),
            .mix_converged = mix.converged,
        };
    });
}

Dataset distill_dataset(const DistillOptions &options) {
    Dataset data;
    data.name = "distill";
    data.columns = {"delta_e_s", "e_target", "p_ree", "p_gee_half", "p_gee_opt", "argmin_beta", "p_mix", "p_phik"};
    data.meta = {{"r", options.r}, {"d", options.d}, {"points", options.points}};
    for (const auto &row : distill_rows(options)) {
        data.add_row({row.delta_e, row.e_target, row.p_ree, row.p_gee_half, row.p_gee_opt, row.argmin_beta,
                      row.mix_converged ? Cell(row.p_mix) : Cell("unconverged"), row.p_phik});
    }
    return data;
}

Dataset distill_scatter_dataset(const ScatterOptions &options) {
    Dataset data;
    data.name = "distill-scatter";
    data.columns = {"sample", "e_s", "e_target", "p_ree", "p_gee_opt", "argmin_beta"};
    data.meta = {{"samples", options.samples}, {"d", options.d}, {"seed", options.seed}, {"law", "dirichlet(1)"}};
    struct Sample {
        double e_s = 0, e_target = 0, p_ree = 0, p_opt = 0, beta = 0;
    };
    auto rows = parallel_map(options.samples, options.threads, [&](std::size_t i) {
        Rng rng(derive_seed(options.seed, i));
        SchmidtVector p = random_schmidt_vector(options.d, rng);
        double e_s = renyi_entropy(p, RenyiOrder::one());
        double log_d = std::log(static_cast<double>(p.rank()));
        double e_target = rng.uniform(e_s, log_d);
        OptimizedGeeBound opt = p_gee_opt(p, e_target, 1.0);
        return Sample{e_s, e_target, p_ree(e_s, e_target), opt.probability, opt.argmin_beta};
    });
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto &s = rows[i];
        data.add_row({static_cast<double>(i), s.e_s, s.e_target, s.p_ree, s.p_opt, s.beta});
    }
    return data;
}

Dataset estimate_dataset(const EstimateOptions &options) {
    check_grid_ceiling(options.n_sites);
    std::vector<double> alphas = options.alphas.empty() ? default_alpha_grid() : options.alphas;
    const std::size_t n_b = options.n_sites - options.n_a;
    BipartitePureState state = heisenberg_state(options.n_sites, options.n_a, options.j_tau);
    SiteLocation loc = locate_site(options.n_a, n_b, options.site);
    KrausSet projector = z_projection(loc.side == Side::kA ? options.n_a : n_b, loc.site);
    const double e2 = exact_renyi(state, 2.0);

    Dataset data;
    data.name = "estimate";
    data.columns = {"alpha", "e_alpha", "e2", "e_proj", "e_povm"};
    data.meta = {{"n", options.n_sites}, {"n_a", options.n_a}, {"j_tau", options.j_tau}, {"site", options.site},
                 {"optimizer", optimizer_meta(options.optimizer)}};
    auto rows = parallel_map(alphas.size(), options.threads, [&](std::size_t i) {
        double alpha = alphas[i];
        double povm = optimize_estimate(state, alpha, task_optimizer(options.optimizer, i)).estimate;
        return std::vector<Cell>{alpha, exact_renyi(state, alpha), e2,
                                 estimate_pure(state, projector, loc.side, alpha), povm};
    });
    for (auto &row : rows) {
        data.add_row(std::move(row));
    }
    return data;
}

Dataset estimate_inset_dataset(const EstimateOptions &options) {
    check_grid_ceiling(options.n_sites);
    const std::size_t n_b = options.n_sites - options.n_a;
    BipartitePureState state = heisenberg_state(options.n_sites, options.n_a, options.j_tau);
    SiteLocation loc = locate_site(options.n_a, n_b, options.site);
    KrausSet projector = z_projection(loc.side == Side::kA ? options.n_a : n_b, loc.site);
    OutcomeEnsemble<double> outcomes = outcome_renyi2(apply_instrument_pure(state, projector, loc.side));

    Dataset data;
    data.name = "estimate-inset";
    data.columns = {"outcome", "p", "e2"};
    data.meta = {{"n", options.n_sites}, {"n_a", options.n_a}, {"j_tau", options.j_tau}, {"site", options.site}};
    std::size_t m = 0;
    for (const auto &item : outcomes) {
        data.add_row({static_cast<double>(m++), item.probability, item.payload});
    }
    return data;
}

SweepOptions with_sweep_defaults(SweepOptions o) {
    const std::string &ds = o.dataset;
    if (ds == "heisenberg") {
        if (o.alphas.empty()) {
            o.alphas = {0.01, 0.1, 0.2, 0.5};
        }
        if (o.grid.empty()) {
            o.grid = linspace(0.0, 10.0, 41);
        }
    } else if (ds == "partition") {
        if (o.alphas.empty()) {
            o.alphas = {0.1, 0.5};
        }
        if (o.grid.empty()) {
            o.grid = linspace(0.0, 10.0, 21);
        }
    } else if (ds == "ising") {
        if (o.alphas.empty()) {
            o.alphas = {0.2, 0.5};
        }
        if (o.grid.empty()) {
            o.grid = linspace(0.0, 2.5, 26);
        }
    } else if (ds == "thermo") {
        if (o.alphas.empty()) {
            o.alphas = {0.2, 0.5};
        }
        if (o.grid.empty()) {
            o.grid = linspace(0.0, 2.5, 26);
        }
    } else if (ds == "decoherence") {
        if (o.alphas.empty()) {
            o.alphas = {0.5};
        }
        if (o.grid.empty()) {
            o.grid = linspace(0.0, 0.9, 10);
        }
    } else {
        throw ValidationError("unknown sweep dataset '" + ds + "'");
    }
    return o;
}

namespace {

Dataset sweep_heisenberg(const SweepOptions &o) {
    check_grid_ceiling(o.n_sites);
    HeisenbergQuench quench(o.n_sites);
    Dataset data;
    data.name = "sweep-heisenberg";
    data.columns = {"j_tau", "alpha", "e_alpha", "e2", "e_povm"};
    data.meta = {{"n", o.n_sites}, {"n_a", o.n_a}, {"optimizer", optimizer_meta(o.optimizer)}};
    const std::size_t na = o.alphas.size();
    auto rows = parallel_map(o.grid.size() * na, o.threads, [&](std::size_t task) {
        double t = o.grid[task / na];
        double alpha = o.alphas[task % na];
        BipartitePureState state = quench.state(t, o.n_a);
        double povm = optimize_estimate(state, alpha, task_optimizer(o.optimizer, task)).estimate;
        return std::vector<Cell>{t, alpha, exact_renyi(state, alpha), exact_renyi(state, 2.0), povm};
    });
    for (auto &row : rows) {
        data.add_row(std::move(row));
    }
    return data;
}

Dataset sweep_partition(const SweepOptions &o) {
    check_grid_ceiling(o.n_sites);
    HeisenbergQuench quench(o.n_sites);
    Dataset data;
    data.name = "sweep-partition";
    data.columns = {"n_b", "j_tau", "alpha", "e_alpha", "e2", "e_povm"};
    data.meta = {{"n", o.n_sites}, {"optimizer", optimizer_meta(o.optimizer)}};
    const std::size_t na = o.alphas.size();
    const std::size_t per_partition = o.grid.size() * na;
    auto rows = parallel_map(o.partitions.size() * per_partition, o.threads, [&](std::size_t task) {
        std::size_t n_b = o.partitions[task / per_partition];
        std::size_t rest = task % per_partition;
        double t = o.grid[rest / na];
        double alpha = o.alphas[rest % na];
        if (n_b == 0 || n_b >= o.n_sites) {
            throw ValidationError("partition size N_B must lie in 1..N-1");
        }
        BipartitePureState state = quench.state(t, o.n_sites - n_b);
        double povm = optimize_estimate(state, alpha, task_optimizer(o.optimizer, task)).estimate;
        return std::vector<Cell>{static_cast<double>(n_b), t, alpha, exact_renyi(state, alpha),
                                 exact_renyi(state, 2.0), povm};
    });
    for (auto &row : rows) {
        data.add_row(std::move(row));
    }
    return data;
}

Dataset sweep_ising(const SweepOptions &o) {
    check_grid_ceiling(o.n_sites);
    const std::size_t n_b = o.n_sites - o.n_a;
    Dataset data;
    data.name = "sweep-ising";
    data.columns = {"j_over_h", "alpha", "e_alpha", "e2", "e_pauli", "e_spin_povm", "e_povm"};
    data.meta = {{"n", o.n_sites}, {"n_a", o.n_a}, {"optimizer", optimizer_meta(o.optimizer)}};
    const std::size_t na = o.alphas.size();
    auto rows = parallel_map(o.grid.size() * na, o.threads, [&](std::size_t task) {
        double j = o.grid[task / na];
        double alpha = o.alphas[task % na];
        BipartitePureState state = ising_ground_state(o.n_sites, o.n_a, j);
        SpinBest spin = best_single_spin(state, o.n_a, n_b, alpha);
        double povm = optimize_estimate(state, alpha, task_optimizer(o.optimizer, task)).estimate;
        return std::vector<Cell>{j,          alpha,     exact_renyi(state, alpha), exact_renyi(state, 2.0),
                                 spin.pauli, spin.povm, povm};
    });
    for (auto &row : rows) {
        data.add_row(std::move(row));
    }
    return data;
}

Dataset sweep_thermo(const SweepOptions &o) {
    Dataset data;
    data.name = "sweep-thermo";
    data.columns = {"length", "j_over_h", "alpha", "e_alpha", "e2", "e_povm", "retained_modes"};
    data.meta = {{"measured_modes", o.measured_modes}, {"optimizer", optimizer_meta(o.optimizer)}};
    const std::size_t na = o.alphas.size();
    const std::size_t per_length = o.grid.size() * na;
    auto rows = parallel_map(o.lengths.size() * per_length, o.threads, [&](std::size_t task) {
        std::size_t length = o.lengths[task / per_length];
        std::size_t rest = task % per_length;
        double j = o.grid[rest / na];
        double alpha = o.alphas[rest % na];
        ModeSpectrum modes = mode_spectrum(build_gamma(j, length));
        ThermoEstimate est = thermo_estimate(modes, alpha, o.measured_modes, task_optimizer(o.optimizer, task));
        return std::vector<Cell>{static_cast<double>(length), j, alpha, est.e_alpha, est.e2, est.estimate,
                                 static_cast<double>(est.retained_modes)};
    });
    for (auto &row : rows) {
        data.add_row(std::move(row));
    }
    return data;
}

Dataset sweep_decoherence(const SweepOptions &o) {
    Dataset data;
    data.name = "sweep-decoherence";
    data.columns = {"z", "alpha", "e_mixed_opt", "e2_direct", "e_alpha", "e2"};
    data.meta = {{"model", o.model}, {"optimizer", optimizer_meta(o.optimizer)}};
    const std::size_t na = o.alphas.size();
    if (o.model == "heisenberg") {
        check_grid_ceiling(o.n_sites);
        data.meta["n"] = o.n_sites;
        data.meta["n_a"] = o.n_a;
        data.meta["j_tau"] = o.j_tau;
        BipartitePureState state = heisenberg_state(o.n_sites, o.n_a, o.j_tau);
        auto rows = parallel_map(o.grid.size() * na, o.threads, [&](std::size_t task) {
            double z = o.grid[task / na];
            double alpha = o.alphas[task % na];
            DecoherenceSpec spec{z, std::nullopt};
            double mixed = optimize_mixed_estimate(state, spec, alpha, task_optimizer(o.optimizer, task)).estimate;
            return std::vector<Cell>{z, alpha, mixed, direct_mixed_bound(state, spec), exact_renyi(state, alpha),
                                     exact_renyi(state, 2.0)};
        });
        for (auto &row : rows) {
            data.add_row(std::move(row));
        }
    } else if (o.model == "ising") {
        std::size_t length = o.lengths.empty() ? 16 : o.lengths.front();
        data.meta["length"] = length;
        data.meta["j_over_h"] = o.j_over_h;
        data.meta["measured_modes"] = o.measured_modes;
        ModeSpectrum modes = mode_spectrum(build_gamma(o.j_over_h, length));
        auto rows = parallel_map(o.grid.size() * na, o.threads, [&](std::size_t task) {
            double z = o.grid[task / na];
            double alpha = o.alphas[task % na];
            DepolarizedModes noisy(modes, z, o.measured_modes);
            double mixed = optimize_mixed_estimate(noisy, alpha, task_optimizer(o.optimizer, task)).estimate;
            return std::vector<Cell>{z, alpha, mixed, noisy.direct_bound(), thermo_ree(modes, alpha),
                                     thermo_ree(modes, 2.0)};
        });
        for (auto &row : rows) {
            data.add_row(std::move(row));
        }
    } else {
        throw ValidationError("decoherence model must be heisenberg or ising");
    }
    return data;
}

}  // namespace

Dataset sweep_dataset(const SweepOptions &options) {
    SweepOptions o = with_sweep_defaults(options);
    if (o.dataset == "heisenberg") {
        return sweep_heisenberg(o);
    }
    if (o.dataset == "partition") {
        return sweep_partition(o);
    }
    if (o.dataset == "ising") {
        return sweep_ising(o);
    }
    if (o.dataset == "thermo") {
        return sweep_thermo(o);
    }
    return sweep_decoherence(o);
}

}  // namespace renyi
