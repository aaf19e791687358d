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


#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "renyi/dataset.hpp"
#include "renyi/errors.hpp"
#include "renyi/figures.hpp"
#include "renyi/parallel.hpp"
#include "renyi/verify.hpp"

namespace {

constexpr int kExitError = 1;
constexpr int kExitPropertyFailure = 2;

struct GlobalOptions {
    std::uint64_t seed = 0;
    std::string out;
    std::string format = "csv";
    std::size_t threads = 0;
};

struct OptimizerFlags {
    std::size_t restarts = 16;
    std::size_t budget = 2000;

    void attach(CLI::App *cmd) {
        cmd->add_option("--restarts", restarts, "Optimizer restarts per estimate")->capture_default_str();
        cmd->add_option("--budget", budget, "Objective evaluations per restart")->capture_default_str();
    }
    renyi::OptimizeOptions resolve(const GlobalOptions &g) const {
        renyi::OptimizeOptions o;
        o.restarts = restarts;
        o.budget = budget;
        o.seed = g.seed;
        return o;
    }
};

std::size_t thread_count(const GlobalOptions &g) {
    return g.threads == 0 ? renyi::default_thread_count() : g.threads;
}

template <typename Write>
void emit(const GlobalOptions &g, Write &&write) {
    if (g.out.empty() || g.out == "-") {
        write(std::cout);
        return;
    }
    std::ofstream file(g.out, std::ios::binary);
    if (!file) {
        throw renyi::ValidationError("cannot open output file '" + g.out + "'");
    }
    write(file);
}

void emit_dataset(const GlobalOptions &g, const renyi::Dataset &data) {
    emit(g, [&](std::ostream &os) {
        if (g.format == "json") {
            renyi::write_json(os, data);
        } else {
            renyi::write_csv(os, data);
        }
    });
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Renyi entanglement under SLOCC: bounds, protocols and estimation datasets"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config", "", "key=value file; command-line flags take precedence");

    GlobalOptions g;
    app.add_option("--seed", g.seed, "Base seed for every random stream")->capture_default_str();
    app.add_option("--out", g.out, "Output path (stdout when omitted)");
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    app.add_option("--threads", g.threads, "Worker threads (0 = hardware concurrency)")->capture_default_str();

    renyi::DistillOptions distill;
    bool scatter = false;
    renyi::ScatterOptions scatter_opts;
    auto *distill_cmd = app.add_subcommand("distill", "Success-probability bounds and protocols from chi(r)");
    distill_cmd->add_option("--r", distill.r, "Geometric ratio of the initial spectrum")->capture_default_str();
    distill_cmd->add_option("--d", distill.d, "Schmidt rank")->capture_default_str();
    distill_cmd->add_option("--points", distill.points, "Target grid points")->capture_default_str();
    distill_cmd->add_flag("--scatter", scatter, "Emit the random-sample scatter instead");
    distill_cmd->add_option("--samples", scatter_opts.samples, "Scatter samples")->capture_default_str();

    auto *scatter_cmd = app.add_subcommand("distill-scatter", "P^REE against optimized P^GEE for random states");
    scatter_cmd->add_option("--samples", scatter_opts.samples, "Number of random initial states")->capture_default_str();
    scatter_cmd->add_option("--d", scatter_opts.d, "Schmidt rank")->capture_default_str();

    renyi::EstimateOptions estimate;
    OptimizerFlags estimate_opt;
    bool inset = false;
    auto *estimate_cmd = app.add_subcommand("estimate", "Measurement-based REE estimates after a Heisenberg quench");
    estimate_cmd->add_option("--n-sites", estimate.n_sites, "Chain length")->capture_default_str();
    estimate_cmd->add_option("--n-a", estimate.n_a, "Sites in party A")->capture_default_str();
    estimate_cmd->add_option("--j-tau", estimate.j_tau, "Evolution time in units of 1/J")->capture_default_str();
    estimate_cmd->add_option("--alphas", estimate.alphas, "Renyi orders (default 0..2 step 0.05)")->delimiter(',');
    estimate_cmd->add_option("--site", estimate.site, "Site of the single-spin projection")->capture_default_str();
    estimate_cmd->add_flag("--inset", inset, "Emit the projection outcome distribution");
    estimate_opt.attach(estimate_cmd);

    renyi::SweepOptions sweep;
    OptimizerFlags sweep_opt;
    auto *sweep_cmd = app.add_subcommand("sweep", "Parameter sweeps of the estimation datasets");
    sweep_cmd->add_option("--dataset", sweep.dataset, "Sweep to run")
        ->required()
        ->check(CLI::IsMember({"heisenberg", "partition", "ising", "thermo", "decoherence"}));
    sweep_cmd->add_option("--alphas", sweep.alphas, "Renyi orders")->delimiter(',');
    sweep_cmd->add_option("--grid", sweep.grid, "Sweep grid: J tau, J/h or z")->delimiter(',');
    sweep_cmd->add_option("--n-sites", sweep.n_sites, "Chain length")->capture_default_str();
    sweep_cmd->add_option("--n-a", sweep.n_a, "Sites in party A")->capture_default_str();
    sweep_cmd->add_option("--partitions", sweep.partitions, "Sizes of party B")->delimiter(',');
    sweep_cmd->add_option("--lengths", sweep.lengths, "Subsystem lengths L")->delimiter(',');
    sweep_cmd->add_option("--measured-modes", sweep.measured_modes, "Modes acted on by the POVM")->capture_default_str();
    sweep_cmd->add_option("--model", sweep.model, "Decoherence model")
        ->check(CLI::IsMember({"heisenberg", "ising"}))
        ->capture_default_str();
    sweep_cmd->add_option("--j-tau", sweep.j_tau, "Evolution time for fixed-time sweeps")->capture_default_str();
    sweep_cmd->add_option("--j-over-h", sweep.j_over_h, "Coupling for fixed-coupling sweeps")->capture_default_str();
    sweep_opt.attach(sweep_cmd);

    std::string suite;
    std::size_t trials = 1000;
    auto *verify_cmd = app.add_subcommand("verify", "Randomized property suites; JSON report");
    verify_cmd->add_option("--suite", suite, "Suite to run")
        ->required()
        ->check(CLI::IsMember({"monotone", "statistics", "bounds", "estimation", "chains"}));
    verify_cmd->add_option("--trials", trials, "Random trials")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e) == 0 ? 0 : kExitError;
    }

    try {
        if (*distill_cmd) {
            if (scatter) {
                scatter_opts.d = distill.d;
                scatter_opts.seed = g.seed;
                scatter_opts.threads = thread_count(g);
                emit_dataset(g, renyi::distill_scatter_dataset(scatter_opts));
            } else {
                distill.threads = thread_count(g);
                emit_dataset(g, renyi::distill_dataset(distill));
            }
        } else if (*scatter_cmd) {
            scatter_opts.seed = g.seed;
            scatter_opts.threads = thread_count(g);
            emit_dataset(g, renyi::distill_scatter_dataset(scatter_opts));
        } else if (*estimate_cmd) {
            estimate.optimizer = estimate_opt.resolve(g);
            estimate.threads = thread_count(g);
            emit_dataset(g, inset ? renyi::estimate_inset_dataset(estimate) : renyi::estimate_dataset(estimate));
        } else if (*sweep_cmd) {
            sweep.optimizer = sweep_opt.resolve(g);
            sweep.threads = thread_count(g);
            emit_dataset(g, renyi::sweep_dataset(sweep));
        } else if (*verify_cmd) {
            renyi::VerifyReport report = renyi::run_verify(suite, trials, g.seed);
            emit(g, [&](std::ostream &os) { os << report.to_json().dump(2) << '\n'; });
            return report.passed() ? 0 : kExitPropertyFailure;
        }
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
    return 0;
}
