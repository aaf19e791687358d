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


#ifndef RENYI_FIGURES_HPP
#define RENYI_FIGURES_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "renyi/dataset.hpp"
#include "renyi/measure.hpp"

namespace renyi {

/// Entanglement raising from chi(r): lambda_i proportional to r^i.
struct DistillOptions {
    double r = 0.86;
    std::size_t d = 500;
    /// Grid over Delta E_S in [0, log d - E_S(chi)], endpoints included.
    std::size_t points = 60;
    std::size_t threads = 1;
};

struct DistillRow {
    double delta_e;
    double e_target;
    double p_ree;
    double p_gee_half;
    double p_gee_opt;
    double argmin_beta;
    double p_mix;
    double p_phik;
    bool mix_converged;
};

std::vector<DistillRow> distill_rows(const DistillOptions &options);
Dataset distill_dataset(const DistillOptions &options);

/// Random initial states from Dirichlet(1) with E_target uniform in
/// (E_S, log d).
struct ScatterOptions {
    std::size_t samples = 200;
    std::size_t d = 500;
    std::uint64_t seed = 0;
    std::size_t threads = 1;
};

Dataset distill_scatter_dataset(const ScatterOptions &options);

/// Heisenberg quench estimation at one time.
struct EstimateOptions {
    std::size_t n_sites = 8;
    std::size_t n_a = 6;
    double j_tau = 4.1;
    std::vector<double> alphas;
    /// Chain site of the single-spin Z projection.
    std::size_t site = 4;
    OptimizeOptions optimizer;
    std::size_t threads = 1;
};

/// Alpha grid 0, 0.05, ..., 2.
std::vector<double> default_alpha_grid();

Dataset estimate_dataset(const EstimateOptions &options);
/// Outcome distribution {p_m, E_2(Psi_m)} of the single-spin Z projection.
Dataset estimate_inset_dataset(const EstimateOptions &options);

struct SweepOptions {
    /// heisenberg | partition | ising | thermo | decoherence.
    std::string dataset;
    std::vector<double> alphas;
    /// Parameter grid (J tau, J/h or z, depending on the dataset).
    std::vector<double> grid;
    std::size_t n_sites = 8;
    std::size_t n_a = 6;
    std::vector<std::size_t> partitions{2, 3, 4};
    std::vector<std::size_t> lengths{16};
    std::size_t measured_modes = 3;
    /// For decoherence: heisenberg | ising.
    std::string model = "heisenberg";
    double j_tau = 4.1;
    double j_over_h = 1.0;
    OptimizeOptions optimizer;
    std::size_t threads = 1;
};

/// Fills empty alpha lists and grids with the dataset's defaults.
SweepOptions with_sweep_defaults(SweepOptions options);

Dataset sweep_dataset(const SweepOptions &options);

/// Evenly spaced points from lo to hi inclusive.
std::vector<double> linspace(double lo, double hi, std::size_t n);

}  // namespace renyi

#endif
