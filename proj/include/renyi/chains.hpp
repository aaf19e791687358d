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


#ifndef RENYI_CHAINS_HPP
#define RENYI_CHAINS_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "renyi/linalg.hpp"
#include "renyi/measure.hpp"
#include "renyi/spectra.hpp"

namespace renyi {

/// Dense diagonalization ceiling.
inline constexpr std::size_t kMaxChainSites = 14;
inline constexpr std::size_t kDefaultQuadPoints = 4096;
/// Hard cap on the adaptive trapezoid node count.
inline constexpr std::size_t kMaxQuadPoints = std::size_t{1} << 20;
inline constexpr double kPurityFilter = 1.0 - 1e-10;
inline constexpr std::size_t kMaxRetainedModes = 10;

// Basis convention for all spin chains: bit value 0 is |up> (sigma_z = +1),
// and site 1 is the most significant bit, so the first N_A sites index the
// rows of the amplitude matrix.

/// Quench of H = -J sum_j sigma^(j) . sigma^(j+1) (periodic) from the Neel
/// state |dn up dn ... up>, with time measured as J tau. The Hamiltonian is
/// diagonalized once, inside the total-S_z sector of the Neel state.
class HeisenbergQuench {
   public:
    /// N even, 2 <= N <= kMaxChainSites.
    explicit HeisenbergQuench(std::size_t n_sites);

    std::size_t sites() const {
        return n_sites_;
    }
    /// Full 2^N state vector at time J tau.
    ComplexVector evolve(double j_tau) const;
    /// Amplitude matrix for the split (N_A, N - N_A).
    BipartitePureState state(double j_tau, std::size_t n_a) const;
    /// Largest |H v - e v| over the eigenpairs, measured at construction.
    double eigen_residual() const {
        return eigen_residual_;
    }

   private:
    std::size_t n_sites_;
    std::vector<std::uint32_t> basis_;
    RealVector energies_;
    RealMatrix vectors_;
    RealVector neel_overlaps_;
    double eigen_residual_;
};

BipartitePureState heisenberg_state(std::size_t n_sites, std::size_t n_a, double j_tau);

/// Index of |dn up dn ... up> in the 2^N basis.
std::uint32_t neel_index(std::size_t n_sites);

struct IsingGroundState {
    BipartitePureState state;
    double energy;
    /// Gap to the next level of the even-parity sector.
    double gap;
};

/// Ground state of H = -h sum sigma_z - J sum sigma_x sigma_x (open chain,
/// h = 1) from the even sector of prod sigma_z, which holds the ground
/// state for h > 0. Phase fixed so the first nonzero amplitude is positive.
/// Throws ValidationError when the sector gap is below 1e-10.
IsingGroundState ising_ground(std::size_t n_sites, std::size_t n_a, double j_over_h);
BipartitePureState ising_ground_state(std::size_t n_sites, std::size_t n_a, double j_over_h);

/// Trapezoid node count used for ratio a: at least `quad_points`, raised to
/// about 36/|ln a| so the geometric error is at round-off, capped at
/// kMaxQuadPoints (reached at a = 1).
std::size_t quadrature_nodes(double a, std::size_t quad_points);

/// g_l = (1/2pi) int e^{-il phi} z/|z| dphi with z = a e^{-i phi} - 1,
/// by the half-step-offset trapezoid rule. Throws if |Im g_l| > 1e-10.
double ising_gl(double a, int l, std::size_t quad_points = kDefaultQuadPoints);

/// g_l for l = -max_l..max_l (index l + max_l), sharing one node sweep.
std::vector<double> ising_g_coefficients(double a, int max_l, std::size_t quad_points = kDefaultQuadPoints);

struct CorrelationMatrix {
    /// 2L x 2L antisymmetric Majorana correlation matrix.
    RealMatrix gamma;
};

/// Block-Toeplitz Gamma_L with block (i, j) = Pi_{j-i},
/// Pi_l = [[0, g_l], [-g_{-l}, 0]].
CorrelationMatrix build_gamma(double a, std::size_t length, std::size_t quad_points = kDefaultQuadPoints);

struct ModeSpectrum {
    /// nu_l in [0, 1], descending.
    std::vector<double> nus;
    /// Modes removed by a purity filter.
    std::size_t filtered_count = 0;
};

/// nu_l from the singular values of Gamma, which come in equal pairs.
/// Throws ValidationError on a pairing failure or nu > 1 + 1e-9.
ModeSpectrum mode_spectrum(const CorrelationMatrix &gamma);

/// sum_l S_alpha((1 + nu_l)/2, (1 - nu_l)/2) over every mode.
double thermo_ree(const ModeSpectrum &modes, RenyiOrder order);

/// Modes with nu <= purity_filter.
ModeSpectrum retain_mixed_modes(const ModeSpectrum &modes, double purity_filter = kPurityFilter);

/// Tensor product of diag((1 + nu)/2, (1 - nu)/2) over the retained modes in
/// stored order; the 1 x 1 identity when none remain. Throws ValidationError
/// for more than kMaxRetainedModes.
ComplexMatrix rho_L_matrix(const ModeSpectrum &modes, double purity_filter = kPurityFilter);

struct ThermoEstimate {
    double estimate;
    double e_alpha;
    double e2;
    /// Modes the optimized POVM acted on.
    std::size_t measured_modes;
    std::size_t retained_modes;
};

/// Optimizes a dichotomic POVM on the `measured_modes` least-pure retained
/// modes; every other mode is left unmeasured and adds its exact S_2 (the
/// modes are uncorrelated, so outcome entropies are additive).
ThermoEstimate thermo_estimate(const ModeSpectrum &modes, RenyiOrder alpha, std::size_t measured_modes,
                               const OptimizeOptions &options, double purity_filter = kPurityFilter);

}  // namespace renyi

#endif
