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


#ifndef RENYI_NOISE_HPP
#define RENYI_NOISE_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "renyi/chains.hpp"
#include "renyi/linalg.hpp"
#include "renyi/measure.hpp"
#include "renyi/spectra.hpp"

namespace renyi {

/// rho~ = (1 - z)|Psi><Psi| + z sigma with a known sigma on AB.
struct DecoherenceSpec {
    double z;
    /// Defaults to the maximally mixed state (global depolarization).
    std::optional<ComplexMatrix> sigma;

    /// Throws ValidationError unless z is in [0, 1] and sigma, when given, is
    /// a density matrix of dimension dim_a * dim_b.
    void validate(Eigen::Index dim_a, Eigen::Index dim_b) const;
    /// Tr_A sigma.
    ComplexMatrix sigma_b(Eigen::Index dim_a, Eigen::Index dim_b) const;
};

/// Renyi continuity bound: (1/(1-alpha)) log[(1-e)^alpha + (d-1)^{1-alpha}
/// e^alpha] for e <= 1 - 1/d, and log d above. Throws DomainError for alpha
/// within kOneBand of 1.
double continuity_f(double epsilon, std::size_t d, double alpha);

/// The alpha = 2 case, -log[(1-e)^2 + e^2/(d-1)].
double continuity_f2(double epsilon, std::size_t d);

struct MixedOutcome {
    double q_tilde;
    double p;
    double r;
    /// z r / q~, an upper bound on the outcome's trace distance.
    double epsilon;
    double renyi2;
    /// The outcome's noisy local state rho~_B^m.
    ComplexMatrix rho_tilde;
};

/// Per-outcome statistics of measuring B on the decohered state. Outcomes
/// with q~ below kDropProbability are dropped.
std::vector<MixedOutcome> mixed_outcome_decomposition(const BipartitePureState &psi, const DecoherenceSpec &spec,
                                                      const KrausSet &kraus);

/// (1/c) log sum_m p_m exp(c [S_2(rho~_B^m) - f_2(e_m, d_B)]), c = (1 - alpha)
/// / alpha, where p_m is recovered from (q~_m - z r_m)/(1 - z).
double mixed_estimate(const BipartitePureState &psi, const DecoherenceSpec &spec, const KrausSet &kraus,
                      RenyiOrder alpha);

/// Same from precomputed outcomes; `d` is the measured dimension.
double mixed_estimate(const std::vector<MixedOutcome> &outcomes, double d, RenyiOrder alpha);

/// S_2(rho~_B) - f_2(e, d_B), e = (1/2)||rho_B - rho~_B||_1 computed exactly.
double direct_mixed_bound(const BipartitePureState &psi, const DecoherenceSpec &spec);

/// Maximizes mixed_estimate over dichotomic POVMs on B, identity included.
OptimizedPovm optimize_mixed_estimate(const BipartitePureState &psi, const DecoherenceSpec &spec, RenyiOrder alpha,
                                      const OptimizeOptions &options);

/// Thermodynamic-limit Ising reduced state rho_L = (x)_l rho_l under global
/// depolarization of strength z on the L sites. The POVM acts on a subset of
/// modes; purities factorize, so no 2^L matrix is formed.
class DepolarizedModes {
   public:
    /// `measured` modes are the least-pure retained ones.
    DepolarizedModes(const ModeSpectrum &modes, double z, std::size_t measured,
                     double purity_filter = kPurityFilter);

    /// Dimension 2^{|S|} of the measured subsystem.
    Eigen::Index measured_dim() const {
        return subset_rho_.rows();
    }
    /// Ê^mixed with the instrument acting on the measured modes.
    double estimate(const KrausSet &kraus, RenyiOrder alpha) const;
    /// S_2(rho~_L) - f_2(z (1/2)||rho_L - I/d||_1, d) with d = 2^L; filtered
    /// modes are treated as pure.
    double direct_bound() const;

   private:
    std::size_t length_;
    double z_;
    ComplexMatrix subset_rho_;
    /// prod over unmeasured modes of Tr(rho_l^2).
    double rest_purity_;
    std::vector<double> retained_nus_;
};

OptimizedPovm optimize_mixed_estimate(const DepolarizedModes &modes, RenyiOrder alpha, const OptimizeOptions &options);

}  // namespace renyi

#endif
