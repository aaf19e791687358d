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


#include "renyi/noise.hpp"

#include <cmath>
#include <string>

#include "renyi/bounds.hpp"
#include "renyi/errors.hpp"

namespace renyi {

namespace {

struct LocalPair {
    ComplexMatrix rho_b;
    ComplexMatrix sigma_b;
};

LocalPair local_pair(const BipartitePureState &psi, const DecoherenceSpec &spec) {
    spec.validate(psi.dim_a(), psi.dim_b());
    return {psi.rho_b(), spec.sigma_b(psi.dim_a(), psi.dim_b())};
}

std::vector<MixedOutcome> decompose(const LocalPair &local, double z, const KrausSet &kraus) {
    if (kraus.dim() != local.rho_b.rows()) {
        throw ValidationError("instrument dimension does not match subsystem B");
    }
    std::vector<MixedOutcome> out;
    for (const auto &k : kraus.operators()) {
        ComplexMatrix signal = k * local.rho_b * k.adjoint();
        ComplexMatrix noise = k * local.sigma_b * k.adjoint();
        double p_direct = signal.trace().real();
        double r = noise.trace().real();
        double q = (1 - z) * p_direct + z * r;
        if (q < kDropProbability) {
            continue;
        }
        double p = p_direct;
        if (z < 1) {
            p = (q - z * r) / (1 - z);
            if (p < -1e-10) {
                throw ValidationError("recovered outcome probability " + std::to_string(p) + " is negative");
            }
            p = std::max(p, 0.0);
        }
        ComplexMatrix rho_tilde = ((1 - z) * signal + z * noise) / q;
        double s2 = renyi2_entropy(rho_tilde);
        out.push_back({q, p, r, z * r / q, s2, std::move(rho_tilde)});
    }
    return out;
}

// Same as continuity_f2 but with a floating dimension, for d = 2^L with
// large L.
double f2_real(double epsilon, double d) {
    if (epsilon <= 0) {
        return 0.0;
    }
    if (epsilon > 1.0 - 1.0 / d) {
        return std::log(d);
    }
    return -std::log((1 - epsilon) * (1 - epsilon) + epsilon * epsilon / (d - 1));
}

double estimate_from_values(std::vector<Outcome<double>> items, RenyiOrder alpha) {
    double total = 0;
    for (const auto &item : items) {
        total += item.probability;
    }
    if (!(total > 0)) {
        throw ValidationError("no outcome carries signal probability");
    }
    for (auto &item : items) {
        item.probability /= total;
    }
    return estimate_e_alpha(OutcomeEnsemble<double>(std::move(items)), alpha);
}

void check_order(RenyiOrder alpha) {
    if (alpha.alpha() > 2.0) {
        throw DomainError("mixed-state estimation needs alpha <= 2");
    }
}

}  // namespace

void DecoherenceSpec::validate(Eigen::Index dim_a, Eigen::Index dim_b) const {
    if (!(z >= 0 && z <= 1)) {
        throw ValidationError("decoherence weight z must lie in [0, 1]");
    }
    if (sigma) {
        if (sigma->rows() != dim_a * dim_b) {
            throw ValidationError("noise state dimension does not match the bipartition");
        }
        validate_density_matrix(*sigma, 1e-9);
    }
}

ComplexMatrix DecoherenceSpec::sigma_b(Eigen::Index dim_a, Eigen::Index dim_b) const {
    if (!sigma) {
        return ComplexMatrix::Identity(dim_b, dim_b) / static_cast<double>(dim_b);
    }
    ComplexMatrix out = ComplexMatrix::Zero(dim_b, dim_b);
    for (Eigen::Index a = 0; a < dim_a; ++a) {
        out += sigma->block(a * dim_b, a * dim_b, dim_b, dim_b);
    }
    return out;
}

double continuity_f(double epsilon, std::size_t d, double alpha) {
    if (!(alpha > 0) || std::abs(alpha - 1.0) < kOneBand) {
        throw DomainError("continuity bound needs alpha > 0 and alpha != 1");
    }
    if (d < 2) {
        throw ValidationError("continuity bound needs d >= 2");
    }
    double dd = static_cast<double>(d);
    if (epsilon > 1.0 - 1.0 / dd) {
        return std::log(dd);
    }
    if (epsilon <= 0) {
        return 0.0;
    }
    double inner = std::pow(1 - epsilon, alpha) + std::pow(dd - 1, 1 - alpha) * std::pow(epsilon, alpha);
    return std::log(inner) / (1 - alpha);
}

double continuity_f2(double epsilon, std::size_t d) {
    if (d < 2) {
        throw ValidationError("continuity bound needs d >= 2");
    }
    return f2_real(epsilon, static_cast<double>(d));
}

std::vector<MixedOutcome> mixed_outcome_decomposition(const BipartitePureState &psi, const DecoherenceSpec &spec,
                                                      const KrausSet &kraus) {
    return decompose(local_pair(psi, spec), spec.z, kraus);
}

double mixed_estimate(const std::vector<MixedOutcome> &outcomes, double d, RenyiOrder alpha) {
    check_order(alpha);
    std::vector<Outcome<double>> items;
    for (const auto &o : outcomes) {
        if (o.p > 0) {
            items.push_back({o.p, o.renyi2 - f2_real(o.epsilon, d)});
        }
    }
    return estimate_from_values(std::move(items), alpha);
}

double mixed_estimate(const BipartitePureState &psi, const DecoherenceSpec &spec, const KrausSet &kraus,
                      RenyiOrder alpha) {
    return mixed_estimate(mixed_outcome_decomposition(psi, spec, kraus), static_cast<double>(psi.dim_b()), alpha);
}

double direct_mixed_bound(const BipartitePureState &psi, const DecoherenceSpec &spec) {
    LocalPair local = local_pair(psi, spec);
    ComplexMatrix noisy = (1 - spec.z) * local.rho_b + spec.z * local.sigma_b;
    double epsilon = 0.5 * trace_norm_hermitian(local.rho_b - noisy);
    return renyi2_entropy(noisy) - continuity_f2(epsilon, static_cast<std::size_t>(psi.dim_b()));
}

OptimizedPovm optimize_mixed_estimate(const BipartitePureState &psi, const DecoherenceSpec &spec, RenyiOrder alpha,
                                      const OptimizeOptions &options) {
    check_order(alpha);
    LocalPair local = local_pair(psi, spec);
    auto d = static_cast<double>(psi.dim_b());
    return optimize_dichotomic(
        psi.dim_b(),
        [&](const KrausSet &k) { return mixed_estimate(decompose(local, spec.z, k), d, alpha); }, options);
}

DepolarizedModes::DepolarizedModes(const ModeSpectrum &modes, double z, std::size_t measured, double purity_filter)
    : length_(modes.nus.size() + modes.filtered_count), z_(z), rest_purity_(1.0) {
    if (!(z >= 0 && z <= 1)) {
        throw ValidationError("decoherence weight z must lie in [0, 1]");
    }
    if (length_ == 0) {
        throw ValidationError("mode spectrum is empty");
    }
    ModeSpectrum kept = retain_mixed_modes(modes, purity_filter);
    retained_nus_ = kept.nus;
    std::size_t count = std::min(measured, kept.nus.size());
    ModeSpectrum subset;
    subset.nus.assign(kept.nus.end() - static_cast<std::ptrdiff_t>(count), kept.nus.end());
    subset_rho_ = rho_L_matrix(subset, 1.0);
    // Unmeasured modes: every input mode except the measured tail.
    std::size_t skipped = 0;
    for (auto it = modes.nus.rbegin(); it != modes.nus.rend(); ++it) {
        if (*it <= purity_filter && skipped < count) {
            ++skipped;
            continue;
        }
        rest_purity_ *= (1 + *it * *it) / 2;
    }
}

double DepolarizedModes::estimate(const KrausSet &kraus, RenyiOrder alpha) const {
    check_order(alpha);
    const Eigen::Index ds = measured_dim();
    if (kraus.dim() != ds) {
        throw ValidationError("instrument dimension does not match the measured modes");
    }
    const double d = std::ldexp(1.0, static_cast<int>(length_));
    // Dimension of the unmeasured register.
    const double d_rest = d / static_cast<double>(ds);
    std::vector<Outcome<double>> items;
    for (const auto &k : kraus.operators()) {
        ComplexMatrix a = k * subset_rho_ * k.adjoint();
        ComplexMatrix b = k * k.adjoint() / static_cast<double>(ds);
        double p = a.trace().real();
        double r = b.trace().real();
        double q = (1 - z_) * p + z_ * r;
        if (q < kDropProbability || p <= 0) {
            continue;
        }
        double tr_aa = (a.adjoint() * a).trace().real();
        double tr_ab = (a.adjoint() * b).trace().real();
        double tr_bb = (b.adjoint() * b).trace().real();
        double purity = ((1 - z_) * (1 - z_) * tr_aa * rest_purity_ + 2 * z_ * (1 - z_) * tr_ab / d_rest +
                         z_ * z_ * tr_bb / d_rest) /
                        (q * q);
        double s2 = -std::log(purity);
        items.push_back({p, s2 - f2_real(z_ * r / q, d)});
    }
    return estimate_from_values(std::move(items), alpha);
}

double DepolarizedModes::direct_bound() const {
    const double d = std::ldexp(1.0, static_cast<int>(length_));
    double purity_l = rest_purity_;
    RealVector diag = subset_rho_.diagonal().real();
    purity_l *= diag.squaredNorm();
    double purity = (1 - z_) * (1 - z_) * purity_l + (2 * z_ * (1 - z_) + z_ * z_) / d;

    // Spectrum of rho_L over the retained modes; filtered modes contribute
    // eigenvalue 1 on one state and 0 elsewhere.
    std::vector<double> lambdas{1.0};
    for (double nu : retained_nus_) {
        std::vector<double> next;
        next.reserve(2 * lambdas.size());
        for (double v : lambdas) {
            next.push_back(v * (1 + nu) / 2);
            next.push_back(v * (1 - nu) / 2);
        }
        lambdas = std::move(next);
    }
    double distance = 0;
    for (double v : lambdas) {
        distance += std::abs(v - 1.0 / d);
    }
    distance += (d - static_cast<double>(lambdas.size())) / d;
    double epsilon = z_ * 0.5 * distance;
    return -std::log(purity) - f2_real(epsilon, d);
}

OptimizedPovm optimize_mixed_estimate(const DepolarizedModes &modes, RenyiOrder alpha, const OptimizeOptions &options) {
    return optimize_dichotomic(
        modes.measured_dim(), [&](const KrausSet &k) { return modes.estimate(k, alpha); }, options);
}

}  // namespace renyi
