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


#include "renyi/chains.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "renyi/errors.hpp"

namespace renyi {

namespace {

void check_split(std::size_t n_sites, std::size_t n_a) {
    if (n_a == 0 || n_a >= n_sites) {
        throw ValidationError("bipartition needs 1 <= N_A < N");
    }
}

// Bit mask of 1-based site k in an n-site register.
std::uint32_t site_bit(std::size_t n_sites, std::size_t k) {
    return std::uint32_t{1} << (n_sites - k);
}

std::vector<std::uint32_t> sector_basis(std::size_t n_sites, auto keep) {
    std::vector<std::uint32_t> basis;
    for (std::uint32_t s = 0; s < (std::uint32_t{1} << n_sites); ++s) {
        if (keep(s)) {
            basis.push_back(s);
        }
    }
    return basis;
}

std::vector<std::int64_t> position_table(std::size_t n_sites, const std::vector<std::uint32_t> &basis) {
    std::vector<std::int64_t> position(std::size_t{1} << n_sites, -1);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        position[basis[i]] = static_cast<std::int64_t>(i);
    }
    return position;
}

double residual_of(const RealMatrix &h, const Eigen::SelfAdjointEigenSolver<RealMatrix> &solver) {
    RealMatrix r = h * solver.eigenvectors() - solver.eigenvectors() * solver.eigenvalues().asDiagonal();
    return r.size() == 0 ? 0.0 : r.cwiseAbs().maxCoeff();
}

BipartitePureState scatter_to_split(const ComplexVector &full, std::size_t n_sites, std::size_t n_a) {
    auto dim_a = Eigen::Index{1} << n_a;
    auto dim_b = Eigen::Index{1} << (n_sites - n_a);
    return BipartitePureState::from_vector(full, dim_a, dim_b);
}

double mode_renyi(double nu, RenyiOrder order) {
    std::vector<double> p{(1 + nu) / 2, (1 - nu) / 2};
    return renyi_entropy(std::span<const double>(p), order);
}

}  // namespace

std::uint32_t neel_index(std::size_t n_sites) {
    std::uint32_t idx = 0;
    for (std::size_t k = 1; k <= n_sites; k += 2) {
        idx |= site_bit(n_sites, k);
    }
    return idx;
}

HeisenbergQuench::HeisenbergQuench(std::size_t n_sites) : n_sites_(n_sites) {
    if (n_sites < 2 || n_sites % 2 != 0 || n_sites > kMaxChainSites) {
        throw ValidationError("Heisenberg quench needs an even N in [2, " + std::to_string(kMaxChainSites) + "]");
    }
    const std::uint32_t neel = neel_index(n_sites);
    const int downs = std::popcount(neel);
    basis_ = sector_basis(n_sites, [&](std::uint32_t s) { return std::popcount(s) == downs; });
    std::vector<std::int64_t> position = position_table(n_sites, basis_);

    auto dim = static_cast<Eigen::Index>(basis_.size());
    RealMatrix h = RealMatrix::Zero(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        std::uint32_t s = basis_[static_cast<std::size_t>(i)];
        for (std::size_t k = 1; k <= n_sites; ++k) {
            std::uint32_t mask = site_bit(n_sites, k) | site_bit(n_sites, k % n_sites + 1);
            bool aligned = std::popcount(s & mask) != 1;
            h(i, i) -= aligned ? 1.0 : -1.0;
            if (!aligned) {
                // sigma_x sigma_x + sigma_y sigma_y swaps antiparallel spins with weight 2.
                h(position[s ^ mask], i) -= 2.0;
            }
        }
    }
    Eigen::SelfAdjointEigenSolver<RealMatrix> solver(h);
    energies_ = solver.eigenvalues();
    vectors_ = solver.eigenvectors();
    neel_overlaps_ = vectors_.row(position[neel]).transpose();
    eigen_residual_ = residual_of(h, solver);
}

ComplexVector HeisenbergQuench::evolve(double j_tau) const {
    ComplexVector coeffs(energies_.size());
    for (Eigen::Index k = 0; k < energies_.size(); ++k) {
        coeffs(k) = std::polar(neel_overlaps_(k), -energies_(k) * j_tau);
    }
    ComplexVector sector = vectors_.cast<Complex>() * coeffs;
    ComplexVector full = ComplexVector::Zero(Eigen::Index{1} << n_sites_);
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        full(basis_[i]) = sector(static_cast<Eigen::Index>(i));
    }
    return full;
}

BipartitePureState HeisenbergQuench::state(double j_tau, std::size_t n_a) const {
    check_split(n_sites_, n_a);
    return scatter_to_split(evolve(j_tau), n_sites_, n_a);
}

BipartitePureState heisenberg_state(std::size_t n_sites, std::size_t n_a, double j_tau) {
    return HeisenbergQuench(n_sites).state(j_tau, n_a);
}

IsingGroundState ising_ground(std::size_t n_sites, std::size_t n_a, double j_over_h) {
    if (n_sites < 2 || n_sites > kMaxChainSites) {
        throw ValidationError("Ising chain needs 2 <= N <= " + std::to_string(kMaxChainSites));
    }
    check_split(n_sites, n_a);
    const double h_field = 1.0;
    std::vector<std::uint32_t> basis = sector_basis(n_sites, [](std::uint32_t s) { return std::popcount(s) % 2 == 0; });
    std::vector<std::int64_t> position = position_table(n_sites, basis);

    auto dim = static_cast<Eigen::Index>(basis.size());
    RealMatrix h = RealMatrix::Zero(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        std::uint32_t s = basis[static_cast<std::size_t>(i)];
        h(i, i) = -h_field * (static_cast<double>(n_sites) - 2.0 * std::popcount(s));
        for (std::size_t k = 1; k < n_sites; ++k) {
            std::uint32_t mask = site_bit(n_sites, k) | site_bit(n_sites, k + 1);
            h(position[s ^ mask], i) -= j_over_h;
        }
    }
    Eigen::SelfAdjointEigenSolver<RealMatrix> solver(h);
    double gap = dim > 1 ? solver.eigenvalues()(1) - solver.eigenvalues()(0) : INFINITY;
    if (gap < 1e-10) {
        throw ValidationError("Ising ground space is degenerate (gap " + std::to_string(gap) + ")");
    }
    RealVector ground = solver.eigenvectors().col(0);
    for (Eigen::Index i = 0; i < dim; ++i) {
        if (std::abs(ground(i)) > 1e-12) {
            if (ground(i) < 0) {
                ground = -ground;
            }
            break;
        }
    }
    ComplexVector full = ComplexVector::Zero(Eigen::Index{1} << n_sites);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        full(basis[i]) = ground(static_cast<Eigen::Index>(i));
    }
    return IsingGroundState{
        .state = scatter_to_split(full, n_sites, n_a),
        .energy = solver.eigenvalues()(0),
        .gap = gap,
    };
}

BipartitePureState ising_ground_state(std::size_t n_sites, std::size_t n_a, double j_over_h) {
    return ising_ground(n_sites, n_a, j_over_h).state;
}

std::size_t quadrature_nodes(double a, std::size_t quad_points) {
    double log_a = std::abs(std::log(a));
    if (log_a == 0) {
        return kMaxQuadPoints;
    }
    double wanted = std::ceil(36.0 / log_a);
    if (!(wanted < static_cast<double>(kMaxQuadPoints))) {
        return kMaxQuadPoints;
    }
    return std::max(quad_points, static_cast<std::size_t>(wanted));
}

std::vector<double> ising_g_coefficients(double a, int max_l, std::size_t quad_points) {
    if (!(a >= 0) || !std::isfinite(a)) {
        throw DomainError("g_l needs a finite ratio a >= 0");
    }
    if (quad_points < 256) {
        throw ValidationError("g_l quadrature needs at least 256 points");
    }
    if (max_l < 0) {
        throw ValidationError("g_l needs max_l >= 0");
    }
    const std::size_t n = quadrature_nodes(a, quad_points);
    const auto width = static_cast<std::size_t>(max_l);
    std::vector<Complex> positive(width + 1, 0.0);
    std::vector<Complex> negative(width + 1, 0.0);
    const double step = 2.0 * std::numbers::pi / static_cast<double>(n);
    for (std::size_t j = 0; j < n; ++j) {
        double phi = (static_cast<double>(j) + 0.5) * step;
        Complex z(a * std::cos(phi) - 1.0, -a * std::sin(phi));
        Complex w = z / std::abs(z);
        Complex r = std::polar(1.0, -phi);
        Complex up = w;
        Complex down = w;
        for (std::size_t l = 0; l <= width; ++l) {
            positive[l] += up;
            negative[l] += down;
            up *= r;
            down *= std::conj(r);
        }
    }
    std::vector<double> g(2 * width + 1);
    auto finish = [&](Complex sum, int l) {
        Complex value = sum / static_cast<double>(n);
        if (std::abs(value.imag()) > 1e-10) {
            throw std::runtime_error("g_" + std::to_string(l) + " has imaginary residual " +
                                     std::to_string(value.imag()));
        }
        return value.real();
    };
    for (std::size_t l = 0; l <= width; ++l) {
        int li = static_cast<int>(l);
        g[width + l] = finish(positive[l], li);
        g[width - l] = finish(negative[l], -li);
    }
    return g;
}

double ising_gl(double a, int l, std::size_t quad_points) {
    int m = std::abs(l);
    return ising_g_coefficients(a, m, quad_points)[static_cast<std::size_t>(l + m)];
}

CorrelationMatrix build_gamma(double a, std::size_t length, std::size_t quad_points) {
    if (length < 1) {
        throw ValidationError("correlation matrix needs L >= 1");
    }
    const int max_l = static_cast<int>(length) - 1;
    std::vector<double> g = ising_g_coefficients(a, max_l, quad_points);
    auto coeff = [&](int l) { return g[static_cast<std::size_t>(l + max_l)]; };
    auto n = static_cast<Eigen::Index>(2 * length);
    RealMatrix gamma = RealMatrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n / 2; ++i) {
        for (Eigen::Index j = 0; j < n / 2; ++j) {
            int l = static_cast<int>(j - i);
            gamma(2 * i, 2 * j + 1) = coeff(l);
            gamma(2 * i + 1, 2 * j) = -coeff(-l);
        }
    }
    double asym = (gamma + gamma.transpose()).cwiseAbs().maxCoeff();
    if (asym > 1e-10) {
        throw std::runtime_error("correlation matrix antisymmetry residual " + std::to_string(asym));
    }
    return CorrelationMatrix{std::move(gamma)};
}

ModeSpectrum mode_spectrum(const CorrelationMatrix &gamma) {
    const RealMatrix &m = gamma.gamma;
    if (m.rows() != m.cols() || m.rows() % 2 != 0 || m.rows() == 0) {
        throw ValidationError("correlation matrix must be square with even dimension");
    }
    if ((m + m.transpose()).cwiseAbs().maxCoeff() > 1e-10) {
        throw ValidationError("correlation matrix is not antisymmetric");
    }
    RealVector sv = Eigen::JacobiSVD<RealMatrix>(m).singularValues();
    ModeSpectrum out;
    for (Eigen::Index k = 0; k < sv.size(); k += 2) {
        if (std::abs(sv(k) - sv(k + 1)) > 1e-8) {
            throw ValidationError("singular values of the correlation matrix are not paired");
        }
        double nu = 0.5 * (sv(k) + sv(k + 1));
        if (nu > 1.0 + 1e-9) {
            throw ValidationError("mode coefficient " + std::to_string(nu) + " exceeds 1");
        }
        out.nus.push_back(std::min(nu, 1.0));
    }
    return out;
}

double thermo_ree(const ModeSpectrum &modes, RenyiOrder order) {
    double total = 0;
    for (auto it = modes.nus.rbegin(); it != modes.nus.rend(); ++it) {
        total += mode_renyi(*it, order);
    }
    return total;
}

ModeSpectrum retain_mixed_modes(const ModeSpectrum &modes, double purity_filter) {
    ModeSpectrum out;
    out.filtered_count = modes.filtered_count;
    for (double nu : modes.nus) {
        if (nu <= purity_filter) {
            out.nus.push_back(nu);
        } else {
            ++out.filtered_count;
        }
    }
    return out;
}

ComplexMatrix rho_L_matrix(const ModeSpectrum &modes, double purity_filter) {
    ModeSpectrum kept = retain_mixed_modes(modes, purity_filter);
    if (kept.nus.size() > kMaxRetainedModes) {
        throw ValidationError(std::to_string(kept.nus.size()) + " modes survive the purity filter; at most " +
                              std::to_string(kMaxRetainedModes) + " fit, use a stronger filter");
    }
    ComplexMatrix rho = ComplexMatrix::Identity(1, 1);
    for (double nu : kept.nus) {
        ComplexMatrix mode = ComplexMatrix::Zero(2, 2);
        mode(0, 0) = (1 + nu) / 2;
        mode(1, 1) = (1 - nu) / 2;
        rho = kron(rho, mode);
    }
    return rho;
}

ThermoEstimate thermo_estimate(const ModeSpectrum &modes, RenyiOrder alpha, std::size_t measured_modes,
                               const OptimizeOptions &options, double purity_filter) {
    ModeSpectrum kept = retain_mixed_modes(modes, purity_filter);
    std::size_t measured = std::min(measured_modes, kept.nus.size());
    ModeSpectrum subset;
    subset.nus.assign(kept.nus.end() - static_cast<std::ptrdiff_t>(measured), kept.nus.end());

    double e2 = thermo_ree(modes, 2.0);
    double e2_subset = thermo_ree(subset, 2.0);
    double rest = e2 - e2_subset;
    double estimate = e2;
    if (measured > 0) {
        estimate = rest + optimize_estimate(rho_L_matrix(subset, 1.0), alpha, options).estimate;
    }
    return ThermoEstimate{
        .estimate = estimate,
        .e_alpha = thermo_ree(modes, alpha),
        .e2 = e2,
        .measured_modes = measured,
        .retained_modes = kept.nus.size(),
    };
}

}  // namespace renyi
