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

#include <cmath>
#include <numbers>

#include "gtest/gtest.h"
#include "oracles.hpp"
#include "renyi/random.hpp"

using namespace renyi;

TEST(HeisenbergQuench, neel_at_time_zero) {
    BipartitePureState s = heisenberg_state(8, 6, 0.0);
    for (double a : {0.0, 0.5, 1.0, 2.0}) {
        EXPECT_LT(ree(s, a), 1e-12);
    }
    ComplexVector v = HeisenbergQuench(8).evolve(0.0);
    EXPECT_NEAR(std::abs(v(neel_index(8))), 1.0, 1e-12);
    // |down up down up>: site 1 is the most significant bit, down = 1.
    EXPECT_EQ(neel_index(4), 0b1010u);
}

TEST(HeisenbergQuench, validation) {
    EXPECT_THROW(HeisenbergQuench(7), ValidationError);
    EXPECT_THROW(HeisenbergQuench(16), ValidationError);
    EXPECT_THROW(heisenberg_state(8, 8, 1.0), ValidationError);
}

TEST(HeisenbergQuench, unitary_and_exact_eigenpairs) {
    HeisenbergQuench q(8);
    EXPECT_LT(q.eigen_residual(), 1e-9);
    for (double t = 0; t <= 10; t += 0.5) {
        EXPECT_NEAR(q.evolve(t).norm(), 1.0, 1e-10);
    }
}

TEST(HeisenbergQuench, matches_dense_pauli_evolution) {
    // Full 2^N space, Hamiltonian assembled from Pauli tensors.
    for (std::size_t n : {4u, 6u, 8u}) {
        HeisenbergQuench q(n);
        for (double t : {0.3, 1.7, 4.1}) {
            oracle::CVector want = oracle::heisenberg_evolved(n, t);
            ComplexVector got = q.evolve(t);
            EXPECT_LT((want - got).norm(), 1e-9) << "N=" << n << " t=" << t;
        }
    }
}

TEST(HeisenbergQuench, renyi_curve_golden) {
    // Entropies from the dense oracle via its own Schmidt spectrum.
    for (double t : {0.5, 2.0, 4.1, 7.3}) {
        oracle::CMatrix psi = oracle::reshape(oracle::heisenberg_evolved(8, t), 64, 4);
        std::vector<double> p = oracle::schmidt_by_eigen(psi);
        BipartitePureState s = heisenberg_state(8, 6, t);
        for (double a : {0.5, 1.0, 2.0}) {
            EXPECT_NEAR(ree(s, a), oracle::renyi(p, a), 1e-9);
        }
    }
}

TEST(ising_ground, product_at_zero_coupling) {
    IsingGroundState g = ising_ground(6, 3, 0.0);
    EXPECT_LT(ree(g.state, 1.0), 1e-12);
    EXPECT_NEAR(g.energy, -6.0, 1e-12);
    EXPECT_NEAR(std::abs(g.state.as_vector()(0)), 1.0, 1e-12);
}

TEST(ising_ground, matches_dense_hamiltonian) {
    for (double j : {0.3, 1.0, 2.5}) {
        std::size_t n = 8;
        IsingGroundState g = ising_ground(n, 4, j);
        oracle::CMatrix h = oracle::ising_dense(n, j);
        Eigen::SelfAdjointEigenSolver<oracle::CMatrix> es(h);
        EXPECT_NEAR(g.energy, es.eigenvalues()(0), 1e-9);
        ComplexVector v = g.state.as_vector();
        EXPECT_NEAR((v.adjoint() * h * v)(0).real(), es.eigenvalues()(0), 1e-9);
        std::vector<double> p =
            oracle::trimmed(oracle::schmidt_by_eigen(oracle::reshape(es.eigenvectors().col(0), 16, 16)));
        for (double a : {0.5, 2.0}) {
            EXPECT_NEAR(ree(g.state, a), oracle::renyi(p, a), 1e-8);
        }
    }
}

TEST(ising_ground, ordered_phase_saturates) {
    BipartitePureState s = ising_ground_state(8, 4, 50.0);
    for (double a : {0.5, 1.0, 2.0}) {
        EXPECT_NEAR(ree(s, a), std::log(2.0), 0.05);
    }
}

TEST(ising_gl, trivial_and_asymptotic) {
    EXPECT_NEAR(ising_gl(0.0, 0), -1.0, 1e-14);
    for (int l : {-3, -1, 1, 2}) {
        EXPECT_NEAR(ising_gl(0.0, l), 0.0, 1e-14);
    }
    EXPECT_NEAR(ising_gl(1e6, -1), 1.0, 1e-5);
    for (int l : {-2, 0, 1, 3}) {
        EXPECT_NEAR(ising_gl(1e6, l), 0.0, 1e-5);
    }
}

TEST(ising_gl, critical_point_closed_form) {
    for (int l = -6; l <= 6; ++l) {
        double want = -2.0 / (std::numbers::pi * (2 * l + 1));
        EXPECT_NEAR(ising_gl(1.0, l), want, 1e-10) << "l=" << l;
    }
    EXPECT_NEAR(ising_gl(1.0, 0), oracle::ising_gl(1.0, 0), 1e-8);
}

TEST(ising_gl, matches_adaptive_quadrature) {
    for (double a : {0.3, 0.9, 0.99, 1.01, 1.5, 4.0}) {
        std::vector<double> g = ising_g_coefficients(a, 4);
        for (int l = -4; l <= 4; ++l) {
            EXPECT_NEAR(g[static_cast<std::size_t>(l + 4)], oracle::ising_gl(a, l), 1e-8) << "a=" << a << " l=" << l;
        }
    }
}

TEST(build_gamma, small_cases) {
    RealMatrix pi0(2, 2);
    pi0 << 0, -1, 1, 0;
    EXPECT_LT((build_gamma(0.0, 1).gamma - pi0).norm(), 1e-14);
    EXPECT_LT((build_gamma(0.7, 1).gamma(0, 1) - ising_gl(0.7, 0)), 1e-14);
    RealMatrix g = build_gamma(0.0, 4).gamma;
    for (Eigen::Index i = 0; i < 4; ++i) {
        EXPECT_LT((g.block(2 * i, 2 * i, 2, 2) - pi0).norm(), 1e-14);
    }
    EXPECT_NEAR(g.norm(), std::sqrt(8.0), 1e-14);
    RealMatrix c = build_gamma(1.0, 4).gamma;
    EXPECT_LT((c + c.transpose()).cwiseAbs().maxCoeff(), 1e-10);
}

TEST(mode_spectrum, trivial_and_oracle) {
    ModeSpectrum pure = mode_spectrum(build_gamma(0.0, 5));
    for (double nu : pure.nus) {
        EXPECT_NEAR(nu, 1.0, 1e-14);
    }
    EXPECT_NEAR(thermo_ree(pure, 0.5), 0.0, 1e-12);

    for (std::size_t length : {4u, 20u}) {
        CorrelationMatrix gamma = build_gamma(1.0, length);
        std::vector<double> want = oracle::nus_by_i_gamma(gamma.gamma);
        ModeSpectrum got = mode_spectrum(gamma);
        ASSERT_EQ(got.nus.size(), want.size());
        for (std::size_t l = 0; l < want.size(); ++l) {
            EXPECT_NEAR(got.nus[l], want[l], 1e-10);
        }
    }
}

TEST(mode_spectrum, round_trip) {
    Rng rng(3);
    for (int t = 0; t < 30; ++t) {
        std::size_t length = rng.index(1, 10);
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
            EXPECT_NEAR(got.nus[l], nus[l], 1e-10);
        }
    }
}

TEST(mode_spectrum, rejects_bad_input) {
    RealMatrix sym = RealMatrix::Identity(2, 2);
    EXPECT_THROW(mode_spectrum(CorrelationMatrix{sym}), ValidationError);
    RealMatrix odd = RealMatrix::Zero(3, 3);
    EXPECT_THROW(mode_spectrum(CorrelationMatrix{odd}), ValidationError);
}

TEST(thermo_ree, examples) {
    EXPECT_NEAR(thermo_ree(ModeSpectrum{{0.0}, 0}, 0.7), std::log(2.0), 1e-15);
    EXPECT_EQ(thermo_ree(ModeSpectrum{{1.0, 1.0}, 0}, 2.0), 0.0);
    EXPECT_NEAR(thermo_ree(ModeSpectrum{{0.6}, 0}, 2.0), -std::log(0.64 + 0.04), 1e-15);
}

TEST(thermo_ree, grows_with_length_at_criticality) {
    ModeSpectrum small = mode_spectrum(build_gamma(1.0, 16));
    ModeSpectrum large = mode_spectrum(build_gamma(1.0, 32));
    double low_gain = thermo_ree(large, 0.2) - thermo_ree(small, 0.2);
    double high_gain = thermo_ree(large, 2.0) - thermo_ree(small, 2.0);
    EXPECT_GT(high_gain, 0);
    EXPECT_GT(low_gain, high_gain);
}

TEST(thermo_ree, limits_of_coupling) {
    EXPECT_EQ(thermo_ree(mode_spectrum(build_gamma(0.0, 32)), 0.5), 0.0);
    ModeSpectrum ordered = mode_spectrum(build_gamma(50.0, 32));
    for (double a : {0.2, 0.5, 1.0, 2.0}) {
        EXPECT_NEAR(thermo_ree(ordered, a), std::log(2.0), 0.05);
    }
}

TEST(rho_L_matrix, examples) {
    ComplexMatrix none = rho_L_matrix(ModeSpectrum{{1.0, 1.0}, 0});
    ASSERT_EQ(none.rows(), 1);
    EXPECT_EQ(none(0, 0), Complex(1.0));
    ComplexMatrix one = rho_L_matrix(ModeSpectrum{{0.6}, 0});
    EXPECT_NEAR(one(0, 0).real(), 0.8, 1e-15);
    EXPECT_NEAR(one(1, 1).real(), 0.2, 1e-15);
    EXPECT_THROW(rho_L_matrix(ModeSpectrum{std::vector<double>(11, 0.5), 0}), ValidationError);
}

TEST(rho_L_matrix, entropy_consistency) {
    ModeSpectrum modes = mode_spectrum(build_gamma(1.0, 12));
    ModeSpectrum kept = retain_mixed_modes(modes);
    ASSERT_LE(kept.nus.size(), kMaxRetainedModes);
    ComplexMatrix rho = rho_L_matrix(modes);
    EXPECT_NEAR(rho.trace().real(), 1.0, 1e-12);
    for (double a : {0.5, 1.0, 2.0}) {
        EXPECT_NEAR(oracle::renyi(density_spectrum(rho), a), thermo_ree(kept, a), 1e-10);
    }
}
