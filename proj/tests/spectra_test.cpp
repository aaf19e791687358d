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


#include "renyi/spectra.hpp"

#include <cmath>
#include <numeric>

#include "gtest/gtest.h"
#include "oracles.hpp"
#include "renyi/errors.hpp"
#include "renyi/random.hpp"

using namespace renyi;

namespace {

BipartitePureState bell() {
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    m(0, 0) = m(1, 1) = M_SQRT1_2;
    return BipartitePureState(m);
}

SchmidtVector two(double lambda) {
    return SchmidtVector({lambda, 1 - lambda});
}

}  // namespace

TEST(SchmidtVector, canonicalizes) {
    SchmidtVector p({0.2, 0.5, 0.3});
    EXPECT_EQ(p.values(), (std::vector<double>{0.5, 0.3, 0.2}));
    SchmidtVector trimmed({0.6, 0.4, 1e-14});
    EXPECT_EQ(trimmed.rank(), 2u);
    EXPECT_NEAR(trimmed[0] + trimmed[1], 1.0, 1e-15);
    EXPECT_THROW(SchmidtVector({0.6, 0.6}), ValidationError);
    EXPECT_THROW(SchmidtVector({1.2, -0.2}), ValidationError);
    EXPECT_THROW(SchmidtVector({0.0}), ValidationError);
}

TEST(SchmidtVector, geometric_keeps_full_rank) {
    SchmidtVector chi = SchmidtVector::geometric(0.86, 500);
    EXPECT_EQ(chi.rank(), 500u);
    double ratio = chi[1] / chi[0];
    EXPECT_NEAR(ratio, 0.86, 1e-14);
}

TEST(BipartitePureState, norm_checked) {
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    m(0, 0) = 1.1;
    EXPECT_THROW(BipartitePureState{m}, ValidationError);
    m(0, 0) = 1 + 1e-9;
    EXPECT_NEAR(BipartitePureState(m).amplitudes().norm(), 1.0, 1e-15);
}

TEST(BipartitePureState, vector_round_trip) {
    Rng rng(3);
    BipartitePureState s = random_pure_state(3, 4, rng);
    BipartitePureState back = BipartitePureState::from_vector(s.as_vector(), 3, 4);
    EXPECT_LT((back.amplitudes() - s.amplitudes()).norm(), 1e-15);
}

TEST(RenyiOrder, branches) {
    EXPECT_EQ(RenyiOrder(0.0).kind(), RenyiOrder::Kind::kZero);
    EXPECT_EQ(RenyiOrder(1 + 5e-7).kind(), RenyiOrder::Kind::kOne);
    EXPECT_EQ(RenyiOrder(1 - 5e-7).kind(), RenyiOrder::Kind::kOne);
    EXPECT_EQ(RenyiOrder(1 + 2e-6).kind(), RenyiOrder::Kind::kGeneric);
    EXPECT_THROW(RenyiOrder(-0.1), DomainError);
    EXPECT_THROW(RenyiOrder(std::nan("")), DomainError);
}

TEST(GeeParams, omega_membership) {
    EXPECT_TRUE(GeeParams(0.5, 2.0).in_omega());
    EXPECT_FALSE(GeeParams(0.5, 2.1).in_omega());
    EXPECT_TRUE(GeeParams(0.5, -3.0).in_omega());
    EXPECT_TRUE(GeeParams(2.0, 0.5).in_omega());
    EXPECT_FALSE(GeeParams(2.0, 0.4).in_omega());
    EXPECT_THROW(GeeParams(1.0, 1.0), DomainError);
    EXPECT_THROW(GeeParams(0.5, 0.0), DomainError);
}

TEST(schmidt_decompose, bell_and_product) {
    SchmidtVector p = schmidt_decompose(bell());
    ASSERT_EQ(p.rank(), 2u);
    EXPECT_NEAR(p[0], 0.5, 1e-15);
    EXPECT_NEAR(p[1], 0.5, 1e-15);
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    m(0, 0) = 1;
    EXPECT_EQ(schmidt_decompose(BipartitePureState(m)).values(), std::vector<double>{1.0});
}

TEST(schmidt_decompose, matches_eigen_oracle) {
    Rng rng(11);
    for (int t = 0; t < 20; ++t) {
        BipartitePureState s = random_pure_state(3, 4, rng);
        std::vector<double> want = oracle::schmidt_by_eigen(s.amplitudes());
        SchmidtVector got = s.schmidt();
        ASSERT_EQ(got.rank(), 3u);
        for (std::size_t i = 0; i < 3; ++i) {
            EXPECT_NEAR(got[i], want[i], 1e-10);
        }
    }
}

TEST(renyi_entropy, examples) {
    std::vector<double> flat(8, 0.125);
    for (double a : {0.0, 0.3, 1.0, 2.0, 7.5}) {
        EXPECT_NEAR(renyi_entropy(flat, a), std::log(8.0), 1e-14);
    }
    EXPECT_NEAR(renyi_entropy(two(0.75), 2.0), -std::log(0.625), 1e-14);
    double shannon = oracle::renyi({0.75, 0.25}, 1.0);
    EXPECT_NEAR(shannon, 0.56233514, 1e-8);
    EXPECT_NEAR(renyi_entropy(two(0.75), 1 + 1e-8), shannon, 1e-6);
    EXPECT_NEAR(renyi_entropy(two(0.75), 1 - 1e-8), shannon, 1e-6);
    EXPECT_EQ(renyi_entropy(SchmidtVector({0.5, 0.3, 0.2}), RenyiOrder::zero()), std::log(3.0));
}

TEST(renyi_entropy, nonincreasing_in_order) {
    Rng rng(5);
    for (int t = 0; t < 50; ++t) {
        SchmidtVector p = random_schmidt_vector(rng.index(2, 20), rng);
        double prev = INFINITY;
        for (double a = 0; a <= 5; a += 0.125) {
            double e = renyi_entropy(p, a);
            EXPECT_LE(e, prev + 1e-12);
            prev = e;
        }
    }
}

TEST(ree, special_states) {
    SchmidtVector phi = SchmidtVector::uniform(5);
    BipartitePureState max = BipartitePureState::from_schmidt(phi);
    ComplexMatrix m = ComplexMatrix::Zero(3, 2);
    m(1, 0) = 1;
    BipartitePureState product(m);
    for (double a : {0.0, 0.5, 1.0, 3.0}) {
        EXPECT_NEAR(ree(max, a), std::log(5.0), 1e-12);
        EXPECT_EQ(ree(product, a), 0.0);
    }
}

TEST(ree, geometric_closed_form) {
    // For lambda_i = r^i (1-r) / (r (1 - r^d)), i = 1..d:
    // S = -log c - log r * sum i lambda_i, with sum i lambda_i from the
    // finite geometric series.
    double r = 0.86;
    int d = 500;
    double rd = std::pow(r, d);
    double c = (1 - r) / (r * (1 - rd));
    double mean_i = 1 / (1 - r) - d * rd / (1 - rd);
    double want = -std::log(c) - std::log(r) * mean_i;
    EXPECT_NEAR(renyi_entropy(SchmidtVector::geometric(r, d), 1.0), want, 1e-12);
    EXPECT_NEAR(want, 2.89259632189, 1e-10);
}

TEST(gee, negativity_connection) {
    Rng rng(2);
    for (double lambda : {0.5, 0.7, 0.9, 0.99}) {
        SchmidtVector p = two(lambda);
        double value = gee(p, GeeParams(0.5, 2.0));
        EXPECT_NEAR(value, 2 * std::sqrt(lambda * (1 - lambda)), 1e-14);
        BipartitePureState s = BipartitePureState::from_schmidt(p);
        EXPECT_NEAR(value, oracle::negativity_trace(s.amplitudes()), 1e-12);
    }
    EXPECT_NEAR(gee(two(0.5), GeeParams(0.5, 2.0)), 1.0, 1e-14);
    // Same identity for a generic local basis.
    BipartitePureState s = random_pure_state(3, 3, rng);
    EXPECT_NEAR(gee(s.schmidt(), GeeParams(0.5, 2.0)), oracle::negativity_trace(s.amplitudes()), 1e-12);
}

TEST(gee, limits_and_tsallis) {
    Rng rng(8);
    for (int t = 0; t < 20; ++t) {
        SchmidtVector p = random_schmidt_vector(rng.index(2, 10), rng);
        double alpha = rng.uniform(0.05, 3.0);
        if (std::abs(alpha - 1) < 1e-3) {
            continue;
        }
        EXPECT_NEAR(gee(p, GeeParams(alpha, 1e-8)), renyi_entropy(p, alpha), 1e-6);
        double power_sum = 0;
        for (double v : p.values()) {
            power_sum += std::pow(v, alpha);
        }
        EXPECT_NEAR(gee(p, GeeParams(alpha, 1.0)), (power_sum - 1) / (1 - alpha), 1e-12);
    }
}

TEST(gee, concave_along_mixtures) {
    // Concavity in the Schmidt vector along a segment, checked on the
    // canonical s = 1/alpha branch for alpha < 1.
    Rng rng(21);
    for (int t = 0; t < 50; ++t) {
        std::size_t d = rng.index(2, 8);
        std::vector<double> a = dirichlet_ones(d, rng);
        std::vector<double> b = dirichlet_ones(d, rng);
        std::sort(a.begin(), a.end(), std::greater<>());
        std::sort(b.begin(), b.end(), std::greater<>());
        double w = rng.uniform();
        std::vector<double> mix(d);
        for (std::size_t i = 0; i < d; ++i) {
            mix[i] = w * a[i] + (1 - w) * b[i];
        }
        GeeParams params = GeeParams::canonical(rng.uniform(0.05, 0.95));
        double lhs = gee(std::span<const double>(mix), params);
        double rhs = w * gee(std::span<const double>(a), params) + (1 - w) * gee(std::span<const double>(b), params);
        EXPECT_GE(lhs, rhs - 1e-12);
    }
}

TEST(gee, local_unitary_invariance) {
    Rng rng(4);
    BipartitePureState s = random_pure_state(3, 4, rng);
    ComplexMatrix rotated = random_unitary(3, rng) * s.amplitudes() * random_unitary(4, rng).transpose();
    BipartitePureState t{rotated};
    for (double a : {0.3, 0.5, 2.0}) {
        EXPECT_NEAR(ree(s, a), ree(t, a), 1e-12);
    }
}

TEST(gee_limit_one, examples) {
    EXPECT_NEAR(gee_limit_one(two(0.5)), std::log(2.0), 1e-15);
    EXPECT_EQ(gee_limit_one(SchmidtVector({1.0})), 0.0);
    SchmidtVector p = two(0.9);
    for (double a : {1 - 1e-4, 1 + 1e-4}) {
        EXPECT_NEAR(gee(p, GeeParams::canonical(a)), gee_limit_one(p), 1e-3);
    }
}
