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


#ifndef RENYI_RANDOM_HPP
#define RENYI_RANDOM_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "renyi/linalg.hpp"
#include "renyi/spectra.hpp"

namespace renyi {

/// SplitMix64 finalizer applied to (base, stream). Used to give every task of
/// a parallel sweep its own stream so results do not depend on scheduling.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream);

class Rng {
   public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {
    }

    double normal() {
        return normal_(engine_);
    }
    double uniform() {
        return uniform_(engine_);
    }
    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform_(engine_);
    }
    /// Uniform integer in [lo, hi].
    std::size_t index(std::size_t lo, std::size_t hi) {
        return std::uniform_int_distribution<std::size_t>(lo, hi)(engine_);
    }
    std::mt19937_64 &engine() {
        return engine_;
    }

   private:
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_{0.0, 1.0};
    std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

/// Matrix with i.i.d. standard complex Gaussian entries.
ComplexMatrix ginibre(Eigen::Index rows, Eigen::Index cols, Rng &rng);

/// Haar-random unitary (QR of a Ginibre matrix with the R-diagonal phases
/// divided out).
ComplexMatrix random_unitary(Eigen::Index d, Rng &rng);

/// Haar-random orthogonal matrix.
RealMatrix random_orthogonal(Eigen::Index d, Rng &rng);

/// Haar-random pure state on C^{dim_a} (x) C^{dim_b}.
BipartitePureState random_pure_state(Eigen::Index dim_a, Eigen::Index dim_b, Rng &rng);

/// Sample from the symmetric Dirichlet(1) distribution on the d-simplex.
std::vector<double> dirichlet_ones(std::size_t d, Rng &rng);

/// Random Schmidt vector drawn from Dirichlet(1), kept at full rank.
SchmidtVector random_schmidt_vector(std::size_t d, Rng &rng);

}  // namespace renyi

#endif
