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


#include "renyi/random.hpp"

#include <cmath>

namespace renyi {

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
    std::uint64_t z = base + 0x9E3779B97F4A7C15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

ComplexMatrix ginibre(Eigen::Index rows, Eigen::Index cols, Rng &rng) {
    ComplexMatrix m(rows, cols);
    for (Eigen::Index j = 0; j < cols; ++j) {
        for (Eigen::Index i = 0; i < rows; ++i) {
            double re = rng.normal();
            double im = rng.normal();
            m(i, j) = Complex(re, im) * M_SQRT1_2;
        }
    }
    return m;
}

ComplexMatrix random_unitary(Eigen::Index d, Rng &rng) {
    ComplexMatrix z = ginibre(d, d, rng);
    Eigen::HouseholderQR<ComplexMatrix> qr(z);
    ComplexMatrix q = qr.householderQ();
    ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index i = 0; i < d; ++i) {
        Complex diag = r(i, i);
        double mag = std::abs(diag);
        q.col(i) *= mag > 0 ? diag / mag : Complex(1, 0);
    }
    return q;
}

RealMatrix random_orthogonal(Eigen::Index d, Rng &rng) {
    RealMatrix z(d, d);
    for (Eigen::Index j = 0; j < d; ++j) {
        for (Eigen::Index i = 0; i < d; ++i) {
            z(i, j) = rng.normal();
        }
    }
    Eigen::HouseholderQR<RealMatrix> qr(z);
    RealMatrix q = qr.householderQ();
    for (Eigen::Index i = 0; i < d; ++i) {
        if (qr.matrixQR()(i, i) < 0) {
            q.col(i) = -q.col(i);
        }
    }
    return q;
}

BipartitePureState random_pure_state(Eigen::Index dim_a, Eigen::Index dim_b, Rng &rng) {
    ComplexMatrix m = ginibre(dim_a, dim_b, rng);
    m /= m.norm();
    return BipartitePureState(std::move(m));
}

std::vector<double> dirichlet_ones(std::size_t d, Rng &rng) {
    std::vector<double> w(d);
    double total = 0;
    for (double &x : w) {
        x = -std::log1p(-rng.uniform());
        total += x;
    }
    for (double &x : w) {
        x /= total;
    }
    return w;
}

SchmidtVector random_schmidt_vector(std::size_t d, Rng &rng) {
    return SchmidtVector::from_weights(dirichlet_ones(d, rng), 0.0);
}

}  // namespace renyi
