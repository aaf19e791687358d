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

#include "renyi/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "renyi/errors.hpp"

namespace renyi {

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

RealVector hermitian_eigenvalues(const ComplexMatrix &m) {
    ComplexMatrix h = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::EigenvaluesOnly);
    return solver.eigenvalues();
}

std::vector<double> density_spectrum(const ComplexMatrix &rho) {
    RealVector ev = hermitian_eigenvalues(rho);
    std::vector<double> out(ev.data(), ev.data() + ev.size());
    double total = 0;
    for (double &v : out) {
        if (v < -kNegativeClip) {
            throw ValidationError("density matrix has eigenvalue " + std::to_string(v) + " below -1e-10");
        }
        v = std::max(v, 0.0);
        total += v;
    }
    if (total <= 0) {
        throw ValidationError("density matrix has zero trace");
    }
    for (double &v : out) {
        v /= total;
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

ComplexMatrix reduced_density_b(const ComplexMatrix &psi) {
    return psi.transpose() * psi.conjugate();
}

ComplexMatrix reduced_density_a(const ComplexMatrix &psi) {
    return psi * psi.adjoint();
}

double trace_norm_hermitian(const ComplexMatrix &m) {
    return hermitian_eigenvalues(m).cwiseAbs().sum();
}

double operator_norm(const ComplexMatrix &m) {
    if (m.size() == 0) {
        return 0;
    }
    Eigen::JacobiSVD<ComplexMatrix> svd(m);
    return svd.singularValues()(0);
}

double hermiticity_residual(const ComplexMatrix &m) {
    if (m.size() == 0) {
        return 0;
    }
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

double normalized_purity(const ComplexMatrix &rho) {
    double tr = rho.trace().real();
    return rho.squaredNorm() / (tr * tr);
}

double renyi2_entropy(const ComplexMatrix &rho) {
    return -std::log(normalized_purity(rho));
}

ComplexMatrix sqrt_psd(const ComplexMatrix &m) {
    ComplexMatrix h = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
    RealVector root = solver.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    return solver.eigenvectors() * root.asDiagonal() * solver.eigenvectors().adjoint();
}

ComplexMatrix exp_i_hermitian(const ComplexMatrix &h) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(0.5 * (h + h.adjoint()));
    const RealVector &w = solver.eigenvalues();
    ComplexVector phases(w.size());
    for (Eigen::Index i = 0; i < w.size(); ++i) {
        phases(i) = std::polar(1.0, w(i));
    }
    return solver.eigenvectors() * phases.asDiagonal() * solver.eigenvectors().adjoint();
}

void validate_density_matrix(const ComplexMatrix &rho, double tol) {
    if (rho.rows() != rho.cols() || rho.rows() == 0) {
        throw ValidationError("density matrix must be square and non-empty");
    }
    if (hermiticity_residual(rho) > tol) {
        throw ValidationError("density matrix is not Hermitian");
    }
    Complex tr = rho.trace();
    if (std::abs(tr - Complex(1, 0)) > tol) {
        throw ValidationError("density matrix trace " + std::to_string(tr.real()) + " differs from 1");
    }
    if (hermitian_eigenvalues(rho)(0) < -tol) {
        throw ValidationError("density matrix is not positive semidefinite");
    }
}

}  // namespace renyi
