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

#ifndef RENYI_LINALG_HPP
#define RENYI_LINALG_HPP

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace renyi {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

/// Eigenvalues below -kNegativeClip are treated as a broken density matrix.
inline constexpr double kNegativeClip = 1e-10;

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);

/// Ascending eigenvalues of the Hermitian part of `m`.
RealVector hermitian_eigenvalues(const ComplexMatrix &m);

/// Sorted-descending spectrum of a density matrix. Eigenvalues in
/// [-kNegativeClip, 0) are clipped to zero and the rest renormalized;
/// anything more negative throws ValidationError.
std::vector<double> density_spectrum(const ComplexMatrix &rho);

/// Reduced state of subsystem B for amplitudes psi(a, b): (psi^T psi^*).
ComplexMatrix reduced_density_b(const ComplexMatrix &psi);
/// Reduced state of subsystem A: psi psi^dagger.
ComplexMatrix reduced_density_a(const ComplexMatrix &psi);

/// Sum of |eigenvalues| of a Hermitian matrix.
double trace_norm_hermitian(const ComplexMatrix &m);

/// Largest singular value.
double operator_norm(const ComplexMatrix &m);

/// max |m - m^dagger| entrywise.
double hermiticity_residual(const ComplexMatrix &m);

/// Tr(rho^2)/Tr(rho)^2 for a Hermitian, positive-trace matrix.
double normalized_purity(const ComplexMatrix &rho);

/// Renyi-2 entropy of rho/Tr(rho), computed from the purity.
double renyi2_entropy(const ComplexMatrix &rho);

/// Principal square root of a PSD Hermitian matrix (negative noise clipped).
ComplexMatrix sqrt_psd(const ComplexMatrix &m);

/// exp(i h) for Hermitian h.
ComplexMatrix exp_i_hermitian(const ComplexMatrix &h);

/// Throws ValidationError unless rho is Hermitian, unit-trace and PSD to tol.
void validate_density_matrix(const ComplexMatrix &rho, double tol = 1e-10);

}  // namespace renyi

#endif
