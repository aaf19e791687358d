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


#include "renyi/measure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "renyi/bounds.hpp"
#include "renyi/direct_search.hpp"
#include "renyi/errors.hpp"
#include "renyi/parallel.hpp"

namespace renyi {

namespace {

constexpr double kIdentityRaw = 40.0;

double logistic(double x) {
    return 1.0 / (1.0 + std::exp(-x));
}

ComplexMatrix hermitian_generator(const DichotomicPovmParams &params) {
    Eigen::Index d = params.dim();
    ComplexMatrix h(d, d);
    auto raw = [&](Eigen::Index i, Eigen::Index j) { return params.rotation_raw[static_cast<std::size_t>(i * d + j)]; };
    for (Eigen::Index i = 0; i < d; ++i) {
        h(i, i) = raw(i, i);
        for (Eigen::Index j = i + 1; j < d; ++j) {
            h(i, j) = Complex(raw(i, j), raw(j, i));
            h(j, i) = std::conj(h(i, j));
        }
    }
    return h;
}

ComplexMatrix conjugate_diagonal(const ComplexMatrix &v, const RealVector &diag) {
    return v * diag.asDiagonal() * v.adjoint();
}

void check_estimate_order(RenyiOrder alpha) {
    if (alpha.alpha() > 2.0) {
        throw DomainError("estimation from E_2 outcomes needs alpha <= 2");
    }
}

}  // namespace

KrausSet::KrausSet(std::vector<ComplexMatrix> operators, std::string label, double tolerance)
    : operators_(std::move(operators)), label_(std::move(label)) {
    if (operators_.empty()) {
        throw ValidationError("Kraus set is empty");
    }
    Eigen::Index d = operators_.front().rows();
    for (const auto &k : operators_) {
        if (k.rows() != d || k.cols() != d || d == 0) {
            throw ValidationError("Kraus operators must share one square shape");
        }
    }
    double residual = completeness_residual();
    if (residual > tolerance) {
        throw ValidationError("Kraus completeness residual " + std::to_string(residual) + " exceeds tolerance");
    }
}

KrausSet KrausSet::identity(Eigen::Index d) {
    return KrausSet({ComplexMatrix::Identity(d, d)}, "identity");
}

double KrausSet::completeness_residual() const {
    Eigen::Index d = dim();
    ComplexMatrix total = -ComplexMatrix::Identity(d, d);
    for (const auto &k : operators_) {
        total.noalias() += k.adjoint() * k;
    }
    return operator_norm(total);
}

KrausSet random_instrument(Eigen::Index d, std::size_t outcomes, Rng &rng) {
    if (outcomes == 0) {
        throw ValidationError("instrument needs at least one outcome");
    }
    std::vector<ComplexMatrix> g;
    g.reserve(outcomes);
    ComplexMatrix s = ComplexMatrix::Zero(d, d);
    for (std::size_t m = 0; m < outcomes; ++m) {
        g.push_back(ginibre(d, d, rng));
        s.noalias() += g.back().adjoint() * g.back();
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(s);
    RealVector inv_root = solver.eigenvalues().cwiseSqrt().cwiseInverse();
    ComplexMatrix s_inv_root = conjugate_diagonal(solver.eigenvectors(), inv_root);
    for (auto &k : g) {
        k = k * s_inv_root;
    }
    return KrausSet(std::move(g), "random");
}

OutcomeEnsemble<BipartitePureState> apply_instrument_pure(const BipartitePureState &state, const KrausSet &kraus,
                                                          Side side) {
    Eigen::Index d = side == Side::kB ? state.dim_b() : state.dim_a();
    if (kraus.dim() != d) {
        throw ValidationError("instrument dimension " + std::to_string(kraus.dim()) + " does not match party dimension " +
                              std::to_string(d));
    }
    std::vector<ComplexMatrix> branches;
    std::vector<double> probabilities;
    double kept = 0;
    bool dropped = false;
    for (const auto &k : kraus.operators()) {
        ComplexMatrix out = side == Side::kB ? ComplexMatrix(state.amplitudes() * k.transpose())
                                             : ComplexMatrix(k * state.amplitudes());
        double p = out.squaredNorm();
        if (p < kDropProbability) {
            dropped = dropped || p > 0;
            continue;
        }
        out /= std::sqrt(p);
        branches.push_back(std::move(out));
        probabilities.push_back(p);
        kept += p;
    }
    std::vector<Outcome<BipartitePureState>> items;
    items.reserve(branches.size());
    for (std::size_t m = 0; m < branches.size(); ++m) {
        items.push_back({probabilities[m] / kept, BipartitePureState(std::move(branches[m]))});
    }
    return OutcomeEnsemble<BipartitePureState>(std::move(items), EnsembleMode::kComplete, dropped);
}

OutcomeEnsemble<ComplexMatrix> apply_instrument_local(const ComplexMatrix &rho, const KrausSet &kraus) {
    validate_density_matrix(rho, 1e-9);
    if (kraus.dim() != rho.rows()) {
        throw ValidationError("instrument dimension does not match the local state");
    }
    std::vector<Outcome<ComplexMatrix>> items;
    double kept = 0;
    bool dropped = false;
    for (const auto &k : kraus.operators()) {
        ComplexMatrix out = k * rho * k.adjoint();
        double p = out.trace().real();
        if (p < kDropProbability) {
            dropped = dropped || p > 0;
            continue;
        }
        items.push_back({p, out / p});
        kept += p;
    }
    for (auto &item : items) {
        item.probability /= kept;
    }
    return OutcomeEnsemble<ComplexMatrix>(std::move(items), EnsembleMode::kComplete, dropped);
}

OutcomeEnsemble<double> outcome_renyi2(const OutcomeEnsemble<BipartitePureState> &outcomes) {
    return outcomes.map([](const BipartitePureState &s) { return renyi_entropy(s.schmidt(), 2.0); });
}

double estimate_pure(const BipartitePureState &state, const KrausSet &kraus, Side side, RenyiOrder alpha) {
    check_estimate_order(alpha);
    return estimate_e_alpha(outcome_renyi2(apply_instrument_pure(state, kraus, side)), alpha);
}

double estimate_local(const ComplexMatrix &rho, const KrausSet &kraus, RenyiOrder alpha) {
    check_estimate_order(alpha);
    std::vector<Outcome<double>> items;
    double kept = 0;
    for (const auto &k : kraus.operators()) {
        ComplexMatrix out = k * rho * k.adjoint();
        double p = out.trace().real();
        if (p < kDropProbability) {
            continue;
        }
        items.push_back({p, renyi2_entropy(out)});
        kept += p;
    }
    for (auto &item : items) {
        item.probability /= kept;
    }
    return estimate_e_alpha(OutcomeEnsemble<double>(std::move(items)), alpha);
}

std::vector<double> DichotomicPovmParams::flatten() const {
    std::vector<double> x = eigen_raw;
    x.insert(x.end(), rotation_raw.begin(), rotation_raw.end());
    return x;
}

DichotomicPovmParams DichotomicPovmParams::from_flat(std::span<const double> x, Eigen::Index d) {
    auto n = static_cast<std::size_t>(d);
    if (x.size() != n + n * n) {
        throw ValidationError("dichotomic POVM needs d + d^2 parameters");
    }
    return DichotomicPovmParams{
        .eigen_raw = std::vector<double>(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(n)),
        .rotation_raw = std::vector<double>(x.begin() + static_cast<std::ptrdiff_t>(n), x.end()),
    };
}

DichotomicPovmParams DichotomicPovmParams::identity(Eigen::Index d) {
    auto n = static_cast<std::size_t>(d);
    return DichotomicPovmParams{
        .eigen_raw = std::vector<double>(n, kIdentityRaw),
        .rotation_raw = std::vector<double>(n * n, 0.0),
    };
}

ComplexMatrix povm_element(const DichotomicPovmParams &params) {
    ComplexMatrix v = exp_i_hermitian(hermitian_generator(params));
    RealVector m(params.dim());
    for (Eigen::Index i = 0; i < m.size(); ++i) {
        m(i) = logistic(params.eigen_raw[static_cast<std::size_t>(i)]);
    }
    return conjugate_diagonal(v, m);
}

KrausSet decode_dichotomic(const DichotomicPovmParams &params) {
    Eigen::Index d = params.dim();
    if (static_cast<Eigen::Index>(params.rotation_raw.size()) != d * d || d == 0) {
        throw ValidationError("dichotomic POVM parameter sizes do not match");
    }
    ComplexMatrix v = exp_i_hermitian(hermitian_generator(params));
    RealVector root_m(d);
    RealVector root_rest(d);
    for (Eigen::Index i = 0; i < d; ++i) {
        double x = params.eigen_raw[static_cast<std::size_t>(i)];
        root_m(i) = std::sqrt(logistic(x));
        root_rest(i) = std::sqrt(logistic(-x));
    }
    return KrausSet({conjugate_diagonal(v, root_m), conjugate_diagonal(v, root_rest)}, "dichotomic");
}

ComplexMatrix site_operator(const ComplexMatrix &op, std::size_t n_sites, std::size_t k) {
    if (k < 1 || k > n_sites) {
        throw ValidationError("site " + std::to_string(k) + " outside 1.." + std::to_string(n_sites));
    }
    auto left = Eigen::Index{1} << (k - 1);
    auto right = Eigen::Index{1} << (n_sites - k);
    return kron(kron(ComplexMatrix::Identity(left, left), op), ComplexMatrix::Identity(right, right));
}

std::vector<SpinScheme> single_spin_schemes(std::size_t n_sites, std::size_t k, std::size_t epsilon_points) {
    const Complex i(0, 1);
    auto projectors = [](const ComplexVector &up) {
        ComplexMatrix p = up * up.adjoint();
        return std::vector<ComplexMatrix>{p, ComplexMatrix::Identity(2, 2) - p};
    };
    auto lift = [&](std::vector<ComplexMatrix> ops) {
        for (auto &op : ops) {
            op = site_operator(op, n_sites, k);
        }
        return ops;
    };

    std::vector<SpinScheme> out;
    ComplexVector x_plus(2), y_plus(2), z_up(2);
    x_plus << M_SQRT1_2, M_SQRT1_2;
    y_plus << M_SQRT1_2, i * M_SQRT1_2;
    z_up << 1, 0;
    out.push_back({"X", std::nullopt, KrausSet(lift(projectors(x_plus)), "X")});
    out.push_back({"Y", std::nullopt, KrausSet(lift(projectors(y_plus)), "Y")});
    out.push_back({"Z", std::nullopt, KrausSet(lift(projectors(z_up)), "Z")});
    for (std::size_t j = 0; j < epsilon_points; ++j) {
        double eps = epsilon_points == 1 ? 0.0 : 0.5 * static_cast<double>(j) / static_cast<double>(epsilon_points - 1);
        ComplexMatrix k_up = ComplexMatrix::Zero(2, 2);
        ComplexMatrix k_down = ComplexMatrix::Zero(2, 2);
        k_up(0, 0) = std::sqrt(1 - eps);
        k_up(1, 1) = std::sqrt(eps);
        k_down(0, 0) = std::sqrt(eps);
        k_down(1, 1) = std::sqrt(1 - eps);
        out.push_back({"biased-z", eps, KrausSet(lift({k_up, k_down}), "biased-z")});
    }
    return out;
}

SiteLocation locate_site(std::size_t n_a, std::size_t n_b, std::size_t k) {
    if (k < 1 || k > n_a + n_b) {
        throw ValidationError("chain site " + std::to_string(k) + " outside 1.." + std::to_string(n_a + n_b));
    }
    if (k <= n_a) {
        return {Side::kA, k};
    }
    return {Side::kB, k - n_a};
}

OptimizedPovm optimize_dichotomic(Eigen::Index d, const EstimateFunction &estimate, const OptimizeOptions &options) {
    struct RestartResult {
        double value = -std::numeric_limits<double>::infinity();
        std::vector<double> x;
        double max_seen = -std::numeric_limits<double>::infinity();
        std::size_t evaluations = 0;
    };
    std::size_t n_params = static_cast<std::size_t>(d + d * d);
    NelderMeadOptions nm;
    nm.max_evaluations = options.budget;

    auto run = [&](std::size_t r) {
        Rng rng(derive_seed(options.seed, r));
        std::vector<double> x0(n_params);
        for (double &x : x0) {
            x = options.start_scale * rng.normal();
        }
        RestartResult result;
        auto objective = [&](const std::vector<double> &x) {
            double e = estimate(decode_dichotomic(DichotomicPovmParams::from_flat(x, d)));
            result.max_seen = std::max(result.max_seen, e);
            return -e;
        };
        NelderMeadResult found = nelder_mead(objective, x0, nm);
        result.value = -found.value;
        result.x = std::move(found.x);
        result.evaluations = found.evaluations;
        return result;
    };
    std::vector<RestartResult> restarts = parallel_map(options.restarts, options.threads, run);

    OptimizedPovm out{
        .estimate = estimate(KrausSet::identity(d)),
        .params = DichotomicPovmParams::identity(d),
        .element = ComplexMatrix::Identity(d, d),
        .seed = options.seed,
        .identity_estimate = 0,
        .identity_won = true,
        .max_iterate = -std::numeric_limits<double>::infinity(),
        .evaluations = 1,
    };
    out.identity_estimate = out.estimate;
    for (const auto &r : restarts) {
        out.evaluations += r.evaluations;
        out.max_iterate = std::max(out.max_iterate, r.max_seen);
        if (r.value > out.estimate) {
            out.estimate = r.value;
            out.params = DichotomicPovmParams::from_flat(r.x, d);
            out.identity_won = false;
        }
    }
    if (!out.identity_won) {
        out.element = povm_element(out.params);
    }
    return out;
}

OptimizedPovm optimize_estimate(const ComplexMatrix &rho, RenyiOrder alpha, const OptimizeOptions &options) {
    check_estimate_order(alpha);
    validate_density_matrix(rho, 1e-9);
    return optimize_dichotomic(
        rho.rows(), [&](const KrausSet &k) { return estimate_local(rho, k, alpha); }, options);
}

OptimizedPovm optimize_estimate(const BipartitePureState &state, RenyiOrder alpha, const OptimizeOptions &options) {
    return optimize_estimate(state.rho_b(), alpha, options);
}

}  // namespace renyi
