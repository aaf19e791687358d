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


#include "renyi/direct_search.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "renyi/errors.hpp"

namespace renyi {

namespace {

using Point = std::vector<double>;

Point affine(const Point &base, const Point &toward, double t) {
    Point out(base.size());
    for (std::size_t i = 0; i < base.size(); ++i) {
        out[i] = base[i] + t * (toward[i] - base[i]);
    }
    return out;
}

}  // namespace

NelderMeadResult nelder_mead(const Objective &f, std::vector<double> x0, const NelderMeadOptions &options) {
    const std::size_t n = x0.size();
    if (n == 0) {
        throw ValidationError("Nelder-Mead needs at least one coordinate");
    }
    const double dim = static_cast<double>(n);
    const double rho = 1.0;
    const double chi = options.adaptive ? 1.0 + 2.0 / dim : 2.0;
    const double psi = options.adaptive ? 0.75 - 1.0 / (2.0 * dim) : 0.5;
    const double sigma = options.adaptive ? 1.0 - 1.0 / dim : 0.5;

    std::size_t evaluations = 0;
    auto eval = [&](const Point &x) {
        ++evaluations;
        double v = f(x);
        return std::isnan(v) ? HUGE_VAL : v;
    };

    std::vector<Point> simplex(n + 1, x0);
    std::vector<double> values(n + 1);
    for (std::size_t k = 0; k < n; ++k) {
        double &c = simplex[k + 1][k];
        c = c != 0 ? 1.05 * c : 0.00025;
    }
    for (std::size_t k = 0; k <= n; ++k) {
        values[k] = eval(simplex[k]);
    }

    std::vector<std::size_t> order(n + 1);
    auto sort_simplex = [&] {
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
        std::vector<Point> s2(n + 1);
        std::vector<double> v2(n + 1);
        for (std::size_t i = 0; i <= n; ++i) {
            s2[i] = std::move(simplex[order[i]]);
            v2[i] = values[order[i]];
        }
        simplex = std::move(s2);
        values = std::move(v2);
    };
    sort_simplex();

    bool converged = false;
    while (evaluations < options.max_evaluations) {
        double x_spread = 0;
        double f_spread = 0;
        for (std::size_t k = 1; k <= n; ++k) {
            f_spread = std::max(f_spread, std::abs(values[k] - values[0]));
            for (std::size_t i = 0; i < n; ++i) {
                x_spread = std::max(x_spread, std::abs(simplex[k][i] - simplex[0][i]));
            }
        }
        if (x_spread <= options.x_tolerance && f_spread <= options.f_tolerance) {
            converged = true;
            break;
        }

        Point centroid(n, 0.0);
        for (std::size_t k = 0; k < n; ++k) {
            for (std::size_t i = 0; i < n; ++i) {
                centroid[i] += simplex[k][i];
            }
        }
        for (double &c : centroid) {
            c /= dim;
        }
        const Point &worst = simplex[n];

        Point xr = affine(centroid, worst, -rho);
        double fr = eval(xr);
        bool shrink = false;
        if (fr < values[0]) {
            Point xe = affine(centroid, worst, -rho * chi);
            double fe = evaluations < options.max_evaluations ? eval(xe) : HUGE_VAL;
            if (fe < fr) {
                simplex[n] = std::move(xe);
                values[n] = fe;
            } else {
                simplex[n] = std::move(xr);
                values[n] = fr;
            }
        } else if (fr < values[n - 1]) {
            simplex[n] = std::move(xr);
            values[n] = fr;
        } else if (fr < values[n]) {
            Point xc = affine(centroid, worst, -psi * rho);
            double fc = evaluations < options.max_evaluations ? eval(xc) : HUGE_VAL;
            if (fc <= fr) {
                simplex[n] = std::move(xc);
                values[n] = fc;
            } else {
                shrink = true;
            }
        } else {
            Point xcc = affine(centroid, worst, psi);
            double fcc = evaluations < options.max_evaluations ? eval(xcc) : HUGE_VAL;
            if (fcc < values[n]) {
                simplex[n] = std::move(xcc);
                values[n] = fcc;
            } else {
                shrink = true;
            }
        }
        if (shrink) {
            for (std::size_t k = 1; k <= n && evaluations < options.max_evaluations; ++k) {
                simplex[k] = affine(simplex[0], simplex[k], sigma);
                values[k] = eval(simplex[k]);
            }
        }
        sort_simplex();
    }

    return NelderMeadResult{
        .x = simplex[0],
        .value = values[0],
        .evaluations = evaluations,
        .converged = converged,
    };
}

}  // namespace renyi
