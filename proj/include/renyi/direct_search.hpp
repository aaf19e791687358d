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


#ifndef RENYI_DIRECT_SEARCH_HPP
#define RENYI_DIRECT_SEARCH_HPP

#include <cstddef>
#include <functional>
#include <vector>

namespace renyi {

struct NelderMeadOptions {
    /// Objective evaluations, including the initial simplex.
    std::size_t max_evaluations = 2000;
    double x_tolerance = 1e-12;
    double f_tolerance = 1e-14;
    /// Dimension-dependent coefficients (Gao and Han), better for n > 10.
    bool adaptive = true;
};

struct NelderMeadResult {
    std::vector<double> x;
    double value;
    std::size_t evaluations;
    bool converged;
};

using Objective = std::function<double(const std::vector<double> &)>;

/// Derivative-free minimization. The initial simplex perturbs each coordinate
/// of x0 by 5% (0.00025 for zero coordinates).
NelderMeadResult nelder_mead(const Objective &f, std::vector<double> x0, const NelderMeadOptions &options = {});

}  // namespace renyi

#endif
