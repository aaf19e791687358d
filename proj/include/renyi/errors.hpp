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

#ifndef RENYI_ERRORS_HPP
#define RENYI_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace renyi {

/// Input violates a structural invariant (normalization, shape, completeness).
class ValidationError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// A parameter lies outside the domain where the quantity is defined.
class DomainError : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

/// An outcome ensemble is not reachable from the initial state by SLOCC.
class InfeasibleError : public std::runtime_error {
   public:
    InfeasibleError(const std::string &what, std::size_t violated_index)
        : std::runtime_error(what), violated_index_(violated_index) {
    }

    /// 1-based tail index l at which the majorization inequality fails.
    std::size_t violated_index() const {
        return violated_index_;
    }

   private:
    std::size_t violated_index_;
};

}  // namespace renyi

#endif
