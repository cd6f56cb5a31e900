// Copyright 2026 The qudepol Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace qudepol {

/// Parameter outside the domain of the quantity being evaluated.
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Ratio Q_nc / Q_coh with zero denominator and positive numerator.
struct DivergentRatio : std::domain_error {
    using std::domain_error::domain_error;
};

/// Ratio Q_nc / Q_coh with both terms zero.
struct Indeterminate : std::domain_error {
    using std::domain_error::domain_error;
};

/// Root bracket without the expected sign change. Indicates a formula bug.
struct BracketFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Dimension beyond what the dense simulator is allowed to allocate.
struct ResourceError : std::length_error {
    using std::length_error::length_error;
};

struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace qudepol
