// Copyright 2026 The gaussmem Authors
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

namespace gaussmem {

/// Argument outside the mathematical domain of an operation (negative noise,
/// non-positive eigenvalue fed to a logarithm, ...).
class DomainError : public std::domain_error {
   public:
    explicit DomainError(const std::string &what) : std::domain_error(what) {}
};

/// Input that cannot be a covariance matrix, detected from its invariants.
class InvariantViolation : public std::runtime_error {
   public:
    explicit InvariantViolation(const std::string &what) : std::runtime_error(what) {}
};

/// Configuration for which an operation is not defined.
class UnsupportedConfiguration : public std::invalid_argument {
   public:
    explicit UnsupportedConfiguration(const std::string &what) : std::invalid_argument(what) {}
};

}  // namespace gaussmem
