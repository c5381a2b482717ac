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

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "gaussmem/analysis.hpp"

namespace gaussmem::cli {

enum class VerifySuite { Core, Criteria, Appendix, Heuristics, All };

std::optional<VerifySuite> parse_suite(std::string_view name);

struct PropertyResult {
    std::string suite;
    std::string name;
    bool passed = false;
    bool informational = false;  ///< reported, never fails the run
    std::string detail;
    std::vector<std::string> counterexamples;  ///< at most a handful, for the dump
};

std::vector<PropertyResult> run_verify(VerifySuite suite, std::uint64_t seed);

/// One line per property, counterexamples indented below. Returns 0 iff every
/// non-informational property passed.
int cmd_verify(VerifySuite suite, std::uint64_t seed, std::ostream &out);

std::string describe(const Sample &sample);

}  // namespace gaussmem::cli
