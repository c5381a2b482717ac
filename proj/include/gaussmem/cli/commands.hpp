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
#include <nlohmann/json.hpp>
#include <ostream>
#include <string>
#include <vector>

#include "gaussmem/analysis.hpp"
#include "gaussmem/cli/config.hpp"
#include "gaussmem/cli/records.hpp"
#include "gaussmem/scenarios.hpp"

namespace gaussmem::cli {

struct CompareReport {
    InputStateParams input;
    MemoryChannel channel;
    bool channel_overridden = false;
    LossNoiseConvention convention = LossNoiseConvention::LiteralFloorZero;
    bool channel_physical = true;
    ScenarioPair pair;
    CriterionVerdict entanglement_criterion;
    CriterionVerdict fidelity_criterion;
};

CompareReport run_compare(const RunConfig &config);
void print_compare(std::ostream &out, const CompareReport &report);
nlohmann::ordered_json compare_json(const CompareReport &report);

struct SweepResult {
    std::vector<std::string> axis_names;
    std::vector<SweepRecord> records;  ///< row-major, first axis outermost
    SweepSummary summary;
    std::uint64_t seed = 0;  ///< from the config; grids are deterministic, the seed is only recorded
};

/// Evaluates every grid point. Throws ConfigError unless there are 1 or 2 axes.
SweepResult run_sweep(const RunConfig &config);
void write_sweep(std::ostream &out, const SweepResult &result, OutputFormat format);

/// Exit codes: 0 on success, 1 on invalid configuration, 2 on I/O failure.
int cmd_compare(const RunConfig &config, std::ostream &out, std::ostream &err);
int cmd_sweep(const RunConfig &config, std::ostream &out, std::ostream &err);

}  // namespace gaussmem::cli
