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

#include <cstddef>
#include <nlohmann/json.hpp>
#include <ostream>
#include <string>
#include <vector>

#include "gaussmem/memory_channel.hpp"
#include "gaussmem/scenarios.hpp"

namespace gaussmem::cli {

/// One grid point of a sweep.
struct SweepRecord {
    std::vector<double> axis_values;
    double nu_tilde_a = 0.0;
    double nu_tilde_b = 0.0;
    double logneg_a = 0.0;
    double logneg_b = 0.0;
    double delta_logneg = 0.0;  ///< logneg_b - logneg_a
    double fidelity_a = 0.0;    ///< unclamped
    double fidelity_b = 0.0;    ///< unclamped
    double delta_fidelity_clamped = 0.0;  ///< max(F_b, 1/2) - max(F_a, 1/2)
    bool channel_physical = true;
    bool state_a_physical = true;
    bool state_b_physical = true;
};

/// Columns after the axis columns, in output order:
/// nu_tilde_a, nu_tilde_b, logneg_a, logneg_b, delta_logneg, fidelity_a,
/// fidelity_b, delta_fidelity_clamped, channel_physical, state_a_physical,
/// state_b_physical.
const std::vector<std::string> &metric_columns();

SweepRecord make_record(std::vector<double> axis_values, const InputStateParams &input,
                        const MemoryChannel &channel);

/// 12 significant digits in %g style, with '.' as the
/// decimal separator regardless of locale.
std::string format_number(double value);

void write_csv(std::ostream &out, const std::vector<std::string> &axis_names,
               const std::vector<SweepRecord> &records);

nlohmann::ordered_json record_json(const std::vector<std::string> &axis_names, const SweepRecord &record);

struct SweepSummary {
    std::size_t points = 0;
    std::size_t logneg_b_better = 0;  ///< delta_logneg > 0
    std::size_t logneg_a_better = 0;  ///< delta_logneg < 0
    std::size_t fidelity_b_better = 0;
    std::size_t fidelity_a_better = 0;
    std::size_t separable_a = 0;
    std::size_t separable_b = 0;
    std::size_t unphysical_channels = 0;
};

SweepSummary summarize(const std::vector<SweepRecord> &records);

void print_summary(std::ostream &out, const SweepSummary &summary);

nlohmann::ordered_json summary_json(const SweepSummary &summary);

}  // namespace gaussmem::cli
