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
#include <filesystem>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gaussmem/memory_channel.hpp"
#include "gaussmem/memory_model.hpp"
#include "gaussmem/scenarios.hpp"

namespace gaussmem::cli {

class ConfigError : public std::runtime_error {
   public:
    explicit ConfigError(const std::string &what) : std::runtime_error(what) {}
};

struct SweepAxis {
    std::string name;  ///< e.g. "cell1.delta_at", "s", "channel.y_q2"
    double min = 0.0;
    double max = 0.0;
    int steps = 25;

    /// Grid value i of steps, endpoints included.
    double value(int i) const;
};

enum class OutputFormat { Csv, Json };

struct RunConfig {
    InputStateParams input_state;
    MemoryCellParams cell1;
    MemoryCellParams cell2;
    std::optional<MemoryChannel> channel_override;  ///< [channel] section
    std::vector<SweepAxis> axes;
    std::string output_path;
    OutputFormat format = OutputFormat::Csv;
    std::uint64_t seed = 0;
    LossNoiseConvention convention = LossNoiseConvention::LiteralFloorZero;

    /// The channel in effect: the override if present, else the cells mapped
    /// through the loss-noise convention.
    MemoryChannel channel() const;

    /// Axis names must be sweepable, steps >= 2, at most two axes.
    void validate() const;
};

/// Names accepted as sweep axes for this configuration.
std::vector<std::string> sweepable_parameters(const RunConfig &config);

/// Sets the parameter named like a sweep axis. Throws ConfigError for unknown names.
void set_parameter(RunConfig &config, std::string_view name, double value);

/// Flat key-value file with sections [input_state], [cell1], [cell2],
/// optional [channel], [sweep] and [output]. Lines starting with ';' or '#'
/// are comments.
RunConfig parse_config(std::istream &in);
RunConfig load_config(const std::filesystem::path &path);

/// "25x25" -> {25, 25}; "40" -> {40}.
std::vector<int> parse_grid(std::string_view text);

}  // namespace gaussmem::cli
