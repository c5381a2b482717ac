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

#include <optional>
#include <string_view>

#include "gaussmem/memory_channel.hpp"

namespace gaussmem {

/// Experimental parameters of one QND-feedback memory cell.
struct MemoryCellParams {
    double g = 1.0;         ///< loss factor G, 0 < G <= 1
    double z_sq = 6.4;      ///< detuning parameter Z^2 >= 1 (may be +inf)
    double delta_at = 0.0;  ///< initial atomic pseudo-spin variance
    double delta_q = 0.0;   ///< spurious noise on q
    double delta_p = 0.0;   ///< spurious noise on p

    /// Throws std::invalid_argument when out of range.
    void validate() const;

    bool operator==(const MemoryCellParams &) const = default;
};

/// How the loss contribution to the additive noise is evaluated for G < 1.
///
/// The textbook expression (1 - 1/G^2) is negative for G < 1:
///  - LiteralFloorZero keeps it but floors it at zero (so G only scales);
///  - AttenuationStandard uses 1/G^2 - 1 (input-referred attenuation noise);
///  - PureLoss uses 1 - G^2, the noise of a pure-loss channel with
///    transmissivity G^2, which saturates the physicality bound.
/// The lossy example configurations use PureLoss.
enum class LossNoiseConvention { LiteralFloorZero, AttenuationStandard, PureLoss };

double loss_noise_term(double g, LossNoiseConvention convention);

std::string_view to_string(LossNoiseConvention convention);

/// Accepts "literal", "attenuation" and "loss".
std::optional<LossNoiseConvention> parse_convention(std::string_view name);

/// xi_i = G_i,
/// y_qi = (1 - 1/Z_i^2) Delta_Ati + loss(G_i) + Delta_qi,
/// y_pi = loss(G_i) + Delta_pi.
MemoryChannel channel_from_cells(const MemoryCellParams &cell1, const MemoryCellParams &cell2,
                                 LossNoiseConvention convention = LossNoiseConvention::LiteralFloorZero);

/// Memories whose only noise is the atomic pseudo-spin variance:
/// xi = 1, y_p = 0. Throws DomainError for negative noise.
MemoryChannel ideal_channel(double y_q1, double y_q2);

}  // namespace gaussmem
