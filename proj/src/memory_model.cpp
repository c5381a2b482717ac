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

#include "gaussmem/memory_model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "gaussmem/errors.hpp"

namespace gaussmem {

void MemoryCellParams::validate() const {
    if (!(g > 0.0 && g <= 1.0)) {
        throw std::invalid_argument("loss factor G must lie in (0, 1]");
    }
    if (!(z_sq >= 1.0)) {
        throw std::invalid_argument("detuning parameter Z^2 must be >= 1");
    }
    for (double d : {delta_at, delta_q, delta_p}) {
        if (!(d >= 0.0) || !std::isfinite(d)) {
            throw std::invalid_argument("cell noise variances must be finite and non-negative");
        }
    }
}

double loss_noise_term(double g, LossNoiseConvention convention) {
    const double inv_sq = 1.0 / (g * g);
    switch (convention) {
        case LossNoiseConvention::LiteralFloorZero:
            return std::max(0.0, 1.0 - inv_sq);
        case LossNoiseConvention::AttenuationStandard:
            return inv_sq - 1.0;
        case LossNoiseConvention::PureLoss:
            return 1.0 - g * g;
    }
    throw std::invalid_argument("unknown loss-noise convention");
}

std::string_view to_string(LossNoiseConvention convention) {
    switch (convention) {
        case LossNoiseConvention::LiteralFloorZero:
            return "literal";
        case LossNoiseConvention::AttenuationStandard:
            return "attenuation";
        case LossNoiseConvention::PureLoss:
            return "loss";
    }
    return "unknown";
}

std::optional<LossNoiseConvention> parse_convention(std::string_view name) {
    if (name == "literal") return LossNoiseConvention::LiteralFloorZero;
    if (name == "attenuation") return LossNoiseConvention::AttenuationStandard;
    if (name == "loss") return LossNoiseConvention::PureLoss;
    return std::nullopt;
}

MemoryChannel channel_from_cells(const MemoryCellParams &cell1, const MemoryCellParams &cell2,
                                 LossNoiseConvention convention) {
    cell1.validate();
    cell2.validate();
    const auto quadratures = [convention](const MemoryCellParams &c) {
        const double loss = loss_noise_term(c.g, convention);
        const double spin = (1.0 - 1.0 / c.z_sq) * c.delta_at;
        return std::pair{spin + loss + c.delta_q, loss + c.delta_p};
    };
    const auto [yq1, yp1] = quadratures(cell1);
    const auto [yq2, yp2] = quadratures(cell2);
    return {cell1.g, cell2.g, yq1, yp1, yq2, yp2};
}

MemoryChannel ideal_channel(double y_q1, double y_q2) {
    if (!(y_q1 >= 0.0) || !(y_q2 >= 0.0)) {
        throw DomainError("ideal-memory noise must be non-negative");
    }
    return {1.0, 1.0, y_q1, 0.0, y_q2, 0.0};
}

}  // namespace gaussmem
