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
#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <variant>

#include "gaussmem/memory_channel.hpp"
#include "gaussmem/memory_model.hpp"
#include "gaussmem/scenarios.hpp"

namespace gaussmem {

/// Closed interval; lo == hi pins the parameter.
struct Range {
    double lo = 0.0;
    double hi = 0.0;

    static Range fixed(double value) { return {value, value}; }
    double at(double unit) const { return lo + (hi - lo) * unit; }
};

/// Independent random stream for sample `index` of a run seeded with `seed`.
/// The stream depends only on (seed, index), so results do not depend on the
/// order in which samples are evaluated.
class SampleStream {
   public:
    SampleStream(std::uint64_t seed, std::uint64_t index);

    /// Uniform in [0, 1) with 53 random bits.
    double uniform();
    double uniform(const Range &range) { return range.at(uniform()); }

   private:
    std::mt19937_64 engine_;
};

enum class NoiseShape {
    Free,              ///< all four y entries independent
    PhaseInsensitive,  ///< y_pi = y_qi
    QuadratureOnly,    ///< y_pi = 0 (ideal memories)
};

/// Region expressed directly in channel parameters (xi, y).
struct ChannelRegion {
    Range s{1.0, 8.0};
    Range n{1.0, 1.5};
    bool balanced_thermal = false;  ///< N1 == N2
    Range xi{0.7, 1.0};
    bool equal_losses = false;  ///< xi1 == xi2
    Range y{0.0, 1.0};
    NoiseShape shape = NoiseShape::Free;
};

/// Region expressed in memory-cell parameters, mapped through
/// `channel_from_cells`. Defaults follow the loss-factor figures: s = 8,
/// N = 1, Z^2 = 6.4, Delta_q = 0.1, Delta_p = 0.3.
struct CellRegion {
    Range s = Range::fixed(8.0);
    Range n = Range::fixed(1.0);
    bool balanced_thermal = false;
    Range g{0.7, 1.0};
    bool equal_losses = false;  ///< G1 == G2
    Range z_sq = Range::fixed(6.4);
    Range delta_at1{0.0, 1.2};
    Range delta_at2{0.0, 1.2};
    Range delta_q = Range::fixed(0.1);
    Range delta_p = Range::fixed(0.3);
    bool shared_spurious = true;  ///< both cells share Delta_q and Delta_p
    LossNoiseConvention convention = LossNoiseConvention::PureLoss;
};

using SampleRegion = std::variant<ChannelRegion, CellRegion>;

struct Sample {
    std::size_t index = 0;
    InputStateParams input;
    MemoryChannel channel;
    std::optional<std::pair<MemoryCellParams, MemoryCellParams>> cells;
};

Sample draw_sample(const SampleRegion &region, std::uint64_t seed, std::size_t index);

/// Random physical two-mode covariance matrix S diag(v1, v1, v2, v2) S^T with
/// symplectic eigenvalues v_i in [1, 3] and S built from local squeezers,
/// local phase rotations and a beam splitter.
CovMat4 random_physical_cm(SampleStream &rng);

}  // namespace gaussmem
