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

#include "gaussmem/sampling.hpp"

#include <cmath>
#include <numbers>

namespace gaussmem {

namespace {

std::seed_seq stream_seed(std::uint64_t seed, std::uint64_t index) {
    const auto lo = [](std::uint64_t v) { return static_cast<std::uint32_t>(v & 0xffffffffu); };
    const auto hi = [](std::uint64_t v) { return static_cast<std::uint32_t>(v >> 32); };
    return std::seed_seq{lo(seed), hi(seed), lo(index), hi(index)};
}

InputStateParams draw_input(SampleStream &rng, const Range &s, const Range &n, bool balanced) {
    InputStateParams input;
    input.s = rng.uniform(s);
    input.n1 = rng.uniform(n);
    const double n2 = rng.uniform(n);
    input.n2 = balanced ? input.n1 : n2;
    return input;
}

Mat4 local_symplectic(SampleStream &rng) {
    Mat4 out = Mat4::Zero();
    for (int mode = 0; mode < 2; ++mode) {
        const double r = rng.uniform(Range{-1.5, 1.5});
        const double phi = rng.uniform(Range{0.0, 2.0 * std::numbers::pi});
        Mat2 rot;
        rot << std::cos(phi), std::sin(phi), -std::sin(phi), std::cos(phi);
        const Mat2 squeeze = Eigen::Vector2d(std::exp(r), std::exp(-r)).asDiagonal();
        out.block<2, 2>(2 * mode, 2 * mode) = rot * squeeze;
    }
    return out;
}

Sample draw(const ChannelRegion &region, SampleStream &rng) {
    Sample out;
    out.input = draw_input(rng, region.s, region.n, region.balanced_thermal);
    MemoryChannel &ch = out.channel;
    ch.xi1 = rng.uniform(region.xi);
    const double xi2 = rng.uniform(region.xi);
    ch.xi2 = region.equal_losses ? ch.xi1 : xi2;
    ch.y_q1 = rng.uniform(region.y);
    ch.y_p1 = rng.uniform(region.y);
    ch.y_q2 = rng.uniform(region.y);
    ch.y_p2 = rng.uniform(region.y);
    switch (region.shape) {
        case NoiseShape::Free:
            break;
        case NoiseShape::PhaseInsensitive:
            ch.y_p1 = ch.y_q1;
            ch.y_p2 = ch.y_q2;
            break;
        case NoiseShape::QuadratureOnly:
            ch.y_p1 = 0.0;
            ch.y_p2 = 0.0;
            break;
    }
    return out;
}

Sample draw(const CellRegion &region, SampleStream &rng) {
    Sample out;
    out.input = draw_input(rng, region.s, region.n, region.balanced_thermal);
    MemoryCellParams c1;
    MemoryCellParams c2;
    c1.g = rng.uniform(region.g);
    const double g2 = rng.uniform(region.g);
    c2.g = region.equal_losses ? c1.g : g2;
    c1.z_sq = rng.uniform(region.z_sq);
    c2.z_sq = rng.uniform(region.z_sq);
    c1.delta_at = rng.uniform(region.delta_at1);
    c2.delta_at = rng.uniform(region.delta_at2);
    c1.delta_q = rng.uniform(region.delta_q);
    c1.delta_p = rng.uniform(region.delta_p);
    const double dq2 = rng.uniform(region.delta_q);
    const double dp2 = rng.uniform(region.delta_p);
    c2.delta_q = region.shared_spurious ? c1.delta_q : dq2;
    c2.delta_p = region.shared_spurious ? c1.delta_p : dp2;
    out.channel = channel_from_cells(c1, c2, region.convention);
    out.cells = std::pair{c1, c2};
    return out;
}

}  // namespace

SampleStream::SampleStream(std::uint64_t seed, std::uint64_t index) {
    std::seed_seq seq = stream_seed(seed, index);
    engine_.seed(seq);
}

double SampleStream::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

CovMat4 random_physical_cm(SampleStream &rng) {
    const double v1 = rng.uniform(Range{1.0, 3.0});
    const double v2 = rng.uniform(Range{1.0, 3.0});
    const Mat4 williamson = Eigen::Vector4d(v1, v1, v2, v2).asDiagonal();
    const Mat4 inner = local_symplectic(rng);
    const Mat4 mix = beam_splitter(rng.uniform(Range{0.0, std::numbers::pi}));
    const Mat4 outer = local_symplectic(rng);
    return congruence(outer * mix * inner, CovMat4(williamson));
}

Sample draw_sample(const SampleRegion &region, std::uint64_t seed, std::size_t index) {
    SampleStream rng(seed, index);
    Sample out = std::visit([&rng](const auto &r) { return draw(r, rng); }, region);
    out.index = index;
    return out;
}

}  // namespace gaussmem
