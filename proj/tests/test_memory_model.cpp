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

#include <gtest/gtest.h>

#include <limits>

#include "gaussmem/errors.hpp"
#include "gaussmem/gaussian_core.hpp"
#include "gaussmem/sampling.hpp"
#include "gaussmem/scenarios.hpp"

using namespace gaussmem;

namespace {

MemoryCellParams cell(double g, double z_sq, double at, double dq = 0.0, double dp = 0.0) {
    return {.g = g, .z_sq = z_sq, .delta_at = at, .delta_q = dq, .delta_p = dp};
}

MemoryCellParams random_cell(SampleStream &rng) {
    return cell(rng.uniform(Range{0.05, 1.0}), rng.uniform(Range{1.0, 20.0}), rng.uniform(Range{0.0, 2.0}),
                rng.uniform(), rng.uniform());
}

}  // namespace

TEST(ChannelFromCells, IdealCellSpinNoise) {
    const MemoryChannel ch = channel_from_cells(cell(1.0, 6.4, 0.8), cell(1.0, 6.4, 0.8));
    EXPECT_NEAR(ch.y_q1, 0.675, 1e-15);
    EXPECT_EQ(ch.y_p1, 0.0);
    EXPECT_EQ(ch.xi1, 1.0);
}

TEST(ChannelFromCells, WorkedExampleNoiseValues) {
    const MemoryChannel ch = channel_from_cells(cell(1.0, 6.4, 0.6), cell(1.0, 6.4, 1.0));
    EXPECT_NEAR(ch.y_q1, 0.50625, 1e-15);
    EXPECT_NEAR(ch.y_q2, 0.84375, 1e-15);
    EXPECT_EQ(ch, ideal_channel(ch.y_q1, ch.y_q2));
}

TEST(ChannelFromCells, InfiniteDetuningPassesSpinNoiseThrough) {
    const double inf = std::numeric_limits<double>::infinity();
    const MemoryChannel ch = channel_from_cells(cell(1.0, inf, 0.37), cell(1.0, inf, 0.0));
    EXPECT_EQ(ch.y_q1, 0.37);
    EXPECT_EQ(ch.y_q2, 0.0);
}

TEST(ChannelFromCells, LosslessCellsKeepSpuriousNoise) {
    for (int i = 0; i < 200; ++i) {
        SampleStream rng(31, i);
        MemoryCellParams c1 = random_cell(rng);
        MemoryCellParams c2 = random_cell(rng);
        c1.g = c2.g = 1.0;
        for (auto conv : {LossNoiseConvention::LiteralFloorZero, LossNoiseConvention::AttenuationStandard,
                          LossNoiseConvention::PureLoss}) {
            const MemoryChannel ch = channel_from_cells(c1, c2, conv);
            EXPECT_EQ(ch.y_p1, c1.delta_p);
            EXPECT_EQ(ch.y_p2, c2.delta_p);
            EXPECT_EQ(ch.xi1, 1.0);
            EXPECT_EQ(ch.xi2, 1.0);
        }
    }
}

TEST(ChannelFromCells, DefaultConventionNeverNegative) {
    for (int i = 0; i < 1000; ++i) {
        SampleStream rng(32, i);
        const MemoryChannel ch = channel_from_cells(random_cell(rng), random_cell(rng));
        EXPECT_GE(ch.y_q1, 0.0);
        EXPECT_GE(ch.y_p1, 0.0);
        EXPECT_GE(ch.y_q2, 0.0);
        EXPECT_GE(ch.y_p2, 0.0);
    }
}

TEST(ChannelFromCells, LossFactorBecomesXi) {
    const MemoryChannel ch = channel_from_cells(cell(0.85, 6.4, 0.9), cell(0.7, 6.4, 0.6));
    EXPECT_EQ(ch.xi1, 0.85);
    EXPECT_EQ(ch.xi2, 0.7);
}

TEST(LossNoiseTerm, Conventions) {
    EXPECT_EQ(loss_noise_term(0.85, LossNoiseConvention::LiteralFloorZero), 0.0);
    EXPECT_NEAR(loss_noise_term(0.85, LossNoiseConvention::AttenuationStandard), 1.0 / 0.7225 - 1.0, 1e-15);
    EXPECT_NEAR(loss_noise_term(0.85, LossNoiseConvention::PureLoss), 1.0 - 0.7225, 1e-15);
    for (auto conv : {LossNoiseConvention::LiteralFloorZero, LossNoiseConvention::AttenuationStandard,
                      LossNoiseConvention::PureLoss}) {
        EXPECT_EQ(loss_noise_term(1.0, conv), 0.0);
    }
}

TEST(LossNoiseTerm, PureLossSaturatesPhysicality) {
    // xi^2 = 1 - sqrt(y_q y_p) exactly when the loss term is the only noise.
    const MemoryChannel ch = channel_from_cells(cell(0.8, 6.4, 0.0), cell(0.9, 6.4, 0.0), LossNoiseConvention::PureLoss);
    EXPECT_TRUE(channel_is_physical(ch));
    MemoryChannel weaker = ch;
    weaker.y_q1 *= 0.99;
    weaker.y_p1 *= 0.99;
    EXPECT_FALSE(channel_is_physical(weaker));
}

TEST(LossNoiseTerm, NamesRoundTrip) {
    for (auto conv : {LossNoiseConvention::LiteralFloorZero, LossNoiseConvention::AttenuationStandard,
                      LossNoiseConvention::PureLoss}) {
        EXPECT_EQ(parse_convention(to_string(conv)), conv);
    }
    EXPECT_FALSE(parse_convention("floor").has_value());
}

TEST(MemoryCellParams, Validation) {
    EXPECT_NO_THROW(cell(1.0, 1.0, 0.0).validate());
    EXPECT_THROW(cell(0.0, 6.4, 0.1).validate(), std::invalid_argument);
    EXPECT_THROW(cell(1.01, 6.4, 0.1).validate(), std::invalid_argument);
    EXPECT_THROW(cell(0.9, 0.9, 0.1).validate(), std::invalid_argument);
    EXPECT_THROW(cell(0.9, 6.4, -0.1).validate(), std::invalid_argument);
    EXPECT_THROW(cell(0.9, 6.4, 0.1, -1e-3).validate(), std::invalid_argument);
    EXPECT_THROW(cell(0.9, 6.4, 0.1, 0.0, std::numeric_limits<double>::quiet_NaN()).validate(),
                 std::invalid_argument);
    EXPECT_THROW(channel_from_cells(cell(0.0, 6.4, 0.1), cell(1.0, 6.4, 0.1)), std::invalid_argument);
}

TEST(IdealChannel, Examples) {
    EXPECT_EQ(ideal_channel(0.0, 0.0), MemoryChannel::identity());
    const MemoryChannel ch = ideal_channel(0.50625, 0.84375);
    EXPECT_EQ(ch, (MemoryChannel{1.0, 1.0, 0.50625, 0.0, 0.84375, 0.0}));
    EXPECT_THROW(ideal_channel(-0.1, 0.0), DomainError);
}

TEST(IdealChannel, SymmetricChannelCommutesWithMixer) {
    const MemoryChannel ch = ideal_channel(0.675, 0.675);
    const Mat4 r = beam_splitter(kFiftyFifty);
    const Mat4 y = Eigen::Vector4d(ch.y_q1, ch.y_p1, ch.y_q2, ch.y_p2).asDiagonal();
    EXPECT_LT((r * y - y * r).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(IdenticalCells, ChannelCommutesWithMixer) {
    for (int i = 0; i < 100; ++i) {
        SampleStream rng(33, i);
        const MemoryCellParams c = random_cell(rng);
        const MemoryChannel ch = channel_from_cells(c, c, LossNoiseConvention::PureLoss);
        const Mat4 r = beam_splitter(kFiftyFifty);
        const Mat4 x = Eigen::Vector4d(ch.xi1, ch.xi1, ch.xi2, ch.xi2).asDiagonal();
        const Mat4 y = Eigen::Vector4d(ch.y_q1, ch.y_p1, ch.y_q2, ch.y_p2).asDiagonal();
        EXPECT_LT((r * x - x * r).cwiseAbs().maxCoeff(), 1e-15);
        EXPECT_LT((r * y - y * r).cwiseAbs().maxCoeff(), 1e-15);
    }
}
