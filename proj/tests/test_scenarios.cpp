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

#include "gaussmem/scenarios.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "gaussmem/errors.hpp"
#include "gaussmem/memory_model.hpp"
#include "gaussmem/sampling.hpp"
#include "oracles.hpp"

using namespace gaussmem;

namespace {

double max_abs(const Mat4 &m) { return m.cwiseAbs().maxCoeff(); }

oracle::Channel to_oracle(const MemoryChannel &c) { return {c.xi1, c.xi2, c.y_q1, c.y_p1, c.y_q2, c.y_p2}; }

MemoryCellParams cell(double g, double at, double dq = 0.0, double dp = 0.0) {
    return {.g = g, .z_sq = 6.4, .delta_at = at, .delta_q = dq, .delta_p = dp};
}

const ChannelRegion kFree{.xi = Range{0.5, 1.0}, .y = Range{0.0, 2.0}};

}  // namespace

// ---------- InputStateParams / input_cm ----------
TEST(InputState, Validation) {
    EXPECT_NO_THROW((InputStateParams{0.5, 1.0, 1.0}.validate()));
    EXPECT_THROW((InputStateParams{0.0, 1.0, 1.0}.validate()), std::invalid_argument);
    EXPECT_THROW((InputStateParams{4.0, 0.9, 1.0}.validate()), std::invalid_argument);
    EXPECT_THROW((InputStateParams{4.0, 1.0, 0.99}.validate()), std::invalid_argument);
}

TEST(InputState, AssumptionBoundary) {
    EXPECT_TRUE((InputStateParams{4.0, 1.0, 16.0}.assumption_holds()));
    EXPECT_FALSE((InputStateParams{4.0, 1.0, 16.0 * 1.01}.assumption_holds()));
    EXPECT_FALSE((InputStateParams{2.0, 4.0 * 1.01, 1.0}.assumption_holds()));
}

TEST(InputCm, Examples) {
    EXPECT_EQ(input_cm({1.0, 1.0, 1.0}), CovMat4::identity());
    EXPECT_EQ(input_cm({4.0, 1.0, 1.0}).matrix(), oracle::input_cm(4.0, 1.0, 1.0));
    const Mat4 fig = input_cm({8.0, 1.4, 1.2}).matrix();
    EXPECT_NEAR(fig(0, 0), 11.2, 1e-12);
    EXPECT_NEAR(fig(1, 1), 0.175, 1e-12);
    EXPECT_NEAR(fig(2, 2), 0.15, 1e-12);
    EXPECT_NEAR(fig(3, 3), 9.6, 1e-12);
}

// ---------- sigma_a / sigma_b ----------
TEST(SigmaA, IdentityChannelOnVacuum) {
    EXPECT_LT(max_abs(sigma_a({1.0, 1.0, 1.0}, MemoryChannel::identity()).matrix() - Mat4::Identity()), 1e-15);
}

TEST(SigmaA, NoiselessSqueezedPair) {
    const ScenarioMetrics m = metrics(sigma_a({4.0, 1.0, 1.0}, MemoryChannel::identity()));
    EXPECT_NEAR(m.nu_tilde, std::sqrt(oracle::smaller_root(16.0 + 1.0 / 16.0, 1.0)), 1e-12);
    EXPECT_NEAR(m.nu_tilde, 0.25, 1e-12);
    EXPECT_NEAR(m.log_neg, 2.0, 1e-10);
}

TEST(Scenarios, MatchExplicitProducts) {
    for (int i = 0; i < 500; ++i) {
        const Sample smp = draw_sample(kFree, 41, i);
        const auto [a, b] = oracle::scenarios(smp.input.s, smp.input.n1, smp.input.n2, to_oracle(smp.channel));
        EXPECT_LT(max_abs(sigma_a(smp.input, smp.channel).matrix() - a), 1e-11) << i;
        EXPECT_LT(max_abs(sigma_b(smp.input, smp.channel).matrix() - b), 1e-11) << i;
    }
}

TEST(Scenarios, WorkedIdealExample) {
    // Cell order 0.6 / 1.0. The model puts the larger value in scenario a.
    const ScenarioPair pair = compare({4.0, 1.0, 1.0}, ideal_channel(0.50625, 0.84375));
    const auto [a, b] = oracle::scenarios(4.0, 1.0, 1.0, {1, 1, 0.50625, 0, 0.84375, 0});
    EXPECT_NEAR(pair.metrics_a.log_neg, oracle::log_neg(a), 1e-8);
    EXPECT_NEAR(pair.metrics_b.log_neg, oracle::log_neg(b), 1e-8);
    EXPECT_NEAR(pair.metrics_a.log_neg, 1.06, 0.01);
    EXPECT_NEAR(pair.metrics_b.log_neg, 0.94, 0.01);
    EXPECT_NEAR(std::abs(pair.delta_logneg), 0.12, 0.01);
}

TEST(SigmaB, IdentityChannelEqualsSigmaA) {
    for (int i = 0; i < 100; ++i) {
        const Sample smp = draw_sample(kFree, 42, i);
        EXPECT_LT(max_abs(sigma_a(smp.input, {}).matrix() - sigma_b(smp.input, {}).matrix()), 1e-12);
    }
}

TEST(SigmaB, IdenticalCellsCollapse) {
    for (int i = 0; i < 1000; ++i) {
        Sample smp = draw_sample(kFree, 43, i);
        smp.channel.xi2 = smp.channel.xi1;
        smp.channel.y_q2 = smp.channel.y_q1;
        smp.channel.y_p2 = smp.channel.y_p1;
        EXPECT_LT(max_abs(sigma_a(smp.input, smp.channel).matrix() - sigma_b(smp.input, smp.channel).matrix()), 1e-12);
    }
}

TEST(Scenarios, DeterminantGrowsWithNoise) {
    for (int i = 0; i < 500; ++i) {
        const Sample smp = draw_sample(kFree, 44, i);
        MemoryChannel lossy_only = smp.channel;
        lossy_only.y_q1 = lossy_only.y_p1 = lossy_only.y_q2 = lossy_only.y_p2 = 0.0;
        const double det_a = oracle::det4(sigma_a(smp.input, smp.channel).matrix());
        const double det_b = oracle::det4(sigma_b(smp.input, smp.channel).matrix());
        EXPECT_GE(det_a, oracle::det4(sigma_a(smp.input, lossy_only).matrix()) * (1 - 1e-12));
        EXPECT_GE(det_b, oracle::det4(sigma_b(smp.input, lossy_only).matrix()) * (1 - 1e-12));
    }
}

TEST(Scenarios, MirroredMixerGivesSameEntanglement) {
    // Relabelling the modes maps R(pi/4) to R(-pi/4), s to 1/s and swaps the cells.
    const Mat4 swap = (Mat4() << 0, 0, 1, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 1, 0, 0).finished();
    for (int i = 0; i < 300; ++i) {
        const Sample smp = draw_sample(kFree, 45, i);
        const MemoryChannel &c = smp.channel;
        const oracle::Channel swapped{c.xi2, c.xi1, c.y_q2, c.y_p2, c.y_q1, c.y_p1};
        const auto [a, b] =
            oracle::scenarios(1.0 / smp.input.s, smp.input.n2, smp.input.n1, swapped, -std::numbers::pi / 4);
        const Mat4 ours_a = sigma_a(smp.input, c).matrix();
        const Mat4 ours_b = sigma_b(smp.input, c).matrix();
        EXPECT_LT(max_abs(swap * ours_a * swap.transpose() - a), 1e-11);
        EXPECT_LT(max_abs(swap * ours_b * swap.transpose() - b), 1e-11);
        EXPECT_NEAR(metrics(sigma_a(smp.input, c)).nu_tilde, oracle::nu_tilde_eigen(a), 1e-8);
    }
}

TEST(Scenarios, MixerSignDoesNotChangeEntanglement) {
    for (int i = 0; i < 300; ++i) {
        const Sample smp = draw_sample(kFree, 46, i);
        const auto [a, b] = oracle::scenarios(smp.input.s, smp.input.n1, smp.input.n2, to_oracle(smp.channel),
                                              -std::numbers::pi / 4);
        const ScenarioPair pair = compare(smp.input, smp.channel);
        EXPECT_NEAR(pair.metrics_a.nu_tilde, oracle::nu_tilde_eigen(a), 1e-8);
        EXPECT_NEAR(pair.metrics_b.nu_tilde, oracle::nu_tilde_eigen(b), 1e-8);
    }
}

// ---------- sigma_theta ----------
TEST(SigmaTheta, EndpointsAreTheScenarios) {
    const ChannelRegion equal{.xi = Range{0.5, 1.0}, .equal_losses = true, .y = Range{0.0, 2.0}};
    for (int i = 0; i < 200; ++i) {
        const Sample smp = draw_sample(equal, 47, i);
        EXPECT_LT(max_abs(sigma_theta(smp.input, smp.channel, 0.0).matrix() - sigma_a(smp.input, smp.channel).matrix()),
                  1e-12);
        EXPECT_LT(max_abs(sigma_theta(smp.input, smp.channel, kFiftyFifty).matrix() -
                          sigma_b(smp.input, smp.channel).matrix()),
                  1e-12);
    }
}

TEST(SigmaTheta, NoNoiseMeansNoThetaDependence) {
    MemoryChannel ch;
    ch.xi1 = ch.xi2 = 0.8;
    const CovMat4 ref = sigma_theta({5.0, 1.2, 1.1}, ch, 0.0);
    for (double theta : {0.1, 0.4, 0.7, 2.0}) {
        EXPECT_LT(max_abs(sigma_theta({5.0, 1.2, 1.1}, ch, theta).matrix() - ref.matrix()), 1e-12);
    }
}

TEST(SigmaTheta, UnequalLossesRejected) {
    MemoryChannel ch;
    ch.xi1 = 0.9;
    ch.xi2 = 0.8;
    EXPECT_THROW(sigma_theta({4.0, 1.0, 1.0}, ch, 0.3), UnsupportedConfiguration);
}

TEST(SigmaTheta, MetricsContinuousInTheta) {
    const ChannelRegion equal{.equal_losses = true};
    for (int i = 0; i < 20; ++i) {
        const Sample smp = draw_sample(equal, 48, i);
        constexpr int kPoints = 100;
        const double h = kFiftyFifty / (kPoints - 1);
        std::vector<double> nu(kPoints);
        for (int k = 0; k < kPoints; ++k) {
            nu[k] = metrics(sigma_theta(smp.input, smp.channel, k * h)).nu_tilde;
        }
        for (int k = 1; k + 1 < kPoints; ++k) {
            const double local = std::max(std::abs(nu[k + 1] - nu[k - 1]) / 2.0, 1e-9);
            EXPECT_LE(std::abs(nu[k] - nu[k - 1]), 10.0 * local) << "sample " << i << " point " << k;
        }
    }
}

// ---------- compare ----------
TEST(Compare, DeltasConsistentWithMetrics) {
    for (int i = 0; i < 500; ++i) {
        const Sample smp = draw_sample(kFree, 49, i);
        const ScenarioPair p = compare(smp.input, smp.channel);
        EXPECT_NEAR(p.delta_logneg, p.metrics_b.log_neg - p.metrics_a.log_neg, 1e-12);
        EXPECT_NEAR(p.delta_fidelity,
                    std::max(p.metrics_b.fidelity, 0.5) - std::max(p.metrics_a.fidelity, 0.5), 1e-12);
        const auto [fa, fb] = oracle::fidelities(smp.input.s, smp.input.n1, smp.input.n2, to_oracle(smp.channel));
        EXPECT_NEAR(p.metrics_a.fidelity, fa, 1e-10);
        EXPECT_NEAR(p.metrics_b.fidelity, fb, 1e-10);
    }
}

TEST(Compare, SurvivalFlipUnderPureLoss) {
    const MemoryChannel ch =
        channel_from_cells(cell(0.85, 0.9, 0.2, 0.4), cell(0.85, 0.6, 0.2, 0.4), LossNoiseConvention::PureLoss);
    const ScenarioPair p = compare({5.0, 1.0, 1.0}, ch);
    EXPECT_EQ(p.metrics_a.log_neg, 0.0);
    EXPECT_GT(p.metrics_b.log_neg, 0.0);
}

TEST(Compare, IdenticalCellsGiveZeroDeltas) {
    const MemoryChannel ch = channel_from_cells(cell(0.9, 0.8, 0.1, 0.3), cell(0.9, 0.8, 0.1, 0.3));
    const ScenarioPair p = compare({5.0, 1.2, 1.2}, ch);
    EXPECT_NEAR(p.delta_logneg, 0.0, 1e-12);
    EXPECT_NEAR(p.delta_fidelity, 0.0, 1e-12);
}

TEST(Compare, ClampedFidelity) {
    EXPECT_EQ(clamped_fidelity(0.3), 0.5);
    EXPECT_EQ(clamped_fidelity(0.7), 0.7);
}
