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

#include <cmath>
#include <stdexcept>

#include "gaussmem/errors.hpp"

namespace gaussmem {

namespace {

Mat4 loss_matrix(const MemoryChannel &channel) {
    return Eigen::Vector4d(channel.xi1, channel.xi1, channel.xi2, channel.xi2).asDiagonal();
}

Mat4 rotated_noise(const Mat4 &rotation, const MemoryChannel &channel) {
    const Mat4 y = Eigen::Vector4d(channel.y_q1, channel.y_p1, channel.y_q2, channel.y_p2).asDiagonal();
    return rotation * y * rotation.transpose();
}

CovMat4 symmetrized(const Mat4 &m) { return CovMat4(0.5 * (m + m.transpose())); }

}  // namespace

void InputStateParams::validate() const {
    if (!(s > 0.0) || !std::isfinite(s)) {
        throw std::invalid_argument("squeezing parameter s must be positive and finite");
    }
    if (!(n1 >= 1.0) || !(n2 >= 1.0) || !std::isfinite(n1) || !std::isfinite(n2)) {
        throw std::invalid_argument("thermal broadenings N1, N2 must be finite and >= 1");
    }
}

bool InputStateParams::assumption_holds() const {
    const double ratio = n2 / n1;
    return 1.0 / (s * s) <= ratio && ratio <= s * s;
}

CovMat4 input_cm(const InputStateParams &params) {
    params.validate();
    const double s = params.s;
    return CovMat4::diagonal(s * params.n1, params.n1 / s, params.n2 / s, params.n2 * s);
}

CovMat4 sigma_a(const InputStateParams &params, const MemoryChannel &channel) {
    const CovMat4 mixed = congruence(beam_splitter(kFiftyFifty), input_cm(params));
    return apply_channel(mixed, channel);
}

CovMat4 sigma_b(const InputStateParams &params, const MemoryChannel &channel) {
    const Mat4 r = beam_splitter(kFiftyFifty);
    const CovMat4 stored = apply_channel(input_cm(params), channel);
    const Mat4 signal = r * stored.matrix() * r.transpose();
    return symmetrized(signal);
}

CovMat4 sigma_theta(const InputStateParams &params, const MemoryChannel &channel, double theta) {
    if (std::abs(channel.xi1 - channel.xi2) > kSymmetryTolerance) {
        throw UnsupportedConfiguration("the interpolating family needs equal losses xi1 == xi2");
    }
    const Mat4 x = loss_matrix(channel);
    const CovMat4 lossy_input(x * input_cm(params).matrix() * x.transpose());
    const Mat4 signal = congruence(beam_splitter(kFiftyFifty), lossy_input).matrix();
    return symmetrized(signal + rotated_noise(beam_splitter(theta), channel));
}

ScenarioPair compare(const InputStateParams &params, const MemoryChannel &channel) {
    CovMat4 a = sigma_a(params, channel);
    CovMat4 b = sigma_b(params, channel);
    const ScenarioMetrics ma = metrics(a);
    const ScenarioMetrics mb = metrics(b);
    return {std::move(a),
            std::move(b),
            ma,
            mb,
            mb.log_neg - ma.log_neg,
            clamped_fidelity(mb.fidelity) - clamped_fidelity(ma.fidelity)};
}

}  // namespace gaussmem
