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

#include <numbers>

#include "gaussmem/gaussian_core.hpp"
#include "gaussmem/memory_channel.hpp"

namespace gaussmem {

/// Two single-mode squeezed inputs with thermal broadening:
/// sigma0 = diag(s N1, N1/s, N2/s, N2 s).
///
/// s >= 1 is the phase orientation that the storage criterion assumes;
/// 0 < s < 1 is accepted to probe the opposite orientation.
struct InputStateParams {
    double s = 1.0;
    double n1 = 1.0;
    double n2 = 1.0;

    /// Throws std::invalid_argument unless s > 0 and n1, n2 >= 1.
    void validate() const;

    /// 1/s^2 <= N2/N1 <= s^2.
    bool assumption_holds() const;

    bool operator==(const InputStateParams &) const = default;
};

/// Both final states with their metrics.
/// delta_logneg = E_N(b) - E_N(a), delta_fidelity = max(F_b, 1/2) - max(F_a, 1/2).
struct ScenarioPair {
    CovMat4 sigma_a;
    CovMat4 sigma_b;
    ScenarioMetrics metrics_a;
    ScenarioMetrics metrics_b;
    double delta_logneg = 0.0;
    double delta_fidelity = 0.0;
};

inline constexpr double kFiftyFifty = std::numbers::pi / 4.0;

CovMat4 input_cm(const InputStateParams &params);

/// Store entanglement: X R sigma0 R^T X^T + Y.
CovMat4 sigma_a(const InputStateParams &params, const MemoryChannel &channel);

/// Store squeezing: R X sigma0 X^T R^T + R Y R^T.
CovMat4 sigma_b(const InputStateParams &params, const MemoryChannel &channel);

/// Interpolating family R X sigma0 X^T R^T + R_theta Y R_theta^T, equal to
/// sigma_a at theta = 0 and to sigma_b at theta = pi/4. Only defined for
/// equal losses; throws UnsupportedConfiguration otherwise.
CovMat4 sigma_theta(const InputStateParams &params, const MemoryChannel &channel, double theta);

ScenarioPair compare(const InputStateParams &params, const MemoryChannel &channel);

/// max(F, 1/2): fidelity above the measure-and-prepare threshold.
inline double clamped_fidelity(double fidelity) { return fidelity > 0.5 ? fidelity : 0.5; }

}  // namespace gaussmem
